#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

namespace boilerplate {

/// CRC-64/ECMA-182: polynomial 0x42F0E1EBA9EA3693, MSB-first, init 0, no final xor.
/// Check value for "123456789" is 0x6C40DF5F0B497347.
std::uint64_t crc64(std::span<const std::byte> data) noexcept;
std::uint64_t crc64(std::string_view text) noexcept;

/// Incremental form: feed chunks starting from crc = 0.
std::uint64_t crc64_update(std::uint64_t crc, std::span<const std::byte> data) noexcept;

/// 64-bit identity of a normalized line.
struct LineKey {
  std::uint64_t value = 0;

  friend auto operator<=>(const LineKey&, const LineKey&) = default;
};

inline LineKey line_key(std::string_view text) noexcept { return LineKey{crc64(text)}; }

}  // namespace boilerplate

template <>
struct std::hash<boilerplate::LineKey> {
  std::size_t operator()(const boilerplate::LineKey& key) const noexcept {
    return std::hash<std::uint64_t>{}(key.value);
  }
};
