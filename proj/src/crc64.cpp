#include "boilerplate/crc64.hpp"

#include <array>

namespace boilerplate {

namespace {

constexpr std::uint64_t kPoly = 0x42F0E1EBA9EA3693ULL;

constexpr std::array<std::uint64_t, 256> make_table() {
  std::array<std::uint64_t, 256> table{};
  for (std::uint64_t n = 0; n < 256; ++n) {
    std::uint64_t crc = n << 56;
    for (int bit = 0; bit < 8; ++bit) {
      crc = (crc & (1ULL << 63)) ? (crc << 1) ^ kPoly : crc << 1;
    }
    table[n] = crc;
  }
  return table;
}

constexpr auto kTable = make_table();

}  // namespace

std::uint64_t crc64_update(std::uint64_t crc, std::span<const std::byte> data) noexcept {
  for (std::byte b : data) {
    crc = kTable[((crc >> 56) ^ static_cast<std::uint64_t>(b)) & 0xff] ^ (crc << 8);
  }
  return crc;
}

std::uint64_t crc64(std::span<const std::byte> data) noexcept { return crc64_update(0, data); }

std::uint64_t crc64(std::string_view text) noexcept {
  return crc64(std::as_bytes(std::span(text.data(), text.size())));
}

}  // namespace boilerplate
