#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "boilerplate/errors.hpp"

namespace boilerplate {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

/// Generalized Majority (Misra-Gries) frequent-item summary over `c` counters.
///
/// Per element: a monitored item has its counter incremented; otherwise, if
/// some counter is zero it is reassigned to the item and incremented;
/// otherwise every counter is decremented. Counters with equal value share a
/// group, groups are kept in ascending order, and values are stored relative
/// to a global offset, so decrementing all counters is a single increment of
/// the offset. Every operation is O(1) apart from hashing.
///
/// A counter that has dropped to zero still monitors its item until it is
/// reassigned.
template <typename Item, typename Hash = std::hash<Item>, typename Eq = std::equal_to<>>
class GeneralizedMajority {
 public:
  using Entry = std::pair<Item, std::uint64_t>;

  explicit GeneralizedMajority(std::size_t counters) : capacity_(counters) {
    if (counters == 0) throw ConfigError("GM needs at least one counter");
  }

  GeneralizedMajority(const GeneralizedMajority&) = delete;
  GeneralizedMajority& operator=(const GeneralizedMajority&) = delete;
  GeneralizedMajority(GeneralizedMajority&&) noexcept = default;
  GeneralizedMajority& operator=(GeneralizedMajority&&) noexcept = default;

  template <typename Key>
  void offer(const Key& key) {
    ++length_;
    if (auto it = index_.find(key); it != index_.end()) {
      increment(it->second);
      return;
    }
    if (index_.size() < capacity_) {
      adopt(Item(key));
    } else if (groups_.front().stored == offset_) {
      evict_zero();
      adopt(Item(key));
    } else {
      ++offset_;
    }
  }

  /// Offers `key` `weight` times in a row.
  template <typename Key>
  void offer(const Key& key, std::uint64_t weight) {
    for (std::uint64_t i = 0; i < weight; ++i) offer(key);
  }

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return index_.size(); }
  std::uint64_t stream_length() const noexcept { return length_; }

  template <typename Key>
  bool monitors(const Key& key) const {
    return index_.find(key) != index_.end();
  }

  /// Counter value of a monitored item, nullopt otherwise.
  template <typename Key>
  std::optional<std::uint64_t> counter(const Key& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second.group->stored - offset_;
  }

  /// Monitored items ordered by counter descending, ties by item ascending.
  std::vector<Entry> monitored() const {
    std::vector<Entry> out;
    out.reserve(index_.size());
    for (const auto& [item, slot] : index_) out.emplace_back(item, slot.group->stored - offset_);
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return out;
  }

  /// The `m` monitored items with the largest counters, ordered as monitored().
  std::vector<Entry> top(std::size_t m) const {
    auto all = monitored();
    if (all.size() > m) all.resize(m);
    return all;
  }

 private:
  struct Group;
  using GroupIter = typename std::list<Group>::iterator;
  using MemberList = std::list<const Item*>;

  struct Group {
    std::uint64_t stored;
    MemberList members;
  };

  struct Slot {
    GroupIter group;
    typename MemberList::iterator member;
  };

  using Index = std::unordered_map<Item, Slot, Hash, Eq>;

  // Group holding `stored`, searching forward from `pos` and inserting one in
  // order if absent. Callers pass a `pos` at most two steps away.
  GroupIter group_at(GroupIter pos, std::uint64_t stored) {
    while (pos != groups_.end() && pos->stored < stored) ++pos;
    if (pos != groups_.end() && pos->stored == stored) return pos;
    return groups_.insert(pos, Group{stored, {}});
  }

  void adopt(Item item) {
    auto it = index_.emplace(std::move(item), Slot{}).first;
    // A fresh counter has value 1; at most the zero group precedes it.
    auto group = group_at(groups_.begin(), offset_ + 1);
    group->members.push_back(&it->first);
    it->second = Slot{group, std::prev(group->members.end())};
  }

  void increment(Slot& slot) {
    auto from = slot.group;
    auto to = group_at(std::next(from), from->stored + 1);
    to->members.splice(to->members.end(), from->members, slot.member);
    slot.group = to;
    if (from->members.empty()) groups_.erase(from);
  }

  void evict_zero() {
    auto group = groups_.begin();
    const Item* victim = group->members.front();
    group->members.pop_front();
    if (group->members.empty()) groups_.erase(group);
    index_.erase(index_.find(*victim));
  }

  std::size_t capacity_;
  std::uint64_t offset_ = 0;
  std::uint64_t length_ = 0;
  std::list<Group> groups_;
  Index index_;
};

using StringMajority = GeneralizedMajority<std::string, StringHash>;

}  // namespace boilerplate
