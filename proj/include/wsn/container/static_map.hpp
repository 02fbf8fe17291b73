#pragma once

#include <array>
#include <cstddef>

#include "wsn/core/types.hpp"

namespace wsn {

/// Ordered associative container over a flat, sorted in-place array.
/// Lookup is binary search, insert/erase shift the tail. Overwriting an
/// existing key succeeds even when the map is full.
template <typename K, typename V, std::size_t CAP>
class StaticMap {
 public:
  struct Entry {
    K key{};
    V value{};
  };

  ErrorCode insert(const K& key, const V& value) {
    std::size_t pos = lower_bound(key);
    if (pos < len_ && entries_[pos].key == key) {
      entries_[pos].value = value;
      return ErrorCode::Ok;
    }
    if (len_ == CAP) return ErrorCode::BufferFull;
    for (std::size_t j = len_; j > pos; --j) entries_[j] = entries_[j - 1];
    entries_[pos] = Entry{key, value};
    ++len_;
    return ErrorCode::Ok;
  }

  V* find(const K& key) {
    std::size_t pos = lower_bound(key);
    if (pos < len_ && entries_[pos].key == key) return &entries_[pos].value;
    return nullptr;
  }
  const V* find(const K& key) const {
    std::size_t pos = lower_bound(key);
    if (pos < len_ && entries_[pos].key == key) return &entries_[pos].value;
    return nullptr;
  }

  bool contains(const K& key) const { return find(key) != nullptr; }

  ErrorCode erase(const K& key) {
    std::size_t pos = lower_bound(key);
    if (pos == len_ || !(entries_[pos].key == key)) return ErrorCode::NotRegistered;
    for (std::size_t j = pos + 1; j < len_; ++j) entries_[j - 1] = entries_[j];
    --len_;
    return ErrorCode::Ok;
  }

  void clear() { len_ = 0; }
  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  bool full() const { return len_ == CAP; }
  static constexpr std::size_t capacity() { return CAP; }

  // Iteration is in strictly increasing key order.
  Entry* begin() { return entries_.data(); }
  Entry* end() { return entries_.data() + len_; }
  const Entry* begin() const { return entries_.data(); }
  const Entry* end() const { return entries_.data() + len_; }

 private:
  std::size_t lower_bound(const K& key) const {
    std::size_t lo = 0, hi = len_;
    while (lo < hi) {
      std::size_t mid = lo + (hi - lo) / 2;
      if (entries_[mid].key < key)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  }

  std::array<Entry, CAP> entries_{};
  std::size_t len_ = 0;
};

}  // namespace wsn
