#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "wsn/core/types.hpp"

namespace wsn {

/// Doubly linked list over a fixed pool of CAP node slots. Links are pool
/// indices, the free list chains unused slots. Every slot is live or free,
/// never both.
template <typename T, std::size_t CAP>
class StaticList {
  static constexpr std::int32_t kNil = -1;

 public:
  StaticList() { reset_pool(); }

  ErrorCode push_front(const T& x) {
    std::int32_t slot = take_free();
    if (slot == kNil) return ErrorCode::BufferFull;
    nodes_[slot].value = x;
    nodes_[slot].prev = kNil;
    nodes_[slot].next = head_;
    if (head_ != kNil)
      nodes_[head_].prev = slot;
    else
      tail_ = slot;
    head_ = slot;
    ++len_;
    return ErrorCode::Ok;
  }

  ErrorCode push_back(const T& x) {
    std::int32_t slot = take_free();
    if (slot == kNil) return ErrorCode::BufferFull;
    nodes_[slot].value = x;
    nodes_[slot].next = kNil;
    nodes_[slot].prev = tail_;
    if (tail_ != kNil)
      nodes_[tail_].next = slot;
    else
      head_ = slot;
    tail_ = slot;
    ++len_;
    return ErrorCode::Ok;
  }

  std::optional<T> pop_front() {
    if (head_ == kNil) return std::nullopt;
    std::int32_t slot = head_;
    T out = nodes_[slot].value;
    unlink(slot);
    return out;
  }

  /// Removes every element matching pred; returns how many were removed.
  template <typename Pred>
  std::size_t remove_if(Pred pred) {
    std::size_t removed = 0;
    std::int32_t cur = head_;
    while (cur != kNil) {
      std::int32_t next = nodes_[cur].next;
      if (pred(nodes_[cur].value)) {
        unlink(cur);
        ++removed;
      }
      cur = next;
    }
    return removed;
  }

  const T* front() const { return head_ != kNil ? &nodes_[head_].value : nullptr; }

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  bool full() const { return len_ == CAP; }
  static constexpr std::size_t capacity() { return CAP; }

  void clear() {
    reset_pool();
    len_ = 0;
  }

  class const_iterator {
   public:
    const_iterator(const StaticList* list, std::int32_t pos) : list_(list), pos_(pos) {}
    const T& operator*() const { return list_->nodes_[pos_].value; }
    const_iterator& operator++() {
      pos_ = list_->nodes_[pos_].next;
      return *this;
    }
    bool operator!=(const const_iterator& o) const { return pos_ != o.pos_; }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    const StaticList* list_;
    std::int32_t pos_;
  };

  const_iterator begin() const { return const_iterator(this, head_); }
  const_iterator end() const { return const_iterator(this, kNil); }

 private:
  struct Node {
    T value{};
    std::int32_t next = kNil;
    std::int32_t prev = kNil;
  };

  void reset_pool() {
    head_ = tail_ = kNil;
    for (std::size_t i = 0; i < CAP; ++i)
      nodes_[i].next = (i + 1 < CAP) ? static_cast<std::int32_t>(i + 1) : kNil;
    free_head_ = CAP > 0 ? 0 : kNil;
  }

  std::int32_t take_free() {
    if (free_head_ == kNil) return kNil;
    std::int32_t slot = free_head_;
    free_head_ = nodes_[slot].next;
    return slot;
  }

  void unlink(std::int32_t slot) {
    Node& n = nodes_[slot];
    if (n.prev != kNil)
      nodes_[n.prev].next = n.next;
    else
      head_ = n.next;
    if (n.next != kNil)
      nodes_[n.next].prev = n.prev;
    else
      tail_ = n.prev;
    n.next = free_head_;
    free_head_ = slot;
    --len_;
  }

  std::array<Node, CAP> nodes_{};
  std::int32_t head_ = kNil;
  std::int32_t tail_ = kNil;
  std::int32_t free_head_ = kNil;
  std::size_t len_ = 0;
};

}  // namespace wsn
