#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "wsn/core/types.hpp"

namespace wsn {

/// Contiguous sequence with in-place storage for CAP elements. Never
/// allocates; a push against a full vector is a no-op reported as
/// BufferFull. Elements must be default-constructible and copyable.
template <typename T, std::size_t CAP>
class StaticVector {
 public:
  using value_type = T;

  ErrorCode push_back(const T& x) {
    if (len_ == CAP) return ErrorCode::BufferFull;
    storage_[len_++] = x;
    return ErrorCode::Ok;
  }

  std::optional<T> pop_back() {
    if (len_ == 0) return std::nullopt;
    return storage_[--len_];
  }

  /// Null when out of range.
  const T* at(std::size_t i) const { return i < len_ ? &storage_[i] : nullptr; }
  T* at(std::size_t i) { return i < len_ ? &storage_[i] : nullptr; }

  T& operator[](std::size_t i) { return storage_[i]; }
  const T& operator[](std::size_t i) const { return storage_[i]; }

  T& front() { return storage_[0]; }
  const T& front() const { return storage_[0]; }
  T& back() { return storage_[len_ - 1]; }
  const T& back() const { return storage_[len_ - 1]; }

  ErrorCode erase_at(std::size_t i) {
    if (i >= len_) return ErrorCode::NotRegistered;
    for (std::size_t j = i + 1; j < len_; ++j) storage_[j - 1] = storage_[j];
    --len_;
    return ErrorCode::Ok;
  }

  bool contains(const T& x) const {
    for (std::size_t i = 0; i < len_; ++i)
      if (storage_[i] == x) return true;
    return false;
  }

  void clear() { len_ = 0; }
  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  bool full() const { return len_ == CAP; }
  static constexpr std::size_t capacity() { return CAP; }

  T* begin() { return storage_.data(); }
  T* end() { return storage_.data() + len_; }
  const T* begin() const { return storage_.data(); }
  const T* end() const { return storage_.data() + len_; }

  friend bool operator==(const StaticVector& a, const StaticVector& b) {
    if (a.len_ != b.len_) return false;
    for (std::size_t i = 0; i < a.len_; ++i)
      if (!(a.storage_[i] == b.storage_[i])) return false;
    return true;
  }

 private:
  std::array<T, CAP> storage_{};
  std::size_t len_ = 0;
};

}  // namespace wsn
