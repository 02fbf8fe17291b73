#pragma once

#include <array>
#include <cstddef>

#include "wsn/core/delegate.hpp"
#include "wsn/core/types.hpp"

namespace wsn {

/// Fixed-capacity handler table. Handles are slot indices; a freed slot is
/// reused by the next registration. Dispatch walks slots in index order, so
/// registrations without intervening removals are invoked in registration
/// order.
template <typename Signature, std::size_t CAP = kHandlerCapacity>
class CallbackRegistry;

template <typename R, typename... Args, std::size_t CAP>
class CallbackRegistry<R(Args...), CAP> {
 public:
  using callback_type = Delegate<R(Args...)>;

  ErrorCode add(callback_type cb, CallbackHandle& out) {
    if (!cb) return ErrorCode::InvalidArgument;
    for (std::size_t i = 0; i < CAP; ++i) {
      if (!slots_[i]) {
        slots_[i] = cb;
        out = CallbackHandle{static_cast<std::int64_t>(i)};
        return ErrorCode::Ok;
      }
    }
    return ErrorCode::CapacityExceeded;
  }

  ErrorCode remove(CallbackHandle h) {
    if (h.id < 0 || h.id >= static_cast<std::int64_t>(CAP) || !slots_[h.id])
      return ErrorCode::NotRegistered;
    slots_[static_cast<std::size_t>(h.id)].reset();
    return ErrorCode::Ok;
  }

  void dispatch(Args... args) const {
    for (std::size_t i = 0; i < CAP; ++i)
      if (slots_[i]) slots_[i](args...);
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& s : slots_)
      if (s) ++n;
    return n;
  }

  bool empty() const { return size() == 0; }
  void clear() { for (auto& s : slots_) s.reset(); }

  static constexpr std::size_t capacity() { return CAP; }

 private:
  std::array<callback_type, CAP> slots_{};
};

}  // namespace wsn
