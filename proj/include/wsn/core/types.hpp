#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

namespace wsn {

// Library-wide compile-time configuration. Fixed per build.
inline constexpr std::size_t kMtu = 116;           // max bytes per radio frame
inline constexpr std::size_t kHandlerCapacity = 4; // receive-handler slots per registry

/// Logical network address. The all-ones value is reserved for broadcast
/// and never assigned to a concrete node.
struct NodeId {
  std::uint64_t value = 0;

  static constexpr NodeId broadcast() { return NodeId{~std::uint64_t{0}}; }
  constexpr bool is_broadcast() const { return value == ~std::uint64_t{0}; }

  constexpr auto operator<=>(const NodeId&) const = default;
};

enum class ErrorCode : std::uint8_t {
  Ok = 0,
  Disabled,
  BufferFull,
  NoRoute,
  PayloadTooLarge,
  NotRegistered,
  CapacityExceeded,
  Underrun,        // read past the end of a buffer
  UnknownKind,     // unrecognized message-kind byte
  NoKey,           // no key material for the requested peer
  InvalidArgument, // malformed input or precondition violation
};

constexpr bool ok(ErrorCode e) { return e == ErrorCode::Ok; }

constexpr const char* to_string(ErrorCode e) {
  switch (e) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::Disabled: return "Disabled";
    case ErrorCode::BufferFull: return "BufferFull";
    case ErrorCode::NoRoute: return "NoRoute";
    case ErrorCode::PayloadTooLarge: return "PayloadTooLarge";
    case ErrorCode::NotRegistered: return "NotRegistered";
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::Underrun: return "Underrun";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::NoKey: return "NoKey";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "?";
}

/// Identifies a live registration (receive handler, timer). Small and
/// copyable; reusable after unregistration.
struct CallbackHandle {
  std::int64_t id = -1;

  constexpr bool valid() const { return id >= 0; }
  constexpr auto operator<=>(const CallbackHandle&) const = default;
};

/// A radio frame body: at most kMtu bytes, stored in place.
class Payload {
 public:
  Payload() = default;

  /// Absent when the input exceeds the MTU.
  static std::optional<Payload> make(std::span<const std::uint8_t> bytes) {
    if (bytes.size() > kMtu) return std::nullopt;
    Payload p;
    p.len_ = static_cast<std::uint8_t>(bytes.size());
    for (std::size_t i = 0; i < bytes.size(); ++i) p.bytes_[i] = bytes[i];
    return p;
  }

  std::span<const std::uint8_t> view() const { return {bytes_.data(), len_}; }
  std::span<std::uint8_t> mutable_view() { return {bytes_.data(), len_}; }
  const std::uint8_t* data() const { return bytes_.data(); }
  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  friend bool operator==(const Payload& a, const Payload& b) {
    if (a.len_ != b.len_) return false;
    for (std::size_t i = 0; i < a.len_; ++i)
      if (a.bytes_[i] != b.bytes_[i]) return false;
    return true;
  }

 private:
  std::array<std::uint8_t, kMtu> bytes_{};
  std::uint8_t len_ = 0;
};

}  // namespace wsn

template <>
struct std::hash<wsn::NodeId> {
  std::size_t operator()(const wsn::NodeId& n) const noexcept {
    return std::hash<std::uint64_t>{}(n.value);
  }
};
