#pragma once

#include <concepts>
#include <cstdint>
#include <string_view>

#include "wsn/core/delegate.hpp"
#include "wsn/core/types.hpp"

namespace wsn {

/// Receive handler shapes. `Addr` is the address type of the layer the
/// handler is registered with; layered models may use different spaces.
template <typename Addr>
using ReceiveCallback = Delegate<void(Addr /*sender*/, const Payload&)>;

/// Extended variant carrying the per-message link quality (LQI-style, 0-255).
template <typename Addr>
using ExtendedReceiveCallback = Delegate<void(Addr, const Payload&, std::uint8_t)>;

/// Timer handlers get the opaque context word passed at arming time.
using TimerCallback = Delegate<void(void*)>;

/// Anything message-shaped a protocol can be layered on: a hardware radio
/// model, or a routing model reused as a virtual radio. Send may fail
/// softly (unknown or out-of-range destination is not an error at this
/// level); delivery surfaces through registered receive handlers.
template <typename R>
concept Radio = requires(R r, const R cr, typename R::address_t addr, const Payload& p,
                         ReceiveCallback<typename R::address_t> cb, CallbackHandle h) {
  typename R::address_t;
  { R::broadcast_address() } -> std::convertible_to<typename R::address_t>;
  { r.enable() } -> std::same_as<ErrorCode>;
  { r.disable() } -> std::same_as<ErrorCode>;
  { cr.id() } -> std::same_as<typename R::address_t>;
  { r.send(addr, p) } -> std::same_as<ErrorCode>;
  { r.register_receiver(cb, h) } -> std::same_as<ErrorCode>;
  { r.unregister_receiver(h) } -> std::same_as<ErrorCode>;
};

/// Radio plus link-quality access on receive.
template <typename R>
concept ExtendedRadio =
    Radio<R> && requires(R r, ExtendedReceiveCallback<typename R::address_t> cb,
                         CallbackHandle h) {
      { r.register_extended_receiver(cb, h) } -> std::same_as<ErrorCode>;
      { r.unregister_extended_receiver(h) } -> std::same_as<ErrorCode>;
    };

/// One-shot timers; periodic behavior is built by re-arming in the handler.
template <typename T>
concept TimerFacet = requires(T t, std::uint64_t delay, TimerCallback cb, void* ctx,
                              CallbackHandle h) {
  { t.set_timer(delay, cb, ctx, h) } -> std::same_as<ErrorCode>;
  { t.cancel_timer(h) } -> std::same_as<ErrorCode>;
};

template <typename C>
concept ClockFacet = requires(const C c) {
  { c.now_ms() } -> std::same_as<std::uint64_t>;
};

template <typename D>
concept DebugFacet = requires(D d, std::string_view text) {
  { d.emit(text) };
};

/// A routing model is a radio: same surface, multi-hop semantics. Sending
/// while disabled returns Disabled and transmits nothing.
template <typename R>
concept RoutingModel = Radio<R>;

/// Length-preserving per-peer symmetric cipher. decrypt(encrypt(x)) == x for
/// any configured key. Key material is installed per peer before use.
template <typename C>
concept CryptoModel = requires(C c, const C cc, NodeId peer, std::span<const std::uint8_t> key,
                               std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  { c.enable() } -> std::same_as<ErrorCode>;
  { c.disable() } -> std::same_as<ErrorCode>;
  { c.key_setup(peer, key) } -> std::same_as<ErrorCode>;
  { cc.has_key(peer) } -> std::same_as<bool>;
  { c.encrypt(peer, in, out) } -> std::same_as<ErrorCode>;
  { c.decrypt(peer, in, out) } -> std::same_as<ErrorCode>;
};

}  // namespace wsn
