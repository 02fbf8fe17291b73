#pragma once

#include <cstdint>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "wsn/core/contracts.hpp"
#include "wsn/core/delegate.hpp"
#include "wsn/core/types.hpp"
#include "wsn/sim/prng.hpp"

namespace wsn {

/// Deterministic discrete-event core: a time-ordered queue with a seeded
/// generator. Events at the same timestamp fire in insertion order (seq
/// tie-break), so a run is a pure function of (inputs, seed). Every
/// processed event is rendered into the trace; two equal runs produce
/// byte-identical traces.
class Scheduler {
 public:
  using DeliverySink =
      Delegate<void(NodeId /*dest*/, NodeId /*sender*/, const Payload&, std::uint8_t /*quality*/)>;

  explicit Scheduler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t now_ms() const { return now_; }
  SplitMix64& rng() { return rng_; }

  void set_delivery_sink(DeliverySink sink) { sink_ = sink; }

  ErrorCode set_timer(NodeId node, std::uint64_t delay_ms, TimerCallback cb, void* ctx,
                      CallbackHandle& out) {
    if (!cb) return ErrorCode::InvalidArgument;
    Event ev;
    ev.fire_at = now_ + delay_ms;
    ev.seq = next_seq_++;
    ev.is_timer = true;
    ev.node = node;
    ev.timer_cb = cb;
    ev.timer_ctx = ctx;
    ev.timer_handle = CallbackHandle{next_timer_id_++};
    out = ev.timer_handle;
    queue_.push(ev);
    return ErrorCode::Ok;
  }

  /// Lazily discards the event; a cancelled timer never fires and leaves no
  /// trace line.
  ErrorCode cancel_timer(CallbackHandle h) {
    if (!h.valid() || h.id >= next_timer_id_) return ErrorCode::NotRegistered;
    cancelled_.insert(h.id);
    return ErrorCode::Ok;
  }

  void enqueue_delivery(NodeId dest, NodeId sender, const Payload& payload, std::uint8_t quality,
                        std::uint64_t latency_ms) {
    Event ev;
    ev.fire_at = now_ + latency_ms;
    ev.seq = next_seq_++;
    ev.is_timer = false;
    ev.node = dest;
    ev.sender = sender;
    ev.payload = payload;
    ev.quality = quality;
    queue_.push(ev);
    ++in_flight_;
  }

  /// Processes every event with fire_at <= t_end in (fire_at, seq) order,
  /// then advances now to t_end. Time never moves backwards.
  void run_until(std::uint64_t t_end) {
    while (!queue_.empty()) {
      const Event& top = queue_.top();
      if (top.fire_at > t_end) break;
      Event ev = top;
      queue_.pop();
      if (ev.is_timer && cancelled_.count(ev.timer_handle.id)) {
        cancelled_.erase(ev.timer_handle.id);
        continue;
      }
      now_ = ev.fire_at;
      trace_.push_back(render(ev));
      if (ev.is_timer) {
        ev.timer_cb(ev.timer_ctx);
      } else {
        --in_flight_;
        if (sink_) sink_(ev.node, ev.sender, ev.payload, ev.quality);
      }
    }
    if (t_end > now_) now_ = t_end;
  }

  const std::vector<std::string>& trace() const { return trace_; }
  void clear_trace() { trace_.clear(); }

  std::size_t pending_events() const { return queue_.size(); }
  std::size_t in_flight() const { return in_flight_; }

 private:
  struct Event {
    std::uint64_t fire_at = 0;
    std::uint64_t seq = 0;
    bool is_timer = false;
    NodeId node;  // timer owner or delivery destination
    // timer fields
    TimerCallback timer_cb;
    void* timer_ctx = nullptr;
    CallbackHandle timer_handle;
    // delivery fields
    NodeId sender;
    Payload payload;
    std::uint8_t quality = 0;
  };

  struct Later {
    bool operator()(const Event& x, const Event& y) const {
      if (x.fire_at != y.fire_at) return x.fire_at > y.fire_at;
      return x.seq > y.seq;
    }
  };

  static std::uint64_t fnv1a(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint8_t b : bytes) {
      h ^= b;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  std::string render(const Event& ev) const;

  std::uint64_t now_ = 0;
  std::uint64_t next_seq_ = 0;
  std::int64_t next_timer_id_ = 0;
  std::size_t in_flight_ = 0;
  SplitMix64 rng_;
  DeliverySink sink_;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::unordered_set<std::int64_t> cancelled_;
  std::vector<std::string> trace_;
};

}  // namespace wsn
