#pragma once

#include <cstdint>
#include <span>

#include "wsn/container/static_vector.hpp"
#include "wsn/core/types.hpp"
#include "wsn/wire/buffer.hpp"

namespace wsn {

/// Longest source route a DSR packet may carry.
inline constexpr std::size_t kMaxPath = 10;

/// First byte of every frame. Values are part of the wire protocol.
enum class MessageKind : std::uint8_t {
  Flood = 0x01,
  TreeBeacon = 0x02,
  TreeData = 0x03,
  DsdvUpdate = 0x04,
  DsdvData = 0x05,
  DsrRouteRequest = 0x06,
  DsrRouteReply = 0x07,
  DsrData = 0x08,
  DsrAck = 0x09,
  Secure = 0x0A,
};

constexpr bool known_kind(std::uint8_t b) { return b >= 0x01 && b <= 0x0A; }

constexpr const char* kind_name(std::uint8_t b) {
  switch (static_cast<MessageKind>(b)) {
    case MessageKind::Flood: return "FLOOD";
    case MessageKind::TreeBeacon: return "TREE_BEACON";
    case MessageKind::TreeData: return "TREE_DATA";
    case MessageKind::DsdvUpdate: return "DSDV_UPDATE";
    case MessageKind::DsdvData: return "DSDV_DATA";
    case MessageKind::DsrRouteRequest: return "DSR_RREQ";
    case MessageKind::DsrRouteReply: return "DSR_RREP";
    case MessageKind::DsrData: return "DSR_DATA";
    case MessageKind::DsrAck: return "DSR_ACK";
    case MessageKind::Secure: return "SECURE";
  }
  return "RAW";
}

inline ErrorCode peek_kind(std::span<const std::uint8_t> frame, MessageKind& out) {
  if (frame.empty()) return ErrorCode::Underrun;
  if (!known_kind(frame[0])) return ErrorCode::UnknownKind;
  out = static_cast<MessageKind>(frame[0]);
  return ErrorCode::Ok;
}

using PathVector = StaticVector<NodeId, kMaxPath>;

// ---- Flooding ----------------------------------------------------------
// FLOOD { kind u8, originator u64, seq u16, ttl u8, payload... }

struct FloodMessage {
  NodeId originator;
  std::uint16_t seq = 0;
  std::uint8_t ttl = 0;
  std::span<const std::uint8_t> payload;

  static constexpr std::size_t header_size() { return 1 + 8 + 2 + 1; }

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::Flood)); !ok(e)) return e;
    if (auto e = w.write_u64(originator.value); !ok(e)) return e;
    if (auto e = w.write_u16(seq); !ok(e)) return e;
    if (auto e = w.write_u8(ttl); !ok(e)) return e;
    return w.write_bytes(payload);
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, FloodMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::Flood)) return ErrorCode::UnknownKind;
    if (auto e = r.read_u64(out.originator.value); !ok(e)) return e;
    if (auto e = r.read_u16(out.seq); !ok(e)) return e;
    if (auto e = r.read_u8(out.ttl); !ok(e)) return e;
    out.payload = r.rest();
    return ErrorCode::Ok;
  }
};

// ---- Tree converge-cast -------------------------------------------------
// TREE_BEACON { kind u8, sink u64, hops u8 }
// TREE_DATA   { kind u8, originator u64, payload... }

struct TreeBeaconMessage {
  NodeId sink;
  std::uint8_t hops = 0;

  static constexpr std::size_t header_size() { return 1 + 8 + 1; }

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::TreeBeacon)); !ok(e)) return e;
    if (auto e = w.write_u64(sink.value); !ok(e)) return e;
    return w.write_u8(hops);
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, TreeBeaconMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::TreeBeacon)) return ErrorCode::UnknownKind;
    if (auto e = r.read_u64(out.sink.value); !ok(e)) return e;
    return r.read_u8(out.hops);
  }
};

struct TreeDataMessage {
  NodeId originator;
  std::span<const std::uint8_t> payload;

  static constexpr std::size_t header_size() { return 1 + 8; }

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::TreeData)); !ok(e)) return e;
    if (auto e = w.write_u64(originator.value); !ok(e)) return e;
    return w.write_bytes(payload);
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, TreeDataMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::TreeData)) return ErrorCode::UnknownKind;
    if (auto e = r.read_u64(out.originator.value); !ok(e)) return e;
    out.payload = r.rest();
    return ErrorCode::Ok;
  }
};

// ---- DSDV ---------------------------------------------------------------
// DSDV_UPDATE { kind u8, count u16, count x (dest u64, hops u16, seq u32) }
// Next hops are never advertised; the receiver adopts the sender.
// DSDV_DATA { kind u8, originator u64, dest u64, payload... }

struct DsdvAdvertisedRoute {
  NodeId dest;
  std::uint16_t hops = 0;
  std::uint32_t seq = 0;
};

struct DsdvUpdateMessage {
  static constexpr std::size_t kEntrySize = 8 + 2 + 4;
  // Entry budget per frame given the MTU.
  static constexpr std::size_t kMaxEntries = (kMtu - 3) / kEntrySize;

  StaticVector<DsdvAdvertisedRoute, kMaxEntries> entries;

  static constexpr std::size_t encoded_size(std::size_t n) { return 1 + 2 + n * kEntrySize; }

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::DsdvUpdate)); !ok(e)) return e;
    if (auto e = w.write_u16(static_cast<std::uint16_t>(entries.size())); !ok(e)) return e;
    for (const auto& entry : entries) {
      if (auto e = w.write_u64(entry.dest.value); !ok(e)) return e;
      if (auto e = w.write_u16(entry.hops); !ok(e)) return e;
      if (auto e = w.write_u32(entry.seq); !ok(e)) return e;
    }
    return ErrorCode::Ok;
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, DsdvUpdateMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::DsdvUpdate)) return ErrorCode::UnknownKind;
    std::uint16_t count = 0;
    if (auto e = r.read_u16(count); !ok(e)) return e;
    if (count > kMaxEntries) return ErrorCode::InvalidArgument;
    out.entries.clear();
    for (std::uint16_t i = 0; i < count; ++i) {
      DsdvAdvertisedRoute entry;
      if (auto e = r.read_u64(entry.dest.value); !ok(e)) return e;
      if (auto e = r.read_u16(entry.hops); !ok(e)) return e;
      if (auto e = r.read_u32(entry.seq); !ok(e)) return e;
      (void)out.entries.push_back(entry);
    }
    return ErrorCode::Ok;
  }
};

struct DsdvDataMessage {
  NodeId originator;
  NodeId dest;
  std::span<const std::uint8_t> payload;

  static constexpr std::size_t header_size() { return 1 + 8 + 8; }

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::DsdvData)); !ok(e)) return e;
    if (auto e = w.write_u64(originator.value); !ok(e)) return e;
    if (auto e = w.write_u64(dest.value); !ok(e)) return e;
    return w.write_bytes(payload);
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, DsdvDataMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::DsdvData)) return ErrorCode::UnknownKind;
    if (auto e = r.read_u64(out.originator.value); !ok(e)) return e;
    if (auto e = r.read_u64(out.dest.value); !ok(e)) return e;
    out.payload = r.rest();
    return ErrorCode::Ok;
  }
};

// ---- DSR ----------------------------------------------------------------
// DSR_RREQ { kind u8, req_id u16, target u64, path_len u8, path u64 x len }
// DSR_RREP mirrors DSR_RREQ; its path is the complete forward route.
// DSR_DATA { kind u8, path_len u8, path, cursor u8, payload... }
// DSR_ACK  { kind u8, path_len u8, path, cursor u8 } (travels target->origin)

namespace detail {

inline ErrorCode write_path(WireWriter& w, const PathVector& path) {
  if (auto e = w.write_u8(static_cast<std::uint8_t>(path.size())); !ok(e)) return e;
  for (const NodeId& hop : path)
    if (auto e = w.write_u64(hop.value); !ok(e)) return e;
  return ErrorCode::Ok;
}

inline ErrorCode read_path(WireReader& r, PathVector& path) {
  std::uint8_t len = 0;
  if (auto e = r.read_u8(len); !ok(e)) return e;
  if (len > kMaxPath) return ErrorCode::InvalidArgument;
  path.clear();
  for (std::uint8_t i = 0; i < len; ++i) {
    NodeId hop;
    if (auto e = r.read_u64(hop.value); !ok(e)) return e;
    (void)path.push_back(hop);
  }
  return ErrorCode::Ok;
}

}  // namespace detail

struct DsrRouteRequestMessage {
  std::uint16_t req_id = 0;
  NodeId target;
  PathVector path;  // accumulated route, origin first

  static constexpr std::size_t base_size() { return 1 + 2 + 8 + 1; }
  std::size_t encoded_size() const { return base_size() + 8 * path.size(); }

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::DsrRouteRequest)); !ok(e)) return e;
    if (auto e = w.write_u16(req_id); !ok(e)) return e;
    if (auto e = w.write_u64(target.value); !ok(e)) return e;
    return detail::write_path(w, path);
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, DsrRouteRequestMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::DsrRouteRequest)) return ErrorCode::UnknownKind;
    if (auto e = r.read_u16(out.req_id); !ok(e)) return e;
    if (auto e = r.read_u64(out.target.value); !ok(e)) return e;
    return detail::read_path(r, out.path);
  }
};

struct DsrRouteReplyMessage {
  std::uint16_t req_id = 0;
  NodeId target;    // destination the request asked for
  PathVector path;  // complete route, origin first

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::DsrRouteReply)); !ok(e)) return e;
    if (auto e = w.write_u16(req_id); !ok(e)) return e;
    if (auto e = w.write_u64(target.value); !ok(e)) return e;
    return detail::write_path(w, path);
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, DsrRouteReplyMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::DsrRouteReply)) return ErrorCode::UnknownKind;
    if (auto e = r.read_u16(out.req_id); !ok(e)) return e;
    if (auto e = r.read_u64(out.target.value); !ok(e)) return e;
    return detail::read_path(r, out.path);
  }
};

struct DsrDataMessage {
  PathVector path;  // travel order, source first
  std::uint8_t cursor = 0;  // index of the hop the frame was last sent to
  std::span<const std::uint8_t> payload;

  static constexpr std::size_t base_size() { return 1 + 1 + 1; }
  /// Size with the worst-case route, used to cap app payloads before discovery.
  static constexpr std::size_t max_header_size() { return base_size() + 8 * kMaxPath; }

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::DsrData)); !ok(e)) return e;
    if (auto e = detail::write_path(w, path); !ok(e)) return e;
    if (auto e = w.write_u8(cursor); !ok(e)) return e;
    return w.write_bytes(payload);
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, DsrDataMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::DsrData)) return ErrorCode::UnknownKind;
    if (auto e = detail::read_path(r, out.path); !ok(e)) return e;
    if (auto e = r.read_u8(out.cursor); !ok(e)) return e;
    out.payload = r.rest();
    return ErrorCode::Ok;
  }
};

struct DsrAckMessage {
  PathVector path;  // travel order: data destination first, data source last
  std::uint8_t cursor = 0;

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::DsrAck)); !ok(e)) return e;
    if (auto e = detail::write_path(w, path); !ok(e)) return e;
    return w.write_u8(cursor);
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, DsrAckMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::DsrAck)) return ErrorCode::UnknownKind;
    if (auto e = detail::read_path(r, out.path); !ok(e)) return e;
    return r.read_u8(out.cursor);
  }
};

// ---- Secure wrapper -----------------------------------------------------
// SECURE { kind u8, ciphertext... }

struct SecureMessage {
  std::span<const std::uint8_t> ciphertext;

  static constexpr std::size_t header_size() { return 1; }

  ErrorCode encode(WireWriter& w) const {
    if (auto e = w.write_u8(static_cast<std::uint8_t>(MessageKind::Secure)); !ok(e)) return e;
    return w.write_bytes(ciphertext);
  }

  static ErrorCode decode(std::span<const std::uint8_t> frame, SecureMessage& out) {
    WireReader r(frame);
    std::uint8_t kind = 0;
    if (auto e = r.read_u8(kind); !ok(e)) return e;
    if (kind != static_cast<std::uint8_t>(MessageKind::Secure)) return ErrorCode::UnknownKind;
    out.ciphertext = r.rest();
    return ErrorCode::Ok;
  }
};

}  // namespace wsn
