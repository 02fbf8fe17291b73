#pragma once

#include <cstdint>
#include <span>

#include "wsn/core/types.hpp"

namespace wsn {

/// Appends big-endian integers and raw bytes to a caller-owned buffer.
/// All multi-byte values are stored most-significant byte first through
/// per-byte stores, so writes work at any alignment. Overflow is reported,
/// never truncated.
class WireWriter {
 public:
  explicit WireWriter(std::span<std::uint8_t> buf) : buf_(buf) {}

  ErrorCode write_u8(std::uint8_t v) {
    if (cursor_ + 1 > buf_.size()) return ErrorCode::BufferFull;
    buf_[cursor_++] = v;
    return ErrorCode::Ok;
  }

  ErrorCode write_u16(std::uint16_t v) {
    if (cursor_ + 2 > buf_.size()) return ErrorCode::BufferFull;
    buf_[cursor_++] = static_cast<std::uint8_t>(v >> 8);
    buf_[cursor_++] = static_cast<std::uint8_t>(v);
    return ErrorCode::Ok;
  }

  ErrorCode write_u32(std::uint32_t v) {
    if (cursor_ + 4 > buf_.size()) return ErrorCode::BufferFull;
    for (int shift = 24; shift >= 0; shift -= 8)
      buf_[cursor_++] = static_cast<std::uint8_t>(v >> shift);
    return ErrorCode::Ok;
  }

  ErrorCode write_u64(std::uint64_t v) {
    if (cursor_ + 8 > buf_.size()) return ErrorCode::BufferFull;
    for (int shift = 56; shift >= 0; shift -= 8)
      buf_[cursor_++] = static_cast<std::uint8_t>(v >> shift);
    return ErrorCode::Ok;
  }

  ErrorCode write_bytes(std::span<const std::uint8_t> bytes) {
    if (cursor_ + bytes.size() > buf_.size()) return ErrorCode::BufferFull;
    for (std::uint8_t b : bytes) buf_[cursor_++] = b;
    return ErrorCode::Ok;
  }

  std::size_t written() const { return cursor_; }
  std::span<const std::uint8_t> view() const { return buf_.first(cursor_); }

 private:
  std::span<std::uint8_t> buf_;
  std::size_t cursor_ = 0;
};

/// Mirror of WireWriter: consumes big-endian fields byte-wise. Reading past
/// the end is an Underrun error and leaves the cursor untouched.
class WireReader {
 public:
  explicit WireReader(std::span<const std::uint8_t> buf) : buf_(buf) {}

  ErrorCode read_u8(std::uint8_t& out) {
    if (remaining() < 1) return ErrorCode::Underrun;
    out = buf_[cursor_++];
    return ErrorCode::Ok;
  }

  ErrorCode read_u16(std::uint16_t& out) {
    if (remaining() < 2) return ErrorCode::Underrun;
    out = static_cast<std::uint16_t>(std::uint16_t{buf_[cursor_]} << 8 |
                                     std::uint16_t{buf_[cursor_ + 1]});
    cursor_ += 2;
    return ErrorCode::Ok;
  }

  ErrorCode read_u32(std::uint32_t& out) {
    if (remaining() < 4) return ErrorCode::Underrun;
    out = 0;
    for (int i = 0; i < 4; ++i) out = out << 8 | buf_[cursor_ + i];
    cursor_ += 4;
    return ErrorCode::Ok;
  }

  ErrorCode read_u64(std::uint64_t& out) {
    if (remaining() < 8) return ErrorCode::Underrun;
    out = 0;
    for (int i = 0; i < 8; ++i) out = out << 8 | buf_[cursor_ + i];
    cursor_ += 8;
    return ErrorCode::Ok;
  }

  ErrorCode read_bytes(std::size_t n, std::span<const std::uint8_t>& out) {
    if (remaining() < n) return ErrorCode::Underrun;
    out = buf_.subspan(cursor_, n);
    cursor_ += n;
    return ErrorCode::Ok;
  }

  /// Everything not yet consumed, without advancing.
  std::span<const std::uint8_t> rest() const { return buf_.subspan(cursor_); }

  std::size_t remaining() const { return buf_.size() - cursor_; }
  std::size_t position() const { return cursor_; }

 private:
  std::span<const std::uint8_t> buf_;
  std::size_t cursor_ = 0;
};

}  // namespace wsn
