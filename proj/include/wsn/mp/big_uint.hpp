#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "wsn/core/types.hpp"

namespace wsn {

/// Fixed-width unsigned integer over W 32-bit limbs, least-significant limb
/// first. No allocation, no double-width hardware multiply: products are
/// formed by interleaved shift-and-add with conditional subtraction, which
/// keeps every intermediate inside W limbs plus one tracked carry bit.
template <std::size_t W = 8>
class BigUint {
  static_assert(W >= 1);

 public:
  static constexpr std::size_t kLimbs = W;
  static constexpr std::size_t kBits = 32 * W;

  constexpr BigUint() = default;

  constexpr explicit BigUint(std::uint64_t v) {
    limbs_[0] = static_cast<std::uint32_t>(v);
    if constexpr (W > 1) limbs_[1] = static_cast<std::uint32_t>(v >> 32);
  }

  static constexpr BigUint zero() { return BigUint(); }

  static constexpr BigUint max() {
    BigUint x;
    for (auto& l : x.limbs_) l = 0xFFFFFFFFu;
    return x;
  }

  constexpr bool is_zero() const {
    for (auto l : limbs_)
      if (l != 0) return false;
    return true;
  }

  constexpr std::uint32_t limb(std::size_t i) const { return limbs_[i]; }
  constexpr void set_limb(std::size_t i, std::uint32_t v) { limbs_[i] = v; }

  constexpr bool bit(std::size_t i) const {
    if (i >= kBits) return false;
    return (limbs_[i / 32] >> (i % 32)) & 1u;
  }

  /// Index of the highest set bit plus one; 0 for zero.
  constexpr std::size_t bit_length() const {
    for (std::size_t i = W; i-- > 0;) {
      if (limbs_[i] == 0) continue;
      std::uint32_t v = limbs_[i];
      std::size_t top = 0;
      while (v) {
        ++top;
        v >>= 1;
      }
      return i * 32 + top;
    }
    return 0;
  }

  friend constexpr std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    for (std::size_t i = W; i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i])
        return a.limbs_[i] < b.limbs_[i] ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(const BigUint& a, const BigUint& b) = default;

  friend constexpr BigUint operator^(const BigUint& a, const BigUint& b) {
    BigUint out;
    for (std::size_t i = 0; i < W; ++i) out.limbs_[i] = a.limbs_[i] ^ b.limbs_[i];
    return out;
  }

  struct Sum {
    BigUint value;
    bool carry;
  };

  /// Schoolbook addition mod 2^(32W); carry reports range exit.
  static constexpr Sum add(const BigUint& a, const BigUint& b) {
    Sum out{};
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t s = std::uint64_t{a.limbs_[i]} + b.limbs_[i] + carry;
      out.value.limbs_[i] = static_cast<std::uint32_t>(s);
      carry = static_cast<std::uint32_t>(s >> 32);
    }
    out.carry = carry != 0;
    return out;
  }

  struct Difference {
    BigUint value;
    bool borrow;
  };

  static constexpr Difference sub(const BigUint& a, const BigUint& b) {
    Difference out{};
    std::uint32_t borrow = 0;
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t d = std::uint64_t{a.limbs_[i]} - b.limbs_[i] - borrow;
      out.value.limbs_[i] = static_cast<std::uint32_t>(d);
      borrow = (d >> 32) ? 1u : 0u;
    }
    out.borrow = borrow != 0;
    return out;
  }

  struct Shifted {
    BigUint value;
    bool overflow;  // a set bit left the top
  };

  static constexpr Shifted shl(const BigUint& a, std::size_t k) {
    Shifted out{};
    if (k >= kBits) {
      out.overflow = !a.is_zero();
      return out;
    }
    const std::size_t limb_shift = k / 32;
    const std::size_t bit_shift = k % 32;
    bool lost = false;
    for (std::size_t i = W; i-- > 0;) {
      std::uint64_t v = 0;
      if (i >= limb_shift) {
        const std::size_t src = i - limb_shift;
        v = std::uint64_t{a.limbs_[src]} << bit_shift;
        if (bit_shift && src > 0) v |= a.limbs_[src - 1] >> (32 - bit_shift);
      }
      out.value.limbs_[i] = static_cast<std::uint32_t>(v);
    }
    // Anything at bit index >= kBits - k is shifted out.
    for (std::size_t i = kBits - k; i < kBits; ++i)
      if (a.bit(i)) lost = true;
    out.overflow = lost;
    return out;
  }

  /// Remainder by binary long division: align m under a, then repeated
  /// compare-and-subtract while shifting back down.
  static ErrorCode mod(const BigUint& a, const BigUint& m, BigUint& out) {
    if (m.is_zero()) return ErrorCode::InvalidArgument;
    out = a;
    if (out < m) return ErrorCode::Ok;
    std::size_t shift = a.bit_length() - m.bit_length();
    BigUint scaled = shl(m, shift).value;  // no overflow: fits under a's top bit
    for (;;) {
      if (!(out < scaled)) out = sub(out, scaled).value;
      if (shift == 0) break;
      --shift;
      scaled = shr1(scaled);
    }
    return ErrorCode::Ok;
  }

  /// (a * b) mod m with both factors pre-reduced. Runs exactly 32W
  /// shift/add rounds; every intermediate stays below m.
  static ErrorCode mul_mod(const BigUint& a, const BigUint& b, const BigUint& m, BigUint& out) {
    if (m.is_zero()) return ErrorCode::InvalidArgument;
    if (!(a < m) || !(b < m)) return ErrorCode::InvalidArgument;
    BigUint acc;
    for (std::size_t i = kBits; i-- > 0;) {
      acc = double_mod(acc, m);
      if (b.bit(i)) acc = add_mod(acc, a, m);
    }
    out = acc;
    return ErrorCode::Ok;
  }

  /// (a + b) mod m for a, b < m.
  static constexpr BigUint add_mod(const BigUint& a, const BigUint& b, const BigUint& m) {
    Sum s = add(a, b);
    if (s.carry || !(s.value < m)) return sub(s.value, m).value;
    return s.value;
  }

  std::string to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    bool leading = true;
    for (std::size_t i = W; i-- > 0;) {
      for (int nibble = 7; nibble >= 0; --nibble) {
        std::uint32_t d = (limbs_[i] >> (nibble * 4)) & 0xF;
        if (leading && d == 0) continue;
        leading = false;
        out.push_back(digits[d]);
      }
    }
    if (out.empty()) out = "0";
    return out;
  }

  static ErrorCode from_hex(std::string_view text, BigUint& out) {
    if (text.empty() || text.size() > 8 * W) return ErrorCode::InvalidArgument;
    out = BigUint();
    for (char c : text) {
      std::uint32_t d;
      if (c >= '0' && c <= '9')
        d = static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f')
        d = static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F')
        d = static_cast<std::uint32_t>(c - 'A' + 10);
      else
        return ErrorCode::InvalidArgument;
      out = shl(out, 4).value;
      out.limbs_[0] |= d;
    }
    return ErrorCode::Ok;
  }

 private:
  static constexpr BigUint shr1(const BigUint& a) {
    BigUint out;
    for (std::size_t i = 0; i < W; ++i) {
      out.limbs_[i] = a.limbs_[i] >> 1;
      if (i + 1 < W) out.limbs_[i] |= a.limbs_[i + 1] << 31;
    }
    return out;
  }

  /// (2a) mod m for a < m. The shifted-out bit, if any, is folded into the
  /// mandatory subtraction: 2a - m always fits back into W limbs.
  static constexpr BigUint double_mod(const BigUint& a, const BigUint& m) {
    Shifted d = shl(a, 1);
    if (d.overflow || !(d.value < m)) return sub(d.value, m).value;
    return d.value;
  }

  std::array<std::uint32_t, W> limbs_{};
};

using BigUint256 = BigUint<8>;

}  // namespace wsn
