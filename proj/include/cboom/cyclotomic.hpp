#pragma once

// Exact arithmetic in Z[zeta_p], zeta_p = exp(2 pi i / p).
//
// Elements are stored on the basis 1, zeta, ..., zeta^{p-2}; zeta^{p-1} is
// rewritten as -(1 + zeta + ... + zeta^{p-2}). For p = 2 this is Z with
// zeta = -1. Coefficient overflow throws std::overflow_error.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cboom {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

}  // namespace detail

class CyclotomicInt {
 public:
  CyclotomicInt() = default;
  explicit CyclotomicInt(std::uint32_t p, std::int64_t value = 0) : p_(p), c_(p - 1, 0) {
    if (p < 2) throw std::invalid_argument("cyclotomic ring needs p >= 2");
    c_[0] = value;
  }

  /// zeta^e for any integer e.
  static CyclotomicInt zeta_power(std::uint32_t p, std::int64_t e) {
    std::vector<std::int64_t> full(p, 0);
    full[static_cast<std::size_t>(((e % p) + p) % p)] = 1;
    return from_group_ring(p, full);
  }

  /// Reduces sum_{i < p} v[i] zeta^i to the canonical basis.
  static CyclotomicInt from_group_ring(std::uint32_t p, const std::vector<std::int64_t>& v) {
    CyclotomicInt out(p);
    const std::int64_t top = v[p - 1];
    for (std::uint32_t i = 0; i + 1 < p; ++i) out.c_[i] = detail::checked_add(v[i], -top);
    return out;
  }

  std::uint32_t p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  friend CyclotomicInt operator+(const CyclotomicInt& x, const CyclotomicInt& y) {
    check_same(x, y);
    CyclotomicInt out(x.p_);
    for (std::size_t i = 0; i < x.c_.size(); ++i) out.c_[i] = detail::checked_add(x.c_[i], y.c_[i]);
    return out;
  }

  friend CyclotomicInt operator-(const CyclotomicInt& x) {
    CyclotomicInt out(x.p_);
    for (std::size_t i = 0; i < x.c_.size(); ++i) out.c_[i] = detail::checked_mul(x.c_[i], -1);
    return out;
  }

  friend CyclotomicInt operator-(const CyclotomicInt& x, const CyclotomicInt& y) { return x + (-y); }

  friend CyclotomicInt operator*(const CyclotomicInt& x, const CyclotomicInt& y) {
    check_same(x, y);
    const std::uint32_t p = x.p_;
    std::vector<std::int64_t> full(p, 0);
    for (std::uint32_t i = 0; i + 1 < p; ++i) {
      if (x.c_[i] == 0) continue;
      for (std::uint32_t j = 0; j + 1 < p; ++j) {
        if (y.c_[j] == 0) continue;
        auto& slot = full[(i + j) % p];
        slot = detail::checked_add(slot, detail::checked_mul(x.c_[i], y.c_[j]));
      }
    }
    return from_group_ring(p, full);
  }

  CyclotomicInt& operator+=(const CyclotomicInt& y) { return *this = *this + y; }
  CyclotomicInt& operator*=(const CyclotomicInt& y) { return *this = *this * y; }

  /// Complex conjugation, zeta -> zeta^{p-1}.
  CyclotomicInt conj() const {
    std::vector<std::int64_t> full(p_, 0);
    for (std::uint32_t i = 0; i + 1 < p_; ++i) full[(p_ - i) % p_] = c_[i];
    return from_group_ring(p_, full);
  }

  /// The integer value when the element lies in Z.
  std::optional<std::int64_t> rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return std::nullopt;
    }
    return c_.empty() ? 0 : c_[0];
  }

  bool is_rational() const { return rational().has_value(); }

  /// v * conj(v), always rational.
  std::int64_t norm2() const {
    const auto r = (*this * conj()).rational();
    if (!r) throw std::logic_error("|v|^2 is not rational");
    return *r;
  }

  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += c_[i] < 0 ? " - " : " + ";
      else if (c_[i] < 0) out += "-";
      const std::int64_t mag = c_[i] < 0 ? -c_[i] : c_[i];
      if (i == 0) {
        out += std::to_string(mag);
        continue;
      }
      if (mag != 1) out += std::to_string(mag) + "*";
      out += i == 1 ? "z" : "z^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check_same(const CyclotomicInt& x, const CyclotomicInt& y) {
    if (x.p_ != y.p_) throw std::invalid_argument("cyclotomic operands over different p");
  }

  std::uint32_t p_ = 2;
  std::vector<std::int64_t> c_ = std::vector<std::int64_t>(1, 0);
};

}  // namespace cboom
