#pragma once

// Walsh transforms in Z[zeta_p] and the character-sum characterizations of
// c-boomerang uniformity (m = n throughout).
//
//   W_F(a, b) = sum_x zeta^{Tr(b F(x)) - Tr(a x)}     (a linear, b component)
//
// The characterization sums index the transform component-first; V(u, z)
// below means W_F(z, u).

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "cboom/boom_tables.hpp"
#include "cboom/cyclotomic.hpp"
#include "cboom/function.hpp"
#include "cboom/verdict.hpp"

namespace cboom {

using BigInt = boost::multiprecision::cpp_int;

inline CyclotomicInt walsh_transform(const FunctionTable& fn, Element a, Element b) {
  const Field& f = fn.field();
  std::vector<std::int64_t> hist(f.p(), 0);
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const std::uint32_t e = (f.trace(f.mul(b, fn(Element{x}))) + f.p() - f.trace(f.mul(a, Element{x}))) % f.p();
    ++hist[e];
  }
  return CyclotomicInt::from_group_ring(f.p(), hist);
}

/// Full (a, b) table, row-major in a.
class WalshTable {
 public:
  explicit WalshTable(const FunctionTable& fn) : field_(fn.field_ptr()), q_(fn.size()) {
    const Field& f = *field_;
    // Tr(b F(x)) for every (b, x), reused across all a.
    std::vector<std::uint8_t> comp(std::size_t{q_} * q_);
    std::vector<std::uint8_t> lin(std::size_t{q_} * q_);
    for (std::uint32_t b = 0; b < q_; ++b) {
      for (std::uint32_t x = 0; x < q_; ++x) {
        comp[std::size_t{b} * q_ + x] = static_cast<std::uint8_t>(f.trace(f.mul(Element{b}, fn(Element{x}))));
        lin[std::size_t{b} * q_ + x] = static_cast<std::uint8_t>(f.trace(f.mul(Element{b}, Element{x})));
      }
    }
    w_.reserve(std::size_t{q_} * q_);
    std::vector<std::int64_t> hist(f.p());
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::fill(hist.begin(), hist.end(), 0);
        for (std::uint32_t x = 0; x < q_; ++x) {
          ++hist[(comp[std::size_t{b} * q_ + x] + f.p() - lin[std::size_t{a} * q_ + x]) % f.p()];
        }
        w_.push_back(CyclotomicInt::from_group_ring(f.p(), hist));
      }
    }
  }

  const Field& field() const { return *field_; }
  std::uint32_t size() const { return q_; }

  /// W_F(a, b): a linear, b component.
  const CyclotomicInt& at(Element a, Element b) const { return w_[std::size_t{a.index} * q_ + b.index]; }
  /// Component-first view V(u, z) = W_F(z, u).
  const CyclotomicInt& comp(Element u, Element z) const { return at(z, u); }

 private:
  std::shared_ptr<const Field> field_;
  std::uint32_t q_;
  std::vector<CyclotomicInt> w_;
};

inline nlohmann::json to_json(const WalshTable& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::uint32_t a = 0; a < t.size(); ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t b = 0; b < t.size(); ++b) row.push_back(t.at(Element{a}, Element{b}).coeffs());
    rows.push_back(std::move(row));
  }
  return {{"p", t.field().p()}, {"n", t.field().n()}, {"basis", "zeta^0..zeta^(p-2)"}, {"entries", rows}};
}

/// sum_v zeta^{Tr(v alpha)}: p^n at alpha = 0, else 0.
inline CyclotomicInt trace_character_sum(const Field& f, Element alpha) {
  std::vector<std::int64_t> hist(f.p(), 0);
  for (std::uint32_t v = 0; v < f.order(); ++v) ++hist[f.trace(f.mul(Element{v}, alpha))];
  return CyclotomicInt::from_group_ring(f.p(), hist);
}

/// Parseval: sum_a |W_F(a, b)|^2 = p^{2n} for every b.
inline TheoremVerdict parseval_check(const WalshTable& t) {
  const Field& f = t.field();
  TheoremVerdict v("parseval");
  v.params = {{"p", f.p()}, {"n", f.n()}};
  const std::int64_t target = std::int64_t{f.order()} * f.order();
  for (std::uint32_t b = 0; b < f.order(); ++b) {
    CyclotomicInt acc(f.p());
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      const auto& w = t.at(Element{a}, Element{b});
      acc += w * w.conj();
    }
    const auto r = acc.rational();
    if (!r || *r != target) v.fail({{"b", format_element(f, Element{b})}, {"sum", acc.to_string()}});
  }
  return v;
}

/// n_F(a, b, c) = #{(x, y) : F(y) - c F(x) = b, F(y + a) - c^{-1} F(x + a) = b},
/// by the direct double loop.
inline std::uint32_t n_f_count(const FunctionTable& fn, Element c, Element a, Element b) {
  const Field& f = fn.field();
  detail::require_nonzero_c(c);
  const Element c_inv = f.inv(c);
  std::uint32_t count = 0;
  for (std::uint32_t xi = 0; xi < f.order(); ++xi) {
    const Element x{xi};
    for (std::uint32_t yi = 0; yi < f.order(); ++yi) {
      const Element y{yi};
      if (f.sub(fn(y), f.mul(c, fn(x))) != b) continue;
      if (f.sub(fn(f.add(y, a)), f.mul(c_inv, fn(f.add(x, a)))) == b) ++count;
    }
  }
  return count;
}

/// All n_F(a, b, c) at once: each (x, y, a) fixes b from the first equation.
inline std::vector<std::uint32_t> n_f_table(const FunctionTable& fn, Element c) {
  const Field& f = fn.field();
  detail::require_nonzero_c(c);
  const Element c_inv = f.inv(c);
  const std::uint32_t q = f.order();
  std::vector<std::uint32_t> out(std::size_t{q} * q, 0);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t x = 0; x < q; ++x) {
      const Element cfx = f.mul(c, fn(Element{x}));
      const Element cfxa = f.mul(c_inv, fn(f.add(Element{x}, Element{a})));
      for (std::uint32_t y = 0; y < q; ++y) {
        const Element b = f.sub(fn(Element{y}), cfx);
        if (f.sub(fn(f.add(Element{y}, Element{a})), cfxa) == b) ++out[std::size_t{a} * q + b.index];
      }
    }
  }
  return out;
}

namespace detail {

// One factor of the constrained product:
//   V(u, z) conj V(c u, -w) V(v, -z) conj V(c^{-1} v, w)
inline CyclotomicInt walsh_quad(const WalshTable& t, Element c, Element c_inv, Element u, Element v, Element w, Element z) {
  const Field& f = t.field();
  return t.comp(u, z) * t.comp(f.mul(c, u), f.neg(w)).conj() * t.comp(v, f.neg(z)) *
         t.comp(f.mul(c_inv, v), w).conj();
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t e) {
  BigInt r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace detail

/// S_j: the sum over tuples with sum(w_i + z_i) = 0 and sum(u_i + v_i) = 0 of
/// the product of j quads. j = 1 and j = 2 only; j = 2 needs p^n <= 27.
inline CyclotomicInt walsh_constrained_sum(const WalshTable& t, Element c, unsigned j) {
  const Field& f = t.field();
  detail::require_nonzero_c(c);
  const Element c_inv = f.inv(c);
  const std::uint32_t q = f.order();
  if (j == 1) {
    CyclotomicInt acc(f.p());
    for (std::uint32_t z = 0; z < q; ++z)
      for (std::uint32_t v = 0; v < q; ++v)
        acc += detail::walsh_quad(t, c, c_inv, f.neg(Element{v}), Element{v}, f.neg(Element{z}), Element{z});
    return acc;
  }
  if (j != 2) throw std::invalid_argument("constrained Walsh sums are implemented for j <= 2");
  if (q > 27) throw std::invalid_argument("j = 2 sums are limited to p^n <= 27");
  // G(s, t) = sum over u + v = s, w + z = t; then S_2 = sum G(s, t) G(-s, -t).
  std::vector<CyclotomicInt> g(std::size_t{q} * q, CyclotomicInt(f.p()));
  for (std::uint32_t u = 0; u < q; ++u)
    for (std::uint32_t v = 0; v < q; ++v) {
      const std::uint32_t s = f.add(Element{u}, Element{v}).index;
      for (std::uint32_t w = 0; w < q; ++w)
        for (std::uint32_t z = 0; z < q; ++z) {
          const std::uint32_t tt = f.add(Element{w}, Element{z}).index;
          g[std::size_t{s} * q + tt] += detail::walsh_quad(t, c, c_inv, Element{u}, Element{v}, Element{w}, Element{z});
        }
    }
  CyclotomicInt acc(f.p());
  for (std::uint32_t s = 0; s < q; ++s)
    for (std::uint32_t tt = 0; tt < q; ++tt)
      acc += g[std::size_t{s} * q + tt] * g[std::size_t{f.neg(Element{s}).index} * q + f.neg(Element{tt}).index];
  return acc;
}

struct PivotCheck {
  unsigned j = 0;
  CyclotomicInt s_j;
  BigInt normalized;  // p^{-(2j-1) 2n} S_j
  BigInt direct;      // sum_{a,b} n_F(a,b,c)^j
  bool rational = false;
  bool divisible = false;
  bool holds() const { return rational && divisible && normalized == direct; }
};

/// p^{-(2j-1)2n} S_j against sum_{a,b} n_F(a,b,c)^j from the double loop.
inline PivotCheck pivot_check(const FunctionTable& fn, const WalshTable& t, Element c, unsigned j) {
  const Field& f = fn.field();
  PivotCheck out;
  out.j = j;
  out.s_j = walsh_constrained_sum(t, c, j);
  const auto r = out.s_j.rational();
  out.rational = r.has_value();
  const BigInt scale = detail::big_pow(f.p(), std::uint64_t{2 * j - 1} * 2 * f.n());
  if (r) {
    const BigInt s = *r;
    out.divisible = s % scale == 0;
    out.normalized = s / scale;
  }
  for (auto v : n_f_table(fn, c)) out.direct += detail::big_pow(v, j);
  return out;
}

struct PhiPolynomial {
  std::uint32_t beta = 0;
  std::vector<BigInt> A;  // A_0 .. A_beta

  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = A.size(); i-- > 0;) acc = acc * x + A[i];
    return acc;
  }
};

/// prod_{i=1}^{beta} (x - i), checked to vanish on [1, beta] and be positive
/// on (beta, max_count].
inline PhiPolynomial build_phi(std::uint32_t beta, std::uint64_t max_count) {
  if (beta < 1) throw std::invalid_argument("phi needs beta >= 1");
  PhiPolynomial phi;
  phi.beta = beta;
  phi.A = {1};
  for (std::uint32_t i = 1; i <= beta; ++i) {
    std::vector<BigInt> next(phi.A.size() + 1, 0);
    for (std::size_t k = 0; k < phi.A.size(); ++k) {
      next[k + 1] += phi.A[k];
      next[k] -= phi.A[k] * i;
    }
    phi.A = std::move(next);
  }
  for (std::uint64_t x = 1; x <= std::max<std::uint64_t>(max_count, beta); ++x) {
    const BigInt v = phi(x);
    if (x <= beta ? v != 0 : v <= 0) throw std::logic_error("phi invariant violated at " + std::to_string(x));
  }
  return phi;
}

struct CharactResult {
  BigInt lhs;                       // p^{2n} A_0 + sum_j A_j p^{-(2j-1)2n} S_j
  BigInt via_counts;                // same with sum_{a,b} n_F^j in place of the Walsh sums
  std::vector<PivotCheck> pivots;   // j = 1 .. j_max
};

/// Left side of the characterization truncated at j_max <= min(2, deg phi).
inline CharactResult charact_lhs(const FunctionTable& fn, Element c, const PhiPolynomial& phi, unsigned j_max) {
  const Field& f = fn.field();
  detail::require_nonzero_c(c);
  if (j_max > 2) throw std::invalid_argument("j_max > 2 is not supported");
  if (j_max + 1 > phi.A.size()) throw std::invalid_argument("j_max exceeds the degree of phi");
  const WalshTable t(fn);
  CharactResult out;
  const BigInt base = detail::big_pow(f.p(), 2 * f.n()) * phi.A[0];
  out.lhs = base;
  out.via_counts = base;
  for (unsigned j = 1; j <= j_max; ++j) {
    auto pc = pivot_check(fn, t, c, j);
    if (!pc.rational || !pc.divisible) throw std::logic_error("Walsh sum S_" + std::to_string(j) + " is not an exact integer multiple");
    out.lhs += phi.A[j] * pc.normalized;
    out.via_counts += phi.A[j] * pc.direct;
    out.pivots.push_back(std::move(pc));
  }
  return out;
}

inline nlohmann::json to_json(const CharactResult& r, const Field& f, Element c, const PhiPolynomial& phi) {
  return {{"c", format_element(f, c)}, {"beta_tested", phi.beta}, {"lhs", r.lhs.str()}, {"equality", r.lhs == 0}};
}

/// sum_{a,b} phi(n_F(a, b, c)) evaluated directly on the counts.
inline BigInt phi_sum_direct(const FunctionTable& fn, Element c, const PhiPolynomial& phi) {
  BigInt acc = 0;
  for (auto v : n_f_table(fn, c)) acc += phi(v);
  return acc;
}

struct OneUniformResult {
  CyclotomicInt raw;
  BigInt value;
  BigInt bound;  // p^{4n}
  std::uint32_t beta = 0;
  bool equality() const { return value == bound; }
  /// sum >= bound, with equality exactly when beta = 1.
  bool consistent() const { return value >= bound && equality() == (beta == 1); }
};

/// sum_{z,v} V(-v, z) conj V(-c v, z) V(v, -z) conj V(c^{-1} v, -z) with
/// V(u, z) = W_F(z, u), and beta from the boomerang table for comparison.
inline OneUniformResult one_uniform_sum(const FunctionTable& fn, Element c) {
  const Field& f = fn.field();
  if (c.index == 0 || c == f.one()) throw std::invalid_argument("one_uniform_sum needs c != 0, 1");
  const WalshTable t(fn);
  OneUniformResult out;
  out.raw = walsh_constrained_sum(t, c, 1);
  const auto r = out.raw.rational();
  if (!r) throw std::logic_error("one-uniform Walsh sum is not rational: " + out.raw.to_string());
  out.value = *r;
  out.bound = detail::big_pow(f.p(), 4 * f.n());
  out.beta = boomerang_uniformity(c_bct_system(fn, c)).beta;
  return out;
}

inline nlohmann::json to_json(const OneUniformResult& r, const Field& f, Element c) {
  return {{"c", format_element(f, c)},
          {"sum", r.value.str()},
          {"bound", r.bound.str()},
          {"equality", r.equality()},
          {"beta", r.beta},
          {"consistent", r.consistent()}};
}

}  // namespace cboom
