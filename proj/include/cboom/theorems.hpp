#pragma once

// Verifiers for the monomial and inverse c-BCT theorems, plus the trinomial
// root counting (z^{p^k} - A z - B) the Gold bound relies on.

#include <array>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cboom/boom_tables.hpp"
#include "cboom/function.hpp"
#include "cboom/text.hpp"
#include "cboom/verdict.hpp"

namespace cboom {

struct TrinomialSpec {
  std::uint32_t k = 1;
  Element A;
  Element B;
};

/// Exponent base used in t_i = (p^{Em} - p^{E(i+1)}) / (p^E - 1). The
/// displayed formula has E = n; E = k is the other candidate.
enum class TiExponent { field_degree, frobenius_index };

struct TrinomialRoots {
  std::uint32_t g = 0;
  std::uint32_t m = 0;
  bool via_cm04 = false;
  Element alpha;  // alpha_{m-1}
  Element beta;   // beta_{m-1}
  std::uint64_t count = 0;
  std::vector<Element> roots;
  bool verified = false;  // every root substitutes to zero and |roots| = count
};

namespace detail {

// sum_{j=from}^{to} p^{e j}, reduced mod q - 1.
inline std::uint64_t geometric_exponent(const Field& f, std::uint32_t e, std::uint32_t from, std::uint32_t to) {
  const std::uint64_t mod = f.order() - 1;
  if (mod == 1) return 0;
  std::uint64_t step = 1;
  for (std::uint32_t i = 0; i < e; ++i) step = step * f.p() % mod;
  std::uint64_t term = 1;
  for (std::uint32_t j = 0; j < from; ++j) term = term * step % mod;
  std::uint64_t sum = 0;
  for (std::uint32_t j = from; j <= to; ++j) {
    sum = (sum + term) % mod;
    term = term * step % mod;
  }
  return sum;
}

inline Element trinomial_eval(const Field& f, const TrinomialSpec& s, Element z) {
  return f.sub(f.sub(f.frobenius(z, s.k), f.mul(s.A, z)), s.B);
}

inline Element field_pow(const Field& f, Element x, std::uint64_t e_mod) {
  if (x.index == 0) return e_mod == 0 ? f.one() : f.zero();
  return f.pow_mod_order(x, e_mod);
}

}  // namespace detail

inline std::vector<Element> trinomial_roots_scan(const Field& f, const TrinomialSpec& s) {
  std::vector<Element> out;
  for (std::uint32_t z = 0; z < f.order(); ++z)
    if (detail::trinomial_eval(f, s, Element{z}).index == 0) out.push_back(Element{z});
  return out;
}

/// Root count and roots of z^{p^k} - A z - B through the alpha/beta
/// recurrences; m = n / gcd(n, k) = 1 falls back to a scan.
inline TrinomialRoots trinomial_roots_cm04(const Field& f, const TrinomialSpec& s,
                                           TiExponent ti = TiExponent::frobenius_index) {
  if (s.A.index == 0) throw std::invalid_argument("trinomial needs A != 0");
  if (s.k < 1) throw std::invalid_argument("trinomial needs k >= 1");
  TrinomialRoots out;
  out.g = std::gcd(f.n(), s.k);
  out.m = f.n() / out.g;
  auto finish = [&] {
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    out.verified = out.roots.size() == out.count &&
                   std::all_of(out.roots.begin(), out.roots.end(),
                               [&](Element z) { return detail::trinomial_eval(f, s, z).index == 0; });
    return out;
  };
  if (out.m == 1) {
    out.roots = trinomial_roots_scan(f, s);
    out.count = out.roots.size();
    return finish();
  }
  out.via_cm04 = true;
  const std::uint32_t m = out.m;
  out.alpha = detail::field_pow(f, s.A, detail::geometric_exponent(f, s.k, 0, m - 1));
  out.beta = f.zero();
  for (std::uint32_t i = 0; i < m; ++i) {
    const std::uint64_t s_i = i + 1 <= m - 1 ? detail::geometric_exponent(f, s.k, i + 1, m - 1) : 0;
    out.beta = f.add(out.beta, f.mul(detail::field_pow(f, s.A, s_i), f.frobenius(s.B, s.k * i)));
  }
  if (out.alpha != f.one()) {
    out.count = 1;
    out.roots = {f.div(out.beta, f.sub(f.one(), out.alpha))};
    return finish();
  }
  if (out.beta.index != 0) {
    out.count = 0;
    return finish();
  }
  std::uint64_t pg = 1;
  for (std::uint32_t i = 0; i < out.g; ++i) pg *= f.p();
  out.count = pg;

  // tau^{p^k - 1} = A
  const std::uint64_t pk1 = detail::geometric_exponent(f, 1, 0, s.k - 1) * (f.p() - 1) % (f.order() - 1);
  std::optional<Element> tau;
  for (std::uint32_t t = 1; t < f.order() && !tau; ++t)
    if (detail::field_pow(f, Element{t}, pk1) == s.A) tau = Element{t};
  std::optional<Element> e;
  for (std::uint32_t t = 1; t < f.order() && !e; ++t)
    if (f.trace_rel(Element{t}, out.g).index != 0) e = Element{t};
  if (!tau || !e) return finish();

  const std::uint32_t E = ti == TiExponent::field_degree ? f.n() : s.k;
  Element x = f.zero();
  Element partial = f.zero();
  for (std::uint32_t i = 0; i < m; ++i) {
    partial = f.add(partial, f.frobenius(*e, s.k * i));
    const std::uint64_t t_i = i + 1 <= m - 1 ? detail::geometric_exponent(f, E, i + 1, m - 1) : 0;
    x = f.add(x, f.mul(partial, f.mul(detail::field_pow(f, s.A, t_i), f.frobenius(s.B, s.k * i))));
  }
  x = f.div(x, f.trace_rel(*e, out.g));
  for (std::uint32_t d = 0; d < f.order(); ++d) {
    if (f.in_subfield(Element{d}, out.g)) out.roots.push_back(f.add(x, f.mul(Element{d}, *tau)));
  }
  return finish();
}

/// #{z : z^{p^k} + z + d = 0}; the recurrence answer is checked against a scan.
inline std::uint32_t delta_d(const Field& f, Element d, std::uint32_t k) {
  const TrinomialSpec s{k, f.neg(f.one()), f.neg(d)};
  const auto r = trinomial_roots_cm04(f, s);
  const auto scan = trinomial_roots_scan(f, s);
  if (r.count != scan.size()) throw std::logic_error("trinomial count disagrees with scan");
  return static_cast<std::uint32_t>(r.count);
}

namespace detail {

inline std::uint32_t interior_beta(const FunctionTable& fn, Element c) {
  return boomerang_uniformity(c_bct_system(fn, c)).beta;
}

inline void require_c_not_0_1(const Field& f, Element c) {
  if (c.index == 0 || c == f.one()) throw std::invalid_argument("c must differ from 0 and 1");
}

inline std::uint64_t ipow64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace detail

/// beta_{x^2, c} <= 4 for p odd. Uses the a = 1 row: for a monomial of degree
/// 2 the row a is the row 1 with b rescaled by a^2.
inline TheoremVerdict square_bound_check(const std::shared_ptr<const Field>& field, Element c) {
  const Field& f = *field;
  detail::require_c_not_0_1(f, c);
  TheoremVerdict v("square_bound");
  v.params = {{"p", f.p()}, {"n", f.n()}, {"c", format_element(f, c)}};
  const auto row = c_bct_row(family::square(field), c, f.one());
  std::uint32_t beta = 0;
  for (std::uint32_t b = 1; b < f.order(); ++b) beta = std::max(beta, row[b]);
  if (beta > 4) v.fail({{"beta", beta}});
  else v.witness({{"beta", beta}});
  return v;
}

/// Gold lower bounds for F = x^{p^k+1}.
inline TheoremVerdict gold_bound_check(const std::shared_ptr<const Field>& field, std::uint32_t k, Element c) {
  const Field& f = *field;
  detail::require_c_not_0_1(f, c);
  TheoremVerdict v("gold_bound");
  v.params = {{"p", f.p()}, {"n", f.n()}, {"k", k}, {"c", format_element(f, c)}};
  const std::uint32_t beta = detail::interior_beta(family::gold(field, k), c);
  const Element c_inv = f.inv(c);
  const std::uint32_t d1 = delta_d(f, f.sub(f.one(), c_inv), k);
  const std::uint32_t d2 = delta_d(f, f.add(f.one(), c), k);
  const std::uint32_t product = d1 * (d2 + 1);
  const std::uint32_t g = std::gcd(f.n(), k);
  const std::uint32_t m = f.n() / g;
  nlohmann::json w = {{"beta", beta}, {"delta_1_minus_cinv", d1}, {"delta_1_plus_c", d2}, {"product_bound", product}};
  if (beta < product) v.fail(w);
  if (m % 2 == 1) {
    if (beta < 2) v.fail({{"beta", beta}, {"claim", "beta >= 2 (n/g odd)"}});
  } else {
    bool in_class = false;
    for (std::uint32_t z = 1; z < f.order() && !in_class; ++z)
      in_class = f.add(f.frobenius(Element{z}, k), Element{z}) == c_inv;
    w["constructed_class"] = in_class;
    if (in_class && beta < detail::ipow64(f.p(), g)) v.fail({{"beta", beta}, {"claim", "beta >= p^g"}, {"p^g", detail::ipow64(f.p(), g)}});
  }
  if (v.pass) v.witness(w);
  return v;
}

/// Which display of the Chebyshev system to count.
///   as_stated: the two-equation Chebyshev system taken literally.
///   corrected: the sum/difference of the expanded system with
///              -c^{-1}(T_h + T_{h-1})(x-1) in the second equation.
///   minus_one: the simplified system for c = -1.
enum class MuForm { as_stated, corrected, minus_one };

/// mu_c for F = x^{(3^k+1)/2} over F_{3^n}: pairs (x, g) solving the chosen
/// system, with z = x + g - 1 and y = x - 1 as Chebyshev arguments.
inline std::uint32_t mu_c_count(const Field& f, std::uint32_t k, Element c, Element b, MuForm form = MuForm::as_stated) {
  if (f.p() != 3) throw std::invalid_argument("mu_c is defined for p = 3");
  if (c.index == 0) throw std::invalid_argument("c = 0 is excluded");
  if (form == MuForm::minus_one && c != f.neg(f.one())) throw std::invalid_argument("the simplified system needs c = -1");
  const std::uint64_t h = (detail::ipow64(3, k) + 1) / 2;
  const std::uint32_t q = f.order();
  std::vector<Element> th(q), th1(q);
  for (std::uint32_t w = 0; w < q; ++w) {
    th[w] = chebyshev_t(f, h, Element{w});
    th1[w] = chebyshev_t(f, h - 1, Element{w});
  }
  const Element ci = f.inv(c);
  const Element two = f.from_int(2);
  const Element plus = f.add(c, ci);
  const Element minus = f.sub(c, ci);
  // Each equation reads P * T_h(z) + Q * T_{h-1}(z) + R(y) = rhs.
  Element p1, q1, p2, q2;
  if (form == MuForm::minus_one) {
    p1 = f.one(), q1 = f.zero(), p2 = f.zero(), q2 = f.one();
  } else {
    p1 = two, q1 = f.zero(), p2 = f.zero(), q2 = two;
  }
  const Element rhs1 = f.mul(two, b);
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    const Element y = f.sub(Element{x}, f.one());
    Element r1, r2;
    switch (form) {
      case MuForm::as_stated:
        r1 = f.add(f.neg(f.mul(minus, th[y.index])), f.mul(plus, th1[y.index]));
        r2 = f.add(f.mul(plus, th[y.index]), f.mul(f.neg(minus), th1[y.index]));
        break;
      case MuForm::corrected:
        r1 = f.add(f.neg(f.mul(plus, th[y.index])), f.mul(minus, th1[y.index]));
        r2 = f.sub(f.mul(minus, th[y.index]), f.mul(plus, th1[y.index]));
        break;
      case MuForm::minus_one:
        r1 = th1[y.index];
        r2 = f.neg(th[y.index]);
        break;
    }
    for (std::uint32_t g = 0; g < q; ++g) {
      const std::uint32_t z = f.sub(f.add(Element{x}, Element{g}), f.one()).index;
      const Element e1 = f.add(f.add(f.mul(p1, th[z]), f.mul(q1, th1[z])), r1);
      const Element e2 = f.add(f.add(f.mul(p2, th[z]), f.mul(q2, th1[z])), r2);
      if (e1 == rhs1 && e2.index == 0) ++count;
    }
  }
  return count;
}

/// B_F(1, b) >= mu_c for every b != 0, F = x^{(3^k+1)/2}.
inline TheoremVerdict mu_c_bound_check(const std::shared_ptr<const Field>& field, std::uint32_t k, Element c,
                                       MuForm form = MuForm::as_stated) {
  const Field& f = *field;
  detail::require_c_not_0_1(f, c);
  TheoremVerdict v("mu_c_bound");
  v.params = {{"p", f.p()}, {"n", f.n()}, {"k", k}, {"c", format_element(f, c)},
              {"form", form == MuForm::as_stated ? "as_stated" : form == MuForm::corrected ? "corrected" : "minus_one"}};
  const auto row = c_bct_row(family::half_gold(field, k), c, f.one());
  for (std::uint32_t b = 1; b < f.order(); ++b) {
    const std::uint32_t mu = mu_c_count(f, k, c, Element{b}, form);
    if (row[b] < mu) v.fail({{"b", format_element(f, Element{b})}, {"bct", row[b]}, {"mu", mu}});
  }
  return v;
}

/// Readings of the binary-inverse condition (iii).
///   as_stated: Tr(c^3/(c^2+c+1)^2) = 0
///   case4:     Tr(c/(c^2+c+1)^2) = 0, the trace from the x = g + 1 case
///   either:    one of the two
enum class Cond3Reading { as_stated, case4, either };

inline const char* to_string(Cond3Reading r) {
  switch (r) {
    case Cond3Reading::as_stated: return "as_stated";
    case Cond3Reading::case4: return "case4";
    case Cond3Reading::either: return "either";
  }
  return "";
}

struct BinaryInverseConditions {
  bool i = false, ii = false, iii_stated = false, iii_case4 = false, iv = false;
  bool any(Cond3Reading r) const {
    const bool iii = r == Cond3Reading::as_stated ? iii_stated : r == Cond3Reading::case4 ? iii_case4 : (iii_stated || iii_case4);
    return i || ii || iii || iv;
  }
};

/// Conditions (i)-(iv) as displayed. "There exists b" ranges over b != 0:
/// at b = 0 the trace argument vanishes and the clause would hold for every c.
inline BinaryInverseConditions binary_inverse_conditions(const Field& f, Element c) {
  if (f.p() != 2) throw std::invalid_argument("binary conditions need p = 2");
  BinaryInverseConditions out;
  const Element one = f.one();
  bool exists_b = false;
  for (std::uint32_t bi = 1; bi < f.order() && !exists_b; ++bi) {
    const Element b{bi};
    const Element b2 = f.mul(b, b), c2 = f.mul(c, c);
    const Element den = f.add(f.add(f.add(f.add(f.mul(b2, c), f.mul(b, c2)), b), c2), one);
    if (den.index == 0) continue;
    const Element num = f.mul(f.mul(b2, c2), f.add(f.add(f.mul(b, c), c), one));
    exists_b = f.trace(f.div(num, f.mul(den, den))) == 0;
  }
  const Element s = f.add(f.add(f.mul(c, c), c), one);  // c^2 + c + 1
  out.i = f.trace(c) == 0 && exists_b;
  out.ii = f.trace(f.inv(c)) == 0 && exists_b;
  if (s.index != 0) {
    const Element s2 = f.mul(s, s);
    out.iii_stated = f.trace(f.div(f.pow(c, 3), s2)) == 0 && exists_b;
    out.iii_case4 = f.trace(f.div(c, s2)) == 0 && exists_b;
  } else {
    for (std::uint32_t bi = 1; bi < f.order() && !out.iv; ++bi) {
      const Element b{bi};
      const Element t = f.add(f.add(f.mul(b, b), b), one);
      if (t.index == 0) continue;
      out.iv = f.trace(f.div(f.mul(f.mul(f.mul(b, b), c), f.add(b, c)), f.mul(t, t))) == 0;
    }
  }
  return out;
}

/// Binary inverse: entry bounds by n, then beta = 3 <=> (i) or (ii) or (iii) or (iv).
inline TheoremVerdict inverse_binary_verify(const std::shared_ptr<const Field>& field, Element c,
                                            Cond3Reading reading = Cond3Reading::as_stated) {
  const Field& f = *field;
  if (f.p() != 2) throw std::invalid_argument("inverse_binary_verify needs p = 2");
  detail::require_c_not_0_1(f, c);
  TheoremVerdict v("inverse_binary");
  v.params = {{"n", f.n()}, {"c", format_element(f, c)}, {"cond3", to_string(reading)}};
  const auto bct = c_bct_system(family::inverse(field), c);
  const auto u = boomerang_uniformity(bct);
  const std::uint32_t cap = f.n() <= 2 ? 1 : f.n() == 3 ? 2 : 3;
  if (u.beta_all > cap) v.fail({{"bound", cap}, {"max_entry", u.beta_all}});
  const auto cond = binary_inverse_conditions(f, c);
  const bool predicted = cond.any(reading);
  nlohmann::json fired = nlohmann::json::array();
  if (cond.i) fired.push_back("i");
  if (cond.ii) fired.push_back("ii");
  if (cond.iii_stated) fired.push_back("iii");
  if (cond.iii_case4) fired.push_back("iii_case4");
  if (cond.iv) fired.push_back("iv");
  nlohmann::json w = {{"beta", u.beta}, {"conditions", fired}, {"predicted_beta3", predicted}};
  if (u.beta == 3 && !u.argmax.empty())
    w["cell"] = {format_element(f, u.argmax.front().first), format_element(f, u.argmax.front().second)};
  if (f.n() >= 4 && (u.beta == 3) != predicted) v.fail(w);
  else v.witness(w);
  return v;
}

/// Odd-p inverse: entries with a != 0 are at most 4; conditions (i)/(ii)
/// force beta = 4 with the stated b on row a = 1.
inline TheoremVerdict inverse_odd_verify(const std::shared_ptr<const Field>& field, Element c) {
  const Field& f = *field;
  if (f.p() == 2) throw std::invalid_argument("inverse_odd_verify needs p odd");
  detail::require_c_not_0_1(f, c);
  TheoremVerdict v("inverse_odd");
  v.params = {{"p", f.p()}, {"n", f.n()}, {"c", format_element(f, c)}};
  const auto bct = c_bct_system(family::inverse(field), c);
  const auto u = boomerang_uniformity(bct);
  std::uint32_t max_a_nonzero = 0, max_a_zero = 0;
  for (std::uint32_t b = 0; b < f.order(); ++b) {
    max_a_zero = std::max(max_a_zero, bct.at(0u, b));
    for (std::uint32_t a = 1; a < f.order(); ++a) max_a_nonzero = std::max(max_a_nonzero, bct.at(a, b));
  }
  if (max_a_nonzero > 4) v.fail({{"max_entry_a_nonzero", max_a_nonzero}});

  auto poly = [&](std::initializer_list<std::int64_t> coeffs) {
    Element acc = f.zero(), pw = f.one();
    for (auto k : coeffs) {
      acc = f.add(acc, f.mul(f.from_int(k), pw));
      pw = f.mul(pw, c);
    }
    return acc;
  };
  auto sq = [&](Element x) { return f.is_square(x); };
  const bool common = sq(poly({1, -4})) && sq(poly({0, -4, 1}));
  const bool cond_i = poly({1, 2, -2, 2, 1}).index == 0 && sq(poly({3, -2, 3})) && common;
  const bool cond_ii = poly({1, -2, -2, -2, 1}).index == 0 && sq(poly({1, -6, 1})) && common;
  nlohmann::json w = {{"beta", u.beta}, {"max_entry_a_nonzero", max_a_nonzero}, {"max_entry_a_zero", max_a_zero},
                      {"cond_i", cond_i}, {"cond_ii", cond_ii}};
  auto check_cell = [&](const char* which, Element num, Element den) {
    if (den.index == 0) {
      v.note(std::string(which) + ": witness b undefined (zero denominator)");
      return;
    }
    const Element b = f.div(num, den);
    const std::uint32_t entry = bct.at(f.one(), b);
    w[std::string(which) + "_b"] = format_element(f, b);
    w[std::string(which) + "_entry"] = entry;
    if (u.beta != 4 || entry != 4) v.fail({{"condition", which}, {"beta", u.beta}, {"b", format_element(f, b)}, {"entry", entry}});
  };
  const Element c2 = f.mul(c, c);
  if (cond_i) check_cell("i", f.sub(c2, f.one()), f.add(c2, f.one()));
  if (cond_ii) check_cell("ii", f.sub(c2, f.one()), f.mul(f.from_int(2), c));
  if (v.pass) v.witness(w);
  return v;
}

/// Every monic quadratic x^2 + a x + b: solve_quadratic against a scan.
inline TheoremVerdict lemma_quadratic_census(const Field& f) {
  TheoremVerdict v("quadratic_census");
  v.params = {{"p", f.p()}, {"n", f.n()}};
  std::array<std::uint64_t, 3> hist{};
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    for (std::uint32_t b = 0; b < f.order(); ++b) {
      std::vector<Element> scan;
      for (std::uint32_t x = 0; x < f.order(); ++x) {
        const Element e{x};
        if (f.add(f.add(f.mul(e, e), f.mul(Element{a}, e)), Element{b}).index == 0) scan.push_back(e);
      }
      const auto solved = solve_quadratic(f, Element{a}, Element{b});
      if (solved != scan) v.fail({{"a", format_element(f, Element{a})}, {"b", format_element(f, Element{b})}});
      if (scan.size() <= 2) ++hist[scan.size()];
    }
  }
  v.witness({{"roots_0", hist[0]}, {"roots_1", hist[1]}, {"roots_2", hist[2]}});
  return v;
}

}  // namespace cboom
