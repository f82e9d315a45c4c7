#pragma once

// c-Boomerang Connectivity Table.
//
// Definition (permutations only, c != 0):
//   cB(a,b) = #{x : F^{-1}(c^{-1} F(x+a) + b) - F^{-1}(c F(x) + b) = a}
// Boomerang system (any function, c != 0):
//   cB(a,b) = #{(x, g) : F(x+g) - c F(x) = b  and  F(x+g+a) - c^{-1} F(x+a) = b}
// beta_{F,c} is the max over a != 0 and b != 0.

#include <vector>

#include "cboom/count_table.hpp"
#include "cboom/diff_tables.hpp"
#include "cboom/function.hpp"
#include "cboom/parallel.hpp"
#include "cboom/verdict.hpp"

namespace cboom {

namespace detail {

inline void require_nonzero_c(Element c) {
  if (c.index == 0) throw std::invalid_argument("c = 0 is excluded for the c-BCT");
}

}  // namespace detail

/// Single cell through the compositional inverse.
inline std::uint32_t c_bct_def(const FunctionTable& fn, const FunctionTable& inverse, Element c, Element a, Element b) {
  const Field& f = fn.field();
  detail::require_nonzero_c(c);
  const Element c_inv = f.inv(c);
  std::uint32_t count = 0;
  for (std::uint32_t xi = 0; xi < f.order(); ++xi) {
    const Element x{xi};
    const Element lhs = inverse(f.add(f.mul(c_inv, fn(f.add(x, a))), b));
    const Element rhs = inverse(f.add(f.mul(c, fn(x)), b));
    if (f.sub(lhs, rhs) == a) ++count;
  }
  return count;
}

inline std::uint32_t c_bct_def(const FunctionTable& fn, Element c, Element a, Element b) {
  return c_bct_def(fn, comp_inverse(fn), c, a, b);
}

/// Whole table through the definition.
inline CountTable c_bct_def_table(const FunctionTable& fn, Element c) {
  const Field& f = fn.field();
  detail::require_nonzero_c(c);
  const FunctionTable inverse = comp_inverse(fn);
  const Element c_inv = f.inv(c);
  CountTable t(TableKind::bct, fn.field_ptr(), c, fn.label());
  std::vector<Element> shifted(f.order());
  std::vector<Element> scaled(f.order());
  for (std::uint32_t x = 0; x < f.order(); ++x) scaled[x] = f.mul(c, fn(Element{x}));
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      shifted[x] = f.mul(c_inv, fn(f.add(Element{x}, Element{a})));
    }
    for (std::uint32_t b = 0; b < f.order(); ++b) {
      std::uint32_t count = 0;
      for (std::uint32_t x = 0; x < f.order(); ++x) {
        const Element lhs = inverse(f.add(shifted[x], Element{b}));
        const Element rhs = inverse(f.add(scaled[x], Element{b}));
        if (f.sub(lhs, rhs) == Element{a}) ++count;
      }
      t.at(a, b) = count;
    }
  }
  return t;
}

/// Boomerang system, bucketed per g: x is filed under G_g(x) = F(x+g) - c F(x)
/// and y under H_g(y) = F(y+g) - c^{-1} F(y); each pair (x, y) sharing a
/// value b adds one to cell (y - x, b). Partitioned over g when workers > 1.
inline CountTable c_bct_system(const FunctionTable& fn, Element c, unsigned workers = 1) {
  const Field& f = fn.field();
  detail::require_nonzero_c(c);
  const std::uint32_t q = f.order();
  const Element c_inv = f.inv(c);
  std::vector<Element> cf(q);
  std::vector<Element> cinvf(q);
  for (std::uint32_t x = 0; x < q; ++x) {
    cf[x] = f.mul(c, fn(Element{x}));
    cinvf[x] = f.mul(c_inv, fn(Element{x}));
  }

  struct Scratch {
    std::vector<std::uint32_t> g_start, h_start, g_items, h_items, g_key, h_key;
    std::vector<std::uint32_t> counts;
  };

  auto accumulate = [&](std::uint32_t gamma, Scratch& s) {
    // Counting sort of x by G value and y by H value.
    s.g_start.assign(q + 1, 0);
    s.h_start.assign(q + 1, 0);
    for (std::uint32_t x = 0; x < q; ++x) {
      const Element shifted = fn(f.add(Element{x}, Element{gamma}));
      s.g_key[x] = f.sub(shifted, cf[x]).index;
      s.h_key[x] = f.sub(shifted, cinvf[x]).index;
      ++s.g_start[s.g_key[x] + 1];
      ++s.h_start[s.h_key[x] + 1];
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      s.g_start[b + 1] += s.g_start[b];
      s.h_start[b + 1] += s.h_start[b];
    }
    std::vector<std::uint32_t> g_fill(s.g_start.begin(), s.g_start.end() - 1);
    std::vector<std::uint32_t> h_fill(s.h_start.begin(), s.h_start.end() - 1);
    for (std::uint32_t x = 0; x < q; ++x) {
      s.g_items[g_fill[s.g_key[x]]++] = x;
      s.h_items[h_fill[s.h_key[x]]++] = x;
    }
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t i = s.g_start[b]; i < s.g_start[b + 1]; ++i) {
        const Element x{s.g_items[i]};
        for (std::uint32_t j = s.h_start[b]; j < s.h_start[b + 1]; ++j) {
          const Element a = f.sub(Element{s.h_items[j]}, x);
          ++s.counts[std::size_t{a.index} * q + b];
        }
      }
    }
  };

  auto make_scratch = [q] {
    Scratch s;
    s.g_items.resize(q);
    s.h_items.resize(q);
    s.g_key.resize(q);
    s.h_key.resize(q);
    s.counts.assign(std::size_t{q} * q, 0);
    return s;
  };

  CountTable t(TableKind::bct, fn.field_ptr(), c, fn.label());
  workers = std::max(1u, std::min(workers, q));
  if (workers == 1) {
    Scratch s = make_scratch();
    for (std::uint32_t gamma = 0; gamma < q; ++gamma) accumulate(gamma, s);
    t.entries() = std::move(s.counts);
    return t;
  }
  // One scratch per contiguous block of g values; blocks are summed in order.
  std::vector<Scratch> parts(workers);
  parallel_for(workers, workers, [&](std::size_t w) {
    parts[w] = make_scratch();
    for (std::uint32_t gamma = static_cast<std::uint32_t>(w); gamma < q; gamma += workers) accumulate(gamma, parts[w]);
  });
  auto& out = t.entries();
  for (const auto& part : parts) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += part.counts[i];
  }
  return t;
}

/// Literal quadruple loop over (a, b, x, g); test oracle for small fields.
inline CountTable c_bct_naive(const FunctionTable& fn, Element c) {
  const Field& f = fn.field();
  detail::require_nonzero_c(c);
  const Element c_inv = f.inv(c);
  CountTable t(TableKind::bct, fn.field_ptr(), c, fn.label());
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    for (std::uint32_t b = 0; b < f.order(); ++b) {
      std::uint32_t count = 0;
      for (std::uint32_t x = 0; x < f.order(); ++x) {
        for (std::uint32_t g = 0; g < f.order(); ++g) {
          const Element xg = f.add(Element{x}, Element{g});
          const Element xa = f.add(Element{x}, Element{a});
          const bool first = f.sub(fn(xg), f.mul(c, fn(Element{x}))) == Element{b};
          const bool second = f.sub(fn(f.add(xg, Element{a})), f.mul(c_inv, fn(xa))) == Element{b};
          if (first && second) ++count;
        }
      }
      t.at(a, b) = count;
    }
  }
  return t;
}

/// One row a of the boomerang system: each (x, g) fixes b from the first
/// equation and is kept when the second agrees. Cost q^2.
inline std::vector<std::uint32_t> c_bct_row(const FunctionTable& fn, Element c, Element a) {
  const Field& f = fn.field();
  detail::require_nonzero_c(c);
  const Element c_inv = f.inv(c);
  std::vector<std::uint32_t> row(f.order(), 0);
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const Element cfx = f.mul(c, fn(Element{x}));
    const Element cfxa = f.mul(c_inv, fn(f.add(Element{x}, a)));
    for (std::uint32_t g = 0; g < f.order(); ++g) {
      const Element xg = f.add(Element{x}, Element{g});
      const Element b = f.sub(fn(xg), cfx);
      if (f.sub(fn(f.add(xg, a)), cfxa) == b) ++row[b.index];
    }
  }
  return row;
}

struct BoomerangUniformity {
  Element c;
  std::uint32_t beta = 0;                 // max over a != 0, b != 0
  std::uint32_t beta_a_nonzero = 0;       // max over a != 0, any b
  std::uint32_t beta_all = 0;             // max over every cell
  std::vector<std::pair<Element, Element>> argmax;  // cells (a, b) attaining beta
};

inline BoomerangUniformity boomerang_uniformity(const CountTable& bct) {
  BoomerangUniformity u;
  u.c = bct.c();
  const std::uint32_t q = bct.size();
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      const std::uint32_t v = bct.at(a, b);
      u.beta_all = std::max(u.beta_all, v);
      if (a == 0) continue;
      u.beta_a_nonzero = std::max(u.beta_a_nonzero, v);
      if (b == 0) continue;
      if (v > u.beta) {
        u.beta = v;
        u.argmax.clear();
      }
      if (v == u.beta) u.argmax.emplace_back(Element{a}, Element{b});
    }
  }
  return u;
}

inline std::uint32_t c_boomerang_uniformity(const FunctionTable& fn, Element c) {
  return boomerang_uniformity(c_bct_system(fn, c)).beta;
}

inline nlohmann::json to_json(const BoomerangUniformity& u, const Field& f) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [a, b] : u.argmax) cells.push_back({format_element(f, a), format_element(f, b)});
  return {{"c", format_element(f, u.c)}, {"beta", u.beta}, {"beta_a_nonzero", u.beta_a_nonzero}, {"beta_all_cells", u.beta_all}, {"argmax", cells}};
}

/// For F = x^d: cB(a, b) = cB(1, b a^{-d}) for every a != 0.
inline TheoremVerdict monomial_shift_check(std::shared_ptr<const Field> field, std::uint64_t d, Element c) {
  const Field& f = *field;
  detail::require_nonzero_c(c);
  const CountTable t = c_bct_system(monomial(field, d), c);
  TheoremVerdict v("monomial-shift");
  v.params = {{"p", f.p()}, {"n", f.n()}, {"d", d}, {"c", format_element(f, c)}};
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    const Element scale = f.pow(Element{a}, -static_cast<std::int64_t>(d % (f.order() - 1)));
    for (std::uint32_t b = 0; b < f.order(); ++b) {
      const Element b1 = f.mul(Element{b}, scale);
      if (t.at(a, b) != t.at(f.one(), b1)) {
        v.fail({{"a", format_element(f, Element{a})}, {"b", format_element(f, Element{b})}, {"lhs", t.at(a, b)}, {"rhs", t.at(f.one(), b1)}});
      }
    }
  }
  return v;
}

/// beta_{F,-1} >= delta_{F,-1} for permutations with p odd; for p = 2 the
/// classical c = 1 inequality beta_F >= delta_F is checked instead.
inline TheoremVerdict beta_minus1_vs_delta(const FunctionTable& fn) {
  const Field& f = fn.field();
  if (!fn.is_perm()) throw NotAPermutation("beta vs delta needs a permutation: " + fn.label());
  const Element c = f.neg(f.one());
  const std::uint32_t beta = boomerang_uniformity(c_bct_system(fn, c)).beta;
  const std::uint32_t delta = c_diff_uniformity(fn, c);
  TheoremVerdict v("beta-minus1-vs-delta");
  v.params = {{"p", f.p()}, {"n", f.n()}, {"function", fn.label()}, {"c", format_element(f, c)}};
  v.witness({{"beta", beta}, {"delta", delta}});
  if (f.p() == 2) v.note("p = 2: -1 = 1, classical inequality");
  if (beta < delta) v.fail({{"beta", beta}, {"delta", delta}});
  return v;
}

/// For permutations and c != 0, 1: cB(0, b) = cDelta(0, b) for every b.
inline TheoremVerdict zero_row_check(const FunctionTable& fn, Element c) {
  const Field& f = fn.field();
  if (!fn.is_perm()) throw NotAPermutation("zero-row check needs a permutation: " + fn.label());
  const CountTable bct = c_bct_system(fn, c);
  const CountTable ddt = c_ddt(fn, c);
  TheoremVerdict v("bct-ddt-zero-row");
  v.params = {{"p", f.p()}, {"n", f.n()}, {"function", fn.label()}, {"c", format_element(f, c)}};
  for (std::uint32_t b = 0; b < f.order(); ++b) {
    if (bct.at(0u, b) != ddt.at(0u, b)) {
      v.fail({{"b", format_element(f, Element{b})}, {"bct", bct.at(0u, b)}, {"ddt", ddt.at(0u, b)}});
    }
  }
  return v;
}

}  // namespace cboom
