#pragma once

// Multiplicative c-derivatives and the c-Difference Distribution Table.
//
//   cD_a F(x)   = F(x + a) - c F(x)
//   cDelta(a,b) = #{x : cD_a F(x) = b}
//   delta_{F,c} = max cDelta(a,b), rows a = 0 excluded only when c = 1

#include <string>
#include <variant>

#include "cboom/count_table.hpp"
#include "cboom/function.hpp"
#include "cboom/verdict.hpp"

namespace cboom {

inline FunctionTable c_derivative(const FunctionTable& fn, Element c, Element a) {
  const Field& f = fn.field();
  std::vector<Element> values(f.order());
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    values[x] = f.sub(fn(f.add(Element{x}, a)), f.mul(c, fn(Element{x})));
  }
  return FunctionTable(fn.field_ptr(), std::move(values),
                       "D_{" + format_element(f, a) + "," + format_element(f, c) + "}(" + fn.label() + ")");
}

inline CountTable c_ddt(const FunctionTable& fn, Element c) {
  const Field& f = fn.field();
  CountTable t(TableKind::ddt, fn.field_ptr(), c, fn.label());
  std::vector<Element> cf(f.order());
  for (std::uint32_t x = 0; x < f.order(); ++x) cf[x] = f.mul(c, fn(Element{x}));
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      const Element b = f.sub(fn(f.add(Element{x}, Element{a})), cf[x]);
      ++t.at(a, b.index);
    }
  }
  return t;
}

inline std::uint32_t c_diff_uniformity(const CountTable& ddt) {
  const Field& f = ddt.field();
  const std::uint32_t first_row = ddt.c() == f.one() ? 1 : 0;
  std::uint32_t best = 0;
  for (std::uint32_t a = first_row; a < f.order(); ++a) {
    for (std::uint32_t b = 0; b < f.order(); ++b) best = std::max(best, ddt.at(a, b));
  }
  return best;
}

inline std::uint32_t c_diff_uniformity(const FunctionTable& fn, Element c) { return c_diff_uniformity(c_ddt(fn, c)); }

struct PcnClass {
  std::uint32_t delta = 0;
  bool pcn() const { return delta == 1; }
  bool apcn() const { return delta == 2; }
  std::string name() const { return pcn() ? "PcN" : apcn() ? "APcN" : std::to_string(delta) + "-uniform"; }
};

inline PcnClass classify_pcn(const FunctionTable& fn, Element c) { return {c_diff_uniformity(fn, c)}; }

/// Second route to PcN: every c-derivative over the rows counted by the
/// uniformity is a permutation.
inline bool pcn_by_derivatives(const FunctionTable& fn, Element c) {
  const Field& f = fn.field();
  const std::uint32_t first_row = c == f.one() ? 1 : 0;
  for (std::uint32_t a = first_row; a < f.order(); ++a) {
    if (!c_derivative(fn, c, Element{a}).is_perm()) return false;
  }
  return true;
}

enum class InverseDdtForm {
  as_stated,  // second argument -a c^{-d}
  corrected,  // second argument +a c^{-d}; the two agree when p = 2
};

/// For F = x^d a permutation monomial and c != 0, checks entrywise
///   cDelta_{F^{-1}}(a, b) = {c^{-d}}Delta_F(b c^{-1}, -a c^{-d})
/// or, with InverseDdtForm::corrected, the same with +a c^{-d}.
inline TheoremVerdict monomial_inverse_ddt_check(std::shared_ptr<const Field> field, std::uint64_t d, Element c,
                                                 InverseDdtForm form = InverseDdtForm::as_stated) {
  const Field& f = *field;
  if (c.index == 0) throw std::invalid_argument("c = 0 is not allowed here");
  if (std::gcd(d, static_cast<std::uint64_t>(f.order() - 1)) != 1) {
    throw NotAPermutation("x^" + std::to_string(d) + " is not a permutation of F_" + std::to_string(f.order()));
  }
  const FunctionTable fn = monomial(field, d);
  const FunctionTable inv = comp_inverse(fn);
  const Element c_minus_d = f.pow(c, -static_cast<std::int64_t>(d % (f.order() - 1)));
  const CountTable lhs = c_ddt(inv, c);
  const CountTable rhs = c_ddt(fn, c_minus_d);
  const Element c_inv = f.inv(c);

  TheoremVerdict v("monomial-inverse-ddt");
  v.params = {{"p", f.p()}, {"n", f.n()}, {"d", d}, {"c", format_element(f, c)},
              {"form", form == InverseDdtForm::as_stated ? "as-stated" : "corrected"}};
  for (std::uint32_t a = 0; a < f.order(); ++a) {
    for (std::uint32_t b = 0; b < f.order(); ++b) {
      const Element ra = f.mul(Element{b}, c_inv);
      const Element rb0 = f.mul(Element{a}, c_minus_d);
      const Element rb = form == InverseDdtForm::as_stated ? f.neg(rb0) : rb0;
      if (lhs.at(a, b) != rhs.at(ra, rb)) {
        v.fail({{"a", format_element(f, Element{a})},
                {"b", format_element(f, Element{b})},
                {"lhs", lhs.at(a, b)},
                {"rhs", rhs.at(ra, rb)}});
      }
    }
  }
  return v;
}

}  // namespace cboom
