#pragma once

// (n,n)-functions over F_{p^n}: symbolic univariate expressions and their
// exhaustive value tables.

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cboom/field.hpp"
#include "cboom/text.hpp"

namespace cboom {

class NotAPermutation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Term {
  Element coefficient;
  std::uint64_t exponent = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sum of coefficient * x^exponent; exponents distinct, descending, < p^n,
/// coefficients nonzero.
class FunctionExpr {
 public:
  FunctionExpr(std::shared_ptr<const Field> field, std::vector<Term> terms)
      : field_(std::move(field)), terms_(std::move(terms)) {
    for (const auto& t : terms_) {
      if (t.exponent >= field_->order()) {
        throw std::invalid_argument("exponent " + std::to_string(t.exponent) + " out of range");
      }
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      if (terms_[i].exponent == terms_[i - 1].exponent) throw std::invalid_argument("duplicate exponent");
    }
    std::erase_if(terms_, [](const Term& t) { return t.coefficient.index == 0; });
  }

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }

  Element evaluate(Element x) const {
    Element acc = field_->zero();
    for (const auto& t : terms_) {
      acc = field_->add(acc, field_->mul(t.coefficient, field_->pow(x, static_cast<std::int64_t>(t.exponent))));
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& t : terms_) {
      std::string coef = format_element(*field_, t.coefficient);
      const bool compound = coef.find(' ') != std::string::npos;
      if (!out.empty()) out += " + ";
      if (t.exponent == 0) {
        out += compound ? "(" + coef + ")" : coef;
        continue;
      }
      if (t.coefficient != field_->one()) out += (compound ? "(" + coef + ")" : coef) + "*";
      out += "x";
      if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
    }
    return out;
  }

 private:
  std::shared_ptr<const Field> field_;
  std::vector<Term> terms_;
};

/// Parses `coef*x^e + ...`; coefficients are element literals in `a`, and
/// `inv` stands for x^{p^n-2}. Exponents >= p^n are rejected, not reduced.
inline FunctionExpr parse_function(std::string_view text, std::shared_ptr<const Field> field) {
  auto poly = detail::ExprParser(*field, text, true).parse();
  std::vector<Term> terms;
  for (const auto& [e, c] : poly) {
    if (c.index != 0) terms.push_back({c, e});
  }
  return FunctionExpr(std::move(field), std::move(terms));
}

/// Exhaustive value table: values()[i] is the image of element i.
class FunctionTable {
 public:
  FunctionTable(std::shared_ptr<const Field> field, std::vector<Element> values, std::string label)
      : field_(std::move(field)), values_(std::move(values)), label_(std::move(label)) {
    if (values_.size() != field_->order()) throw std::invalid_argument("function table has wrong length");
    std::vector<bool> seen(values_.size(), false);
    is_perm_ = true;
    for (Element v : values_) {
      if (v.index >= field_->order()) throw std::invalid_argument("function value out of range");
      if (seen[v.index]) is_perm_ = false;
      seen[v.index] = true;
    }
  }

  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const std::vector<Element>& values() const { return values_; }
  const std::string& label() const { return label_; }
  bool is_perm() const { return is_perm_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }

  Element operator()(Element x) const { return values_[x.index]; }

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return *a.field_ == *b.field_ && a.values_ == b.values_;
  }

 private:
  std::shared_ptr<const Field> field_;
  std::vector<Element> values_;
  std::string label_;
  bool is_perm_ = false;
};

inline FunctionTable tabulate(const FunctionExpr& expr) {
  const Field& f = expr.field();
  std::vector<Element> values(f.order());
  for (std::uint32_t i = 0; i < f.order(); ++i) values[i] = expr.evaluate(Element{i});
  return FunctionTable(expr.field_ptr(), std::move(values), expr.to_string());
}

inline FunctionTable tabulate(std::string_view text, std::shared_ptr<const Field> field) {
  return tabulate(parse_function(text, std::move(field)));
}

/// x^d for any d >= 0, evaluated directly (d may exceed p^n).
inline FunctionTable monomial(std::shared_ptr<const Field> field, std::uint64_t d, std::string label = {}) {
  const Field& f = *field;
  std::vector<Element> values(f.order());
  for (std::uint32_t i = 0; i < f.order(); ++i) values[i] = f.pow(Element{i}, static_cast<std::int64_t>(d));
  if (label.empty()) label = "x^" + std::to_string(d);
  return FunctionTable(std::move(field), std::move(values), std::move(label));
}

namespace family {

inline FunctionTable identity(std::shared_ptr<const Field> field) { return monomial(std::move(field), 1, "x"); }

inline FunctionTable square(std::shared_ptr<const Field> field) { return monomial(std::move(field), 2, "x^2"); }

/// x^{p^k + 1}.
inline FunctionTable gold(std::shared_ptr<const Field> field, std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("gold needs k >= 1");
  const std::uint64_t d = detail::ipow(field->p(), k) + 1;
  return monomial(std::move(field), d, "gold(k=" + std::to_string(k) + ")");
}

/// x^{(3^k + 1)/2} over F_{3^n}.
inline FunctionTable half_gold(std::shared_ptr<const Field> field, std::uint32_t k) {
  if (field->p() != 3) throw std::invalid_argument("half_gold is defined for p = 3 only");
  if (k < 1) throw std::invalid_argument("half_gold needs k >= 1");
  const std::uint64_t d = (detail::ipow(3, k) + 1) / 2;
  return monomial(std::move(field), d, "half_gold(k=" + std::to_string(k) + ")");
}

/// x^10 - u x^6 - u^2 x^2 over F_{3^n}.
inline FunctionTable dob(std::shared_ptr<const Field> field, Element u) {
  const Field& f = *field;
  if (f.p() != 3) throw std::invalid_argument("dob is defined for p = 3 only");
  const Element u2 = f.mul(u, u);
  std::vector<Element> values(f.order());
  for (std::uint32_t i = 0; i < f.order(); ++i) {
    const Element x{i};
    Element v = f.pow(x, 10);
    v = f.sub(v, f.mul(u, f.pow(x, 6)));
    v = f.sub(v, f.mul(u2, f.pow(x, 2)));
    values[i] = v;
  }
  std::string label = "dob(u=" + format_element(f, u) + ")";
  return FunctionTable(std::move(field), std::move(values), std::move(label));
}

/// x^{p^n - 2}.
inline FunctionTable inverse(std::shared_ptr<const Field> field) {
  const std::uint64_t d = field->order() - 2;
  return monomial(std::move(field), d, "inverse");
}

}  // namespace family

/// G with G(F(x)) = x.
inline FunctionTable comp_inverse(const FunctionTable& fn) {
  if (!fn.is_perm()) throw NotAPermutation("compositional inverse of a non-permutation: " + fn.label());
  std::vector<Element> inv(fn.size());
  for (std::uint32_t x = 0; x < fn.size(); ++x) inv[fn.values()[x].index] = Element{x};
  return FunctionTable(fn.field_ptr(), std::move(inv), "inverse_of(" + fn.label() + ")");
}

/// Classical differential uniformity: max over a != 0 and b of
/// #{x : F(x+a) - F(x) = b}.
inline std::uint32_t classical_differential_uniformity(const FunctionTable& fn) {
  const Field& f = fn.field();
  std::vector<std::uint32_t> row(f.order());
  std::uint32_t best = 0;
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    std::fill(row.begin(), row.end(), 0);
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      const Element b = f.sub(fn(f.add(Element{x}, Element{a})), fn(Element{x}));
      best = std::max(best, ++row[b.index]);
    }
  }
  return best;
}

inline bool is_pn(const FunctionTable& fn) { return classical_differential_uniformity(fn) == 1; }
inline bool is_apn(const FunctionTable& fn) { return classical_differential_uniformity(fn) == 2; }

}  // namespace cboom
