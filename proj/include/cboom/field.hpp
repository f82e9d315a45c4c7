#pragma once

// Arithmetic in F_{p^n} over a polynomial basis.
//
// Elements are encoded as a single index in [0, p^n) whose base-p digits are
// the polynomial-basis coefficients (digit i is the coefficient of x^i).
// Multiplication goes through log/antilog tables built from a primitive
// element at construction; the schoolbook path stays available for
// cross-checking.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cboom {

struct Element {
  std::uint32_t index = 0;

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  // n+1 coefficients in Z_p, constant term first, monic.
  std::vector<std::uint32_t> modulus;
  std::optional<std::uint32_t> generator;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

// Exact p^e; throws when the result would not fit in 64 bits.
inline std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("ipow overflow");
    r *= base;
  }
  return r;
}

// Remainder of a modulo a monic b, coefficients in Z_p, low degree first.
inline std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + p - (lead * b[i]) % p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

// Irreducibility by exhaustive search for a monic divisor of degree <= n/2.
inline bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    std::vector<std::uint32_t> g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      auto r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Construction polynomials used when a field spec names only (p, n).
///
/// The binary and ternary/quinary entries for n >= 2 are the moduli
/// the reference tables were computed with; n = 1 uses the canonical x.
inline std::optional<std::vector<std::uint32_t>> default_modulus(std::uint32_t p, std::uint32_t n) {
  if (n == 1 && detail::is_prime(p)) return std::vector<std::uint32_t>{0, 1};
  if (p == 2) {
    switch (n) {
      case 2: return std::vector<std::uint32_t>{1, 1, 1};
      case 3: return std::vector<std::uint32_t>{1, 1, 0, 1};
      case 4: return std::vector<std::uint32_t>{1, 1, 0, 0, 1};
      default: break;
    }
  } else if (p == 3) {
    switch (n) {
      case 2: return std::vector<std::uint32_t>{2, 2, 1};
      case 3: return std::vector<std::uint32_t>{1, 2, 0, 1};
      case 4: return std::vector<std::uint32_t>{2, 0, 0, 2, 1};
      case 5: return std::vector<std::uint32_t>{1, 2, 0, 0, 0, 1};
      default: break;
    }
  } else if (p == 5) {
    switch (n) {
      case 2: return std::vector<std::uint32_t>{2, 4, 1};
      case 3: return std::vector<std::uint32_t>{3, 3, 0, 1};
      case 4: return std::vector<std::uint32_t>{2, 4, 4, 0, 1};
      default: break;
    }
  }
  return std::nullopt;
}

/// Modulus x^5 + x^2 + 1 for F_{2^5}. Not one of the defaults; callers that
/// extend binary checks to n = 5 pass it explicitly.
inline std::vector<std::uint32_t> binary_quintic_modulus() { return {1, 0, 1, 0, 0, 1}; }

class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;
  static constexpr std::uint32_t kAddTableLimit = 1024;

  explicit Field(FieldSpec spec) : spec_(std::move(spec)) {
    validate();
    build_tables();
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t n() const { return spec_.n; }
  std::uint32_t order() const { return q_; }
  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element generator() const { return generator_; }

  /// Index p encodes the polynomial x; for n = 1 this is the constant 0 and
  /// the generator stands in.
  Element alpha() const { return spec_.n > 1 ? Element{spec_.p} : generator_; }

  Element element(std::uint64_t index) const {
    if (index >= q_) throw FieldError("element index " + std::to_string(index) + " out of range");
    return {static_cast<std::uint32_t>(index)};
  }

  Element from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(spec_.p);
    return {static_cast<std::uint32_t>(((v % p) + p) % p)};
  }

  std::vector<std::uint32_t> coefficients(Element x) const {
    std::vector<std::uint32_t> c(spec_.n);
    std::uint32_t t = x.index;
    for (auto& d : c) {
      d = t % spec_.p;
      t /= spec_.p;
    }
    return c;
  }

  Element from_coefficients(std::span<const std::uint32_t> c) const {
    std::uint32_t idx = 0;
    for (std::size_t i = c.size(); i-- > 0;) idx = idx * spec_.p + (c[i] % spec_.p);
    return {idx};
  }

  Element add(Element x, Element y) const {
    if (spec_.p == 2) return {x.index ^ y.index};
    if (!add_table_.empty()) return {add_table_[std::size_t{x.index} * q_ + y.index]};
    return add_digits(x, y, false);
  }

  Element neg(Element x) const {
    if (spec_.p == 2) return x;
    if (!neg_table_.empty()) return {neg_table_[x.index]};
    return add_digits(zero(), x, true);
  }

  Element sub(Element x, Element y) const { return add(x, neg(y)); }

  Element mul(Element x, Element y) const {
    if (x.index == 0 || y.index == 0) return zero();
    return {exp_[log_[x.index] + log_[y.index]]};
  }

  Element inv(Element x) const {
    if (x.index == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t l = log_[x.index];
    return {exp_[l == 0 ? 0 : q_ - 1 - l]};
  }

  Element div(Element x, Element y) const { return mul(x, inv(y)); }

  /// x^e with the exponent reduced modulo p^n - 1 for nonzero x; 0^0 = 1.
  Element pow(Element x, std::int64_t e) const {
    if (x.index == 0) {
      if (e < 0) throw std::domain_error("zero raised to a negative power");
      return e == 0 ? one() : zero();
    }
    const std::int64_t m = q_ - 1;
    const std::int64_t r = ((e % m) + m) % m;
    const auto l = static_cast<std::uint64_t>(log_[x.index]) * static_cast<std::uint64_t>(r);
    return {exp_[l % static_cast<std::uint64_t>(m)]};
  }

  /// Exponent given as a residue modulo p^n - 1 (for exponents too large for
  /// std::int64_t, e.g. p^{k r} sums).
  Element pow_mod_order(Element x, std::uint64_t e_mod) const {
    if (x.index == 0) return e_mod == 0 ? one() : zero();
    return {exp_[(static_cast<std::uint64_t>(log_[x.index]) * (e_mod % (q_ - 1))) % (q_ - 1)]};
  }

  /// Discrete log base the generator; x must be nonzero.
  std::uint32_t log(Element x) const {
    if (x.index == 0) throw std::domain_error("log of zero");
    return log_[x.index];
  }

  Element exp(std::uint64_t e) const { return {exp_[e % (q_ - 1)]}; }

  /// Polynomial product reduced by the modulus, without any tables.
  Element mul_schoolbook(Element x, Element y) const {
    const auto a = coefficients(x);
    const auto b = coefficients(y);
    std::vector<std::uint32_t> prod(2 * spec_.n - 1, 0);
    for (std::uint32_t i = 0; i < spec_.n; ++i) {
      for (std::uint32_t j = 0; j < spec_.n; ++j) {
        prod[i + j] = (prod[i + j] + a[i] * b[j]) % spec_.p;
      }
    }
    auto r = detail::poly_mod(std::move(prod), spec_.modulus, spec_.p);
    r.resize(spec_.n, 0);
    return from_coefficients(r);
  }

  /// x^{p^k}.
  Element frobenius(Element x, std::uint32_t k) const {
    if (x.index == 0) return x;
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < k % spec_.n; ++i) e = (e * spec_.p) % (q_ - 1);
    if (q_ == 2) return x;
    return pow_mod_order(x, e == 0 ? q_ - 1 : e);
  }

  /// Absolute trace into Z_p, as an integer in [0, p).
  std::uint32_t trace(Element x) const { return trace_[x.index]; }

  /// Relative trace into F_{p^g}; g must divide n.
  Element trace_rel(Element x, std::uint32_t g) const {
    if (g == 0 || spec_.n % g != 0) {
      throw FieldError("relative trace degree " + std::to_string(g) + " does not divide n");
    }
    Element acc = zero();
    Element term = x;
    for (std::uint32_t i = 0; i < spec_.n / g; ++i) {
      acc = add(acc, term);
      term = frobenius(term, g);
    }
    return acc;
  }

  bool is_square(Element x) const {
    if (spec_.p == 2 || x.index == 0) return true;
    return log_[x.index] % 2 == 0;
  }

  std::optional<Element> sqrt(Element x) const {
    if (x.index == 0) return zero();
    const std::uint32_t l = log_[x.index];
    if (spec_.p == 2) {
      // q - 1 is odd, so 2 is invertible modulo it; the inverse is q/2.
      return exp(static_cast<std::uint64_t>(l) * (q_ / 2));
    }
    if (l % 2 != 0) return std::nullopt;
    return exp(l / 2);
  }

  /// True iff x lies in the subfield F_{p^g}.
  bool in_subfield(Element x, std::uint32_t g) const { return frobenius(x, g) == x; }

  friend bool operator==(const Field& a, const Field& b) {
    return a.spec_.p == b.spec_.p && a.spec_.n == b.spec_.n && a.spec_.modulus == b.spec_.modulus;
  }

 private:
  void validate() {
    if (!detail::is_prime(spec_.p)) throw FieldError("p = " + std::to_string(spec_.p) + " is not prime");
    if (spec_.p > 31) throw FieldError("p must be at most 31");
    if (spec_.n < 1 || spec_.n > 8) throw FieldError("n must lie in [1, 8]");
    const std::uint64_t q = detail::ipow(spec_.p, spec_.n);
    if (q > kMaxOrder) throw FieldError("field order " + std::to_string(q) + " exceeds supported size");
    q_ = static_cast<std::uint32_t>(q);
    if (spec_.modulus.size() != spec_.n + 1) {
      throw FieldError("modulus must have n+1 = " + std::to_string(spec_.n + 1) + " coefficients");
    }
    for (auto c : spec_.modulus) {
      if (c >= spec_.p) throw FieldError("modulus coefficient " + std::to_string(c) + " not reduced mod p");
    }
    if (spec_.modulus.back() != 1) throw FieldError("modulus is not monic");
    if (!detail::is_irreducible(spec_.modulus, spec_.p)) throw FieldError("modulus is reducible");
  }

  Element add_digits(Element x, Element y, bool negate_y) const {
    std::uint32_t a = x.index;
    std::uint32_t b = y.index;
    std::uint32_t out = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < spec_.n; ++i) {
      const std::uint32_t da = a % spec_.p;
      std::uint32_t db = b % spec_.p;
      if (negate_y) db = (spec_.p - db) % spec_.p;
      out += ((da + db) % spec_.p) * place;
      a /= spec_.p;
      b /= spec_.p;
      place *= spec_.p;
    }
    return {out};
  }

  // Fills exp_/log_ from g; returns false when g is not primitive.
  bool try_generator(Element g) {
    if (g.index == 0) return false;
    std::vector<std::uint32_t> log(q_, UINT32_MAX);
    std::vector<std::uint32_t> ex(2 * (q_ - 1) + 1);
    Element cur = one();
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      if (log[cur.index] != UINT32_MAX) return false;
      log[cur.index] = i;
      ex[i] = cur.index;
      cur = mul_schoolbook(cur, g);
    }
    if (cur != one()) return false;
    for (std::uint32_t i = q_ - 1; i < ex.size(); ++i) ex[i] = ex[i - (q_ - 1)];
    log_ = std::move(log);
    exp_ = std::move(ex);
    generator_ = g;
    return true;
  }

  void build_tables() {
    if (spec_.p != 2) {
      neg_table_.resize(q_);
      for (std::uint32_t i = 0; i < q_; ++i) neg_table_[i] = add_digits(zero(), Element{i}, true).index;
      if (q_ <= kAddTableLimit) {
        add_table_.resize(std::size_t{q_} * q_);
        for (std::uint32_t i = 0; i < q_; ++i) {
          for (std::uint32_t j = 0; j < q_; ++j) {
            add_table_[std::size_t{i} * q_ + j] = add_digits(Element{i}, Element{j}, false).index;
          }
        }
      }
    }

    if (spec_.generator) {
      if (*spec_.generator >= q_ || !try_generator(Element{*spec_.generator})) {
        throw FieldError("generator " + std::to_string(*spec_.generator) + " is not primitive");
      }
    } else {
      bool found = spec_.n > 1 && try_generator(Element{spec_.p});
      for (std::uint32_t i = 1; !found && i < q_; ++i) found = try_generator(Element{i});
      if (!found) throw FieldError("no primitive element found");
    }

    trace_.resize(q_);
    for (std::uint32_t i = 0; i < q_; ++i) {
      Element acc = zero();
      Element term{i};
      for (std::uint32_t k = 0; k < spec_.n; ++k) {
        acc = add(acc, term);
        term = pow(term, spec_.p);
      }
      // The trace lands in the prime subfield, whose elements are the indices [0, p).
      if (acc.index >= spec_.p) throw std::logic_error("trace left the prime subfield");
      trace_[i] = acc.index;
    }
  }

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  Element generator_{};
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> trace_;
};

/// Multiplicative order of a nonzero element, by factoring p^n - 1.
inline std::uint64_t multiplicative_order(const Field& f, Element x) {
  if (x.index == 0) throw std::domain_error("order of zero");
  std::uint64_t order = f.order() - 1;
  for (auto r : detail::distinct_prime_factors(order)) {
    while (order % r == 0 && f.pow(x, static_cast<std::int64_t>(order / r)) == f.one()) order /= r;
  }
  return order;
}

inline std::vector<Element> all_elements(const Field& f) {
  std::vector<Element> out(f.order());
  for (std::uint32_t i = 0; i < f.order(); ++i) out[i] = Element{i};
  return out;
}

/// T_ell(w) via T_0 = 2, T_1 = w, T_{l+1} = w T_l - T_{l-1}.
inline Element chebyshev_t(const Field& f, std::uint64_t ell, Element w) {
  Element prev = f.from_int(2);
  if (ell == 0) return prev;
  Element cur = w;
  for (std::uint64_t i = 1; i < ell; ++i) {
    Element next = f.sub(f.mul(w, cur), prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Roots of x^2 + a1 x + a0, sorted by index; a double root appears once.
inline std::vector<Element> solve_quadratic(const Field& f, Element a1, Element a0) {
  std::vector<Element> roots;
  if (f.p() == 2) {
    if (a1.index == 0) {
      roots.push_back(*f.sqrt(a0));
    } else {
      const Element t = f.div(a0, f.mul(a1, a1));
      if (f.trace(t) == 0) {
        // y^2 + y = t has a solution; scan for it.
        for (std::uint32_t i = 0; i < f.order(); ++i) {
          const Element y{i};
          if (f.add(f.mul(y, y), y) == t) {
            roots.push_back(f.mul(a1, y));
            roots.push_back(f.mul(a1, f.add(y, f.one())));
            break;
          }
        }
      }
    }
  } else {
    const Element disc = f.sub(f.mul(a1, a1), f.mul(f.from_int(4), a0));
    if (auto s = f.sqrt(disc)) {
      const Element half = f.inv(f.from_int(2));
      const Element minus_a1 = f.neg(a1);
      roots.push_back(f.mul(f.add(minus_a1, *s), half));
      if (s->index != 0) roots.push_back(f.mul(f.sub(minus_a1, *s), half));
    }
  }
  for (Element r : roots) {
    const Element v = f.add(f.add(f.mul(r, r), f.mul(a1, r)), a0);
    if (v.index != 0) throw std::logic_error("quadratic root failed substitution");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct GcdCheck {
  std::uint64_t euclid = 0;
  std::uint64_t closed_form = 0;
  bool consistent() const { return euclid == closed_form; }
};

/// gcd(p^k + 1, p^n - 1) by Euclid, alongside the closed form in terms of
/// gcd(k, n): (2^{gcd(2k,n)} - 1)/(2^{gcd(k,n)} - 1) for p = 2; for odd p,
/// 2 when n/gcd(n,k) is odd and p^{gcd(k,n)} + 1 otherwise.
inline GcdCheck gcd_formula(std::uint32_t p, std::uint32_t k, std::uint32_t n) {
  if (k < 1 || n < 1) throw std::invalid_argument("gcd_formula needs k, n >= 1");
  GcdCheck out;
  out.euclid = std::gcd(detail::ipow(p, k) + 1, detail::ipow(p, n) - 1);
  const std::uint32_t g = std::gcd(k, n);
  if (p == 2) {
    out.closed_form = (detail::ipow(2, std::gcd(2 * k, n)) - 1) / (detail::ipow(2, g) - 1);
  } else if ((n / g) % 2 == 1) {
    out.closed_form = 2;
  } else {
    out.closed_form = detail::ipow(p, g) + 1;
  }
  return out;
}

/// Some y with y^p - y = x, when one exists (exactly when Tr(x) = 0).
inline std::optional<Element> hilbert90_witness(const Field& f, Element x) {
  for (std::uint32_t i = 0; i < f.order(); ++i) {
    const Element y{i};
    if (f.sub(f.pow(y, f.p()), y) == x) return y;
  }
  return std::nullopt;
}

}  // namespace cboom
