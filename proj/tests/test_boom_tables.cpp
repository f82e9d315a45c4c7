#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "cboom/boom_tables.hpp"
#include "cboom/catalog.hpp"
#include "cboom/field_spec.hpp"

using namespace cboom;

namespace {

std::set<std::uint32_t> interior_values(const CountTable& t) {
  std::set<std::uint32_t> out;
  for (std::uint32_t a = 1; a < t.size(); ++a)
    for (std::uint32_t b = 1; b < t.size(); ++b)
      if (t.at(a, b) > 0) out.insert(t.at(a, b));
  return out;
}

// Binary-weight-2 exponents x^{2^i + 2^j} that permute F_{2^n}.
std::vector<std::uint64_t> quadratic_perm_exponents(std::uint32_t n) {
  std::vector<std::uint64_t> out;
  const std::uint64_t m = (1u << n) - 1;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const std::uint64_t d = (1u << i) + (1u << j);
      if (std::gcd(d, m) == 1) out.push_back(d);
    }
  return out;
}

}  // namespace

TEST(CBCT, ZeroRowIsOneForGenericC) {
  auto f = make_field(3, 3);
  const auto fn = family::inverse(f);
  for (std::uint32_t c = 2; c < f->order(); ++c) {
    if (Element{c} == f->neg(f->one())) continue;
    for (std::uint32_t b = 0; b < f->order(); ++b) EXPECT_EQ(c_bct_def(fn, Element{c}, f->zero(), Element{b}), 1u);
  }
}

TEST(CBCT, ClassicalInverseF16HasBetaSix) {
  auto f = make_field(2, 4);
  const auto t = c_bct_def_table(family::inverse(f), f->one());
  EXPECT_EQ(boomerang_uniformity(t).beta, 6u);
  EXPECT_EQ(boomerang_uniformity(c_bct_system(family::inverse(f), f->one())).beta, 6u);
}

TEST(CBCT, InverseF16NonClassicalMaxIsThree) {
  auto f = make_field(2, 4);
  const auto fn = family::inverse(f);
  std::uint32_t best = 0;
  for (std::uint32_t c = 2; c < 16; ++c) best = std::max(best, c_boomerang_uniformity(fn, Element{c}));
  EXPECT_EQ(best, 3u);
}

TEST(CBCT, SquareOverF9) {
  auto f = make_field(3, 2);
  const auto fn = family::square(f);
  std::set<std::uint32_t> values;
  for (std::uint32_t c = 2; c < 9; ++c) {
    const auto t = c_bct_system(fn, Element{c});
    for (auto v : interior_values(t)) values.insert(v);
    EXPECT_LE(boomerang_uniformity(t).beta, 2u);
  }
  EXPECT_EQ(values, (std::set<std::uint32_t>{1, 2}));
}

TEST(CBCT, COfZeroRejected) {
  auto f = make_field(3, 2);
  const auto fn = monomial(f, 3);
  EXPECT_THROW(c_bct_system(fn, f->zero()), std::invalid_argument);
  EXPECT_THROW(c_bct_def(fn, f->zero(), f->one(), f->one()), std::invalid_argument);
  EXPECT_THROW(c_bct_def(family::square(f), f->one(), f->one(), f->one()), NotAPermutation);
}

TEST(CBCT, SystemMatchesNaiveLoop) {
  for (auto [p, n] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 2u}, {3u, 3u}, {5u, 1u}}) {
    auto f = n == 1 ? make_field("p=5,n=1") : make_field(p, n);
    for (const auto& fn : catalog(f)) {
      for (std::uint32_t c = 1; c < f->order(); ++c) {
        ASSERT_EQ(c_bct_system(fn, Element{c}), c_bct_naive(fn, Element{c})) << fn.label() << " c=" << c;
      }
    }
  }
}

TEST(CBCT, DefinitionMatchesSystemSmall) {
  for (auto [p, n] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 2u}, {3u, 3u}, {5u, 2u}}) {
    auto f = make_field(p, n);
    for (const auto& fn : catalog_permutations(f)) {
      for (std::uint32_t c = 1; c < f->order(); ++c) {
        ASSERT_EQ(c_bct_def_table(fn, Element{c}), c_bct_system(fn, Element{c})) << fn.label() << " c=" << c;
      }
    }
  }
}

TEST(CBCT, SpotCheckF243) {
  auto f = make_field(3, 5);
  const auto fn = family::inverse(f);
  const auto inv = comp_inverse(fn);
  const Element c = parse_element(*f, "a^2 + 1");
  const auto t = c_bct_system(fn, c);
  for (std::uint32_t a : {1u, 7u, 100u, 242u})
    for (std::uint32_t b : {0u, 1u, 55u, 200u}) EXPECT_EQ(t.at(a, b), c_bct_def(fn, inv, c, Element{a}, Element{b}));
}

// Zero row equals the c-DDT zero row for c != 0, +-1. At c = -1 (odd p) the
// system counts q pairs (x, g) per b while the c-DDT counts one x.
TEST(CBCT, EntriesBoundedAndZeroRowMatchesDDT) {
  for (auto [p, n] : {std::pair{2u, 3u}, {3u, 2u}, {3u, 3u}, {5u, 2u}}) {
    auto f = make_field(p, n);
    const Element minus_one = f->neg(f->one());
    for (const auto& fn : catalog_permutations(f)) {
      for (std::uint32_t c = 2; c < f->order(); ++c) {
        const auto v = zero_row_check(fn, Element{c});
        const auto t = c_bct_system(fn, Element{c});
        if (Element{c} == minus_one) {
          EXPECT_FALSE(v.pass);
          for (std::uint32_t b = 0; b < f->order(); ++b) EXPECT_EQ(t.at(0u, b), f->order());
        } else {
          EXPECT_TRUE(v.pass) << to_json(v).dump();
        }
        for (auto e : t.entries()) ASSERT_LE(e, f->order() * f->order());
      }
    }
  }
}

TEST(CBCT, WorkerPartitionDoesNotChangeTable) {
  auto f = make_field(3, 3);
  const auto fn = family::dob(f, f->one());
  for (std::uint32_t c : {2u, 5u, 26u}) {
    const auto one = c_bct_system(fn, Element{c}, 1);
    EXPECT_EQ(one, c_bct_system(fn, Element{c}, 3));
    EXPECT_EQ(one, c_bct_system(fn, Element{c}, 8));
  }
}

TEST(CBCT, UniformitySummary) {
  auto f = make_field(2, 4);
  const auto u = boomerang_uniformity(c_bct_system(family::inverse(f), f->one()));
  EXPECT_EQ(u.beta, 6u);
  EXPECT_GE(u.beta_a_nonzero, u.beta);
  EXPECT_EQ(u.beta_all, 16u);  // a = 0 row at c = 1
  ASSERT_FALSE(u.argmax.empty());
  const auto j = to_json(u, *f);
  EXPECT_EQ(j["beta"], 6);
  EXPECT_EQ(j["argmax"].size(), u.argmax.size());
}

TEST(MonomialShift, Examples) {
  auto f9 = make_field(3, 2);
  for (std::uint32_t c = 1; c < 9; ++c) EXPECT_TRUE(monomial_shift_check(f9, 2, Element{c}).pass);
  auto f8 = make_field(2, 3);
  for (std::uint32_t c = 1; c < 8; ++c) EXPECT_TRUE(monomial_shift_check(f8, 6, Element{c}).pass);
  EXPECT_THROW(monomial_shift_check(f9, 2, f9->zero()), std::invalid_argument);
}

TEST(MonomialShift, AllMonomialsSmallFields) {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}}) {
    auto f = make_field(p, n);
    for (std::uint64_t d = 1; d < f->order() - 1; ++d)
      for (std::uint32_t c : {1u, 2u, f->order() - 1}) EXPECT_TRUE(monomial_shift_check(f, d, Element{c}).pass);
  }
}

TEST(BetaVsDelta, Examples) {
  auto f27 = make_field(3, 3);
  EXPECT_TRUE(beta_minus1_vs_delta(family::inverse(f27)).pass);
  auto f16 = make_field(2, 4);
  const auto v = beta_minus1_vs_delta(family::inverse(f16));
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.witnesses[0]["beta"], 6);
  EXPECT_EQ(v.witnesses[0]["delta"], 4);
  auto f9 = make_field(3, 2);
  EXPECT_THROW(beta_minus1_vs_delta(family::square(f9)), NotAPermutation);
}

// For odd p the inequality fails on some permutations: F_p-linear maps have
// no solutions with a != 0 at c = -1 (beta = 0) but delta = 1, and the
// inverse over F_9 has beta = 2 < delta = 3.
TEST(BetaVsDelta, OddCharacteristicCounterexamples) {
  auto f9 = make_field(3, 2);
  const auto v = beta_minus1_vs_delta(monomial(f9, 3));
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.witnesses[0]["beta"], 0);
  EXPECT_EQ(v.witnesses[0]["delta"], 1);

  auto f81 = make_field(3, 4);
  const auto w = beta_minus1_vs_delta(monomial(f81, 41));
  EXPECT_FALSE(w.pass);
  EXPECT_EQ(w.witnesses[0]["beta"], 14);
  EXPECT_EQ(w.witnesses[0]["delta"], 21);

  const auto i9 = beta_minus1_vs_delta(family::inverse(f9));
  EXPECT_FALSE(i9.pass);
  EXPECT_EQ(i9.witnesses[0]["beta"], 2);
  EXPECT_EQ(i9.witnesses[0]["delta"], 3);
}

TEST(BetaVsDelta, AllPermutationMonomials) {
  struct Case {
    std::uint32_t p, n, failures;
  };
  // Failure counts over all permutation exponents 1 <= d < p^n - 1.
  for (auto [p, n, failures] : {Case{3, 2, 4}, Case{3, 3, 9}, Case{3, 4, 8}, Case{5, 2, 4}, Case{2, 3, 0}, Case{2, 4, 0}}) {
    auto f = make_field(p, n);
    const std::uint64_t m = f->order() - 1;
    std::uint32_t failed = 0;
    for (std::uint64_t d = 1; d < m; ++d) {
      if (std::gcd(d, m) != 1) continue;
      const auto v = beta_minus1_vs_delta(monomial(f, d));
      if (!v.pass) {
        ++failed;
      }
    }
    EXPECT_EQ(failed, failures) << p << "," << n;
  }
}

// delta <= beta <= delta (delta - 1) for quadratic permutations, c = 1, p = 2.
TEST(ClassicalSandwich, QuadraticPermutations) {
  int tested = 0;
  for (std::uint32_t n = 2; n <= 4; ++n) {
    auto f = make_field(2, n);
    for (auto d : quadratic_perm_exponents(n)) {
      const auto fn = monomial(f, d);
      const std::uint32_t delta = classical_differential_uniformity(fn);
      const std::uint32_t beta = c_boomerang_uniformity(fn, f->one());
      EXPECT_LE(delta, beta) << n << "," << d;
      EXPECT_LE(beta, delta * (delta - 1)) << n << "," << d;
      ++tested;
    }
  }
  EXPECT_GT(tested, 0);
}
