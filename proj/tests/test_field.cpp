#include <gtest/gtest.h>

#include <set>

#include "cboom/field.hpp"
#include "cboom/field_spec.hpp"
#include "cboom/text.hpp"

using namespace cboom;

namespace {

Element el(const Field& f, const char* s) { return parse_element(f, s); }

// Plain polynomial product mod (p, modulus), independent of the field tables.
std::vector<std::uint32_t> slow_mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                    const std::vector<std::uint32_t>& mod, std::uint32_t p) {
  std::vector<std::uint32_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const std::size_t n = mod.size() - 1;
  for (std::size_t d = prod.size(); d-- > n;) {
    const std::uint32_t lead = prod[d];
    if (lead == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) prod[d - n + i] = (prod[d - n + i] + (p - lead) * mod[i]) % p;
  }
  prod.resize(n);
  return prod;
}

}  // namespace

TEST(FieldSpec, DefaultModuliList) {
  EXPECT_EQ(parse_field_spec("p=3,n=2").modulus, (std::vector<std::uint32_t>{2, 2, 1}));
  EXPECT_EQ(parse_field_spec("p=2,n=4").modulus, (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
  EXPECT_EQ(parse_field_spec("p=2, n=3").modulus, (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_EQ(parse_field_spec("p=3,n=5").modulus.size(), 6u);
  EXPECT_EQ(parse_field_spec("p=5,n=4").modulus.size(), 5u);
}

TEST(FieldSpec, Errors) {
  EXPECT_THROW(parse_field_spec("p=4,n=2"), FieldError);
  EXPECT_THROW(parse_field_spec("p=7,n=3"), FieldError);                 // no default
  EXPECT_THROW(make_field("p=2,n=2,modulus=[1,0,1]"), FieldError);        // (x+1)^2
  EXPECT_THROW(make_field("p=3,n=2,modulus=[2,2,2]"), FieldError);        // not monic
  EXPECT_THROW(parse_field_spec("p=3"), FieldError);
  EXPECT_THROW(parse_field_spec("p=3,n=2,q=5"), FieldError);
}

TEST(FieldSpec, ExplicitModulusAndJson) {
  auto f = make_field("p=7,n=2,modulus=[3,1,1]");
  EXPECT_EQ(f->order(), 49u);
  auto g = make_field(R"({"p": 2, "n": 5, "modulus": [1, 0, 1, 0, 0, 1]})");
  EXPECT_EQ(g->order(), 32u);
  EXPECT_EQ(multiplicative_order(*g, g->generator()), 31u);
  EXPECT_EQ(parse_field_spec(to_json(g->spec()).dump()).modulus, g->spec().modulus);
}

TEST(FieldSpec, BadGeneratorRejected) {
  // 1 has order 1, never primitive.
  EXPECT_THROW(make_field("p=3,n=2,generator=1"), FieldError);
  auto f = make_field("p=3,n=2,generator=3");
  EXPECT_EQ(f->generator().index, 3u);
}

TEST(Field, AdditionExamples) {
  auto f9 = make_field(3, 2);
  EXPECT_EQ(f9->add(el(*f9, "a"), el(*f9, "2*a")), f9->zero());
  auto f16 = make_field(2, 4);
  EXPECT_EQ(f16->add(el(*f16, "a+1"), el(*f16, "a+1")), f16->zero());
  for (std::uint32_t i = 0; i < f16->order(); ++i) EXPECT_EQ(f16->add(Element{i}, f16->zero()), Element{i});
}

TEST(Field, MultiplicationExamples) {
  auto f16 = make_field(2, 4);
  EXPECT_EQ(f16->pow(f16->alpha(), 4), el(*f16, "a+1"));
  auto f9 = make_field(3, 2);
  EXPECT_EQ(f9->mul(f9->alpha(), f9->inv(f9->alpha())), f9->one());
  // brute-force inverse search
  for (std::uint32_t x = 1; x < 9; ++x) {
    int found = 0;
    for (std::uint32_t y = 1; y < 9; ++y)
      if (f9->mul(Element{x}, Element{y}) == f9->one()) {
        ++found;
        EXPECT_EQ(f9->inv(Element{x}), Element{y});
      }
    EXPECT_EQ(found, 1);
  }
  EXPECT_THROW(f9->inv(f9->zero()), std::domain_error);
  EXPECT_THROW(f9->pow(f9->zero(), -1), std::domain_error);
  EXPECT_EQ(f9->pow(f9->zero(), 0), f9->one());
}

TEST(Field, TableMultiplicationMatchesPolynomialProduct) {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {2u, 3u}, {3u, 4u}}) {
    auto f = make_field(p, n);
    for (std::uint32_t x = 0; x < f->order(); ++x) {
      for (std::uint32_t y = 0; y < f->order(); ++y) {
        const auto expect = slow_mul(f->coefficients(Element{x}), f->coefficients(Element{y}), f->spec().modulus, p);
        ASSERT_EQ(f->coefficients(f->mul(Element{x}, Element{y})), expect);
        ASSERT_EQ(f->mul_schoolbook(Element{x}, Element{y}), f->mul(Element{x}, Element{y}));
      }
    }
  }
}

TEST(Field, NegativePowers) {
  auto f = make_field(5, 2);
  for (std::uint32_t x = 1; x < f->order(); ++x) {
    EXPECT_EQ(f->pow(Element{x}, -1), f->inv(Element{x}));
    EXPECT_EQ(f->mul(f->pow(Element{x}, -7), f->pow(Element{x}, 7)), f->one());
  }
}

TEST(Field, PrimeFieldN1) {
  auto f = make_field(7, 1);
  EXPECT_EQ(f->order(), 7u);
  EXPECT_EQ(f->mul(Element{3}, Element{5}), Element{1});
  EXPECT_EQ(multiplicative_order(*f, f->generator()), 6u);
}

TEST(Field, TraceExamples) {
  auto f4 = make_field(2, 2);
  EXPECT_EQ(f4->trace(f4->zero()), 0u);
  EXPECT_EQ(f4->trace(f4->alpha()), 1u);
  auto f9 = make_field(3, 2);
  EXPECT_EQ(f9->trace(f9->one()), 2u);
}

TEST(Field, RelativeTrace) {
  auto f81 = make_field(3, 4);
  const Element a = f81->alpha();
  EXPECT_EQ(f81->trace_rel(a, 2), f81->add(a, f81->pow(a, 9)));
  EXPECT_EQ(f81->trace_rel(a, 4), a);
  EXPECT_EQ(f81->trace_rel(f81->zero(), 2), f81->zero());
  EXPECT_THROW(f81->trace_rel(a, 3), FieldError);
  for (std::uint32_t x = 0; x < f81->order(); ++x) {
    const Element t = f81->trace_rel(Element{x}, 2);
    EXPECT_EQ(f81->frobenius(t, 2), t);
  }
}

TEST(Field, SquaresAndFrobenius) {
  auto f9 = make_field(3, 2);
  EXPECT_TRUE(f9->is_square(f9->zero()));
  EXPECT_FALSE(f9->is_square(f9->generator()));
  EXPECT_TRUE(f9->is_square(f9->pow(f9->alpha(), 2)));
  EXPECT_EQ(f9->frobenius(f9->alpha(), 1), f9->pow(f9->alpha(), 3));
  auto f8 = make_field(2, 3);
  for (std::uint32_t x = 0; x < 8; ++x) {
    EXPECT_TRUE(f8->is_square(Element{x}));
    EXPECT_EQ(f8->frobenius(Element{x}, 0), Element{x});
    EXPECT_EQ(f8->frobenius(Element{x}, 3), Element{x});
  }
  std::set<std::uint32_t> squares;
  for (std::uint32_t y = 0; y < 9; ++y) squares.insert(f9->mul(Element{y}, Element{y}).index);
  for (std::uint32_t x = 0; x < 9; ++x) EXPECT_EQ(f9->is_square(Element{x}), squares.count(x) == 1);
}

TEST(Field, ChebyshevExamples) {
  auto f = make_field(3, 3);
  for (std::uint32_t w = 0; w < f->order(); ++w) {
    const Element x{w};
    EXPECT_EQ(chebyshev_t(*f, 0, x), f->from_int(2));
    EXPECT_EQ(chebyshev_t(*f, 1, x), x);
    EXPECT_EQ(chebyshev_t(*f, 2, x), f->sub(f->mul(x, x), f->from_int(2)));
  }
  // T_l(u + 1/u) = u^l + u^-l
  for (std::uint32_t u = 1; u < f->order(); ++u) {
    const Element w = f->add(Element{u}, f->inv(Element{u}));
    for (std::int64_t l = 0; l < 20; ++l) {
      EXPECT_EQ(chebyshev_t(*f, l, w), f->add(f->pow(Element{u}, l), f->pow(Element{u}, -l)));
    }
  }
}

TEST(Field, QuadraticExamples) {
  auto f4 = make_field(2, 2);
  const auto r4 = solve_quadratic(*f4, f4->one(), f4->one());
  ASSERT_EQ(r4.size(), 2u);
  EXPECT_EQ(std::set<Element>(r4.begin(), r4.end()), (std::set<Element>{f4->alpha(), el(*f4, "a+1")}));
  auto f3 = make_field(3, 1);
  EXPECT_EQ(solve_quadratic(*f3, f3->one(), f3->one()), std::vector<Element>{f3->one()});
  auto f8 = make_field(2, 3);
  EXPECT_TRUE(solve_quadratic(*f8, f8->one(), f8->one()).empty());
}

TEST(Field, GcdExamples) {
  EXPECT_EQ(gcd_formula(3, 1, 3).euclid, 2u);
  EXPECT_EQ(gcd_formula(3, 1, 2).euclid, 4u);
  EXPECT_EQ(gcd_formula(2, 2, 4).euclid, 5u);
  EXPECT_TRUE(gcd_formula(2, 2, 4).consistent());
}

TEST(Field, Hilbert90Examples) {
  auto f4 = make_field(2, 2);
  EXPECT_EQ(hilbert90_witness(*f4, f4->zero()), f4->zero());
  const auto y = hilbert90_witness(*f4, f4->one());
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(f4->add(f4->mul(*y, *y), *y), f4->one());
  auto f8 = make_field(2, 3);
  EXPECT_FALSE(hilbert90_witness(*f8, f8->one()).has_value());
}

TEST(Field, SizeCap) {
  EXPECT_THROW(make_field("p=31,n=5,modulus=[3,1,0,0,0,1]"), FieldError);
}
