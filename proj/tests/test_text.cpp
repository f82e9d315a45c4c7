#include <gtest/gtest.h>

#include "cboom/field_spec.hpp"
#include "cboom/function.hpp"
#include "cboom/text.hpp"

using namespace cboom;

TEST(Format, DescendingPowers) {
  auto f = make_field(3, 4);
  EXPECT_EQ(format_element(*f, f->zero()), "0");
  EXPECT_EQ(format_element(*f, f->one()), "1");
  EXPECT_EQ(format_element(*f, f->from_coefficients(std::vector<std::uint32_t>{0, 0, 2, 2})), "2*a^3 + 2*a^2");
  EXPECT_EQ(format_element(*f, f->from_coefficients(std::vector<std::uint32_t>{2, 1, 0, 1})), "a^3 + a + 2");
}

TEST(Format, RoundTripEveryElement) {
  for (auto [p, n] : {std::pair{2u, 4u}, {3u, 3u}, {5u, 2u}, {3u, 5u}}) {
    auto f = make_field(p, n);
    for (std::uint32_t i = 0; i < f->order(); ++i) {
      ASSERT_EQ(parse_element(*f, format_element(*f, Element{i})), Element{i});
    }
  }
}

TEST(Parse, FixtureStyleLiterals) {
  auto f = make_field(3, 5);
  // ascending and descending orders, implicit products, unicode alpha
  EXPECT_EQ(parse_element(*f, "2 + 2*a^2 + a^3"), parse_element(*f, "a^3 + 2*a^2 + 2"));
  EXPECT_EQ(parse_element(*f, "2 a^3"), parse_element(*f, "2*a^3"));
  EXPECT_EQ(parse_element(*f, "2α^3"), parse_element(*f, "2*a^3"));
  EXPECT_EQ(parse_element(*f, "alpha^2"), f->pow(f->alpha(), 2));
  EXPECT_EQ(parse_element(*f, "(a+1)^2"), parse_element(*f, "a^2 + 2*a + 1"));
  EXPECT_EQ(parse_element(*f, "-1"), f->from_int(2));
  EXPECT_EQ(parse_element(*f, "a^-1"), f->inv(f->alpha()));
}

TEST(Parse, Errors) {
  auto f = make_field(3, 2);
  EXPECT_THROW(parse_element(*f, ""), ParseError);
  EXPECT_THROW(parse_element(*f, "a +"), ParseError);
  EXPECT_THROW(parse_element(*f, "b"), ParseError);
  EXPECT_THROW(parse_element(*f, "(a"), ParseError);
  EXPECT_THROW(parse_element(*f, "x"), ParseError);
  try {
    parse_element(*f, "a + ?");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 4u);
  }
}

TEST(ParseFunction, SignsReduceModP) {
  auto f = make_field(3, 3);
  const auto e = parse_function("x^10 - x^6 - x^2", f);
  ASSERT_EQ(e.terms().size(), 3u);
  EXPECT_EQ(e.terms()[0], (Term{f->one(), 10}));
  EXPECT_EQ(e.terms()[1], (Term{f->from_int(2), 6}));
  EXPECT_EQ(e.terms()[2], (Term{f->from_int(2), 2}));
}

TEST(ParseFunction, ExponentRangeIsStrict) {
  auto f81 = make_field(3, 4);
  EXPECT_THROW(parse_function("x^81", f81), ParseError);
  auto f9 = make_field(3, 2);
  EXPECT_THROW(parse_function("x^10 - x^6 - x^2", f9), ParseError);
  EXPECT_NO_THROW(parse_function("x^8", f9));
}

TEST(ParseFunction, InvKeyword) {
  auto f = make_field(2, 4);
  const auto e = parse_function("inv", f);
  ASSERT_EQ(e.terms().size(), 1u);
  EXPECT_EQ(e.terms()[0].exponent, 14u);
}

TEST(ParseFunction, CoefficientsAndMerging) {
  auto f = make_field(3, 2);
  const auto e = parse_function("(a^2+2*a)*x^3 + x^3 + 2*x + x", f);
  ASSERT_EQ(e.terms().size(), 1u);
  EXPECT_EQ(e.terms()[0].exponent, 3u);
  EXPECT_EQ(e.terms()[0].coefficient, f->add(parse_element(*f, "a^2+2*a"), f->one()));
}

TEST(ParseFunction, PrintRoundTrip) {
  auto f = make_field(3, 3);
  for (const char* s : {"x^10 - x^6 - x^2", "(a^2+2*a)*x^5 + a*x + 1", "inv", "2", "x"}) {
    const auto e = parse_function(s, f);
    const auto again = parse_function(e.to_string(), f);
    EXPECT_EQ(tabulate(e), tabulate(again)) << s << " -> " << e.to_string();
  }
}
