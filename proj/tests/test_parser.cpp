#include <gtest/gtest.h>

#include "monoideal/errors.hpp"
#include "monoideal/parser.hpp"

using namespace monoideal;

namespace {

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_source(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return {0, 0};
}

}  // namespace

TEST(Parser, ReadsRingAndIdeals) {
  const auto f = parse_source(
      "# comment\n"
      "ring QQ[x,y];\n"
      "A = ideal(x^2, 3/2*x*y - y^2);\n"
      "B = ideal((x+y)^2, x/2);\n");
  EXPECT_EQ(f.ring->names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(f.names, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(f.ideal("A").generators().size(), 2U);
  EXPECT_EQ(f.ring->format(f.ideal("B").generators()[0]), "x^2 + 2*x*y + y^2");
  EXPECT_THROW(f.ideal("C"), PreconditionError);
}

TEST(Parser, FieldOverrideReducesCoefficients) {
  const auto f = parse_source("ring QQ[x,y];\nI = ideal(3*x + y, x^2);", FieldSpec::prime(3));
  EXPECT_EQ(f.ring->field(), FieldSpec::prime(3));
  EXPECT_EQ(f.ring->format(f.ideal("I").generators()[0]), "y");
}

TEST(Parser, PrimeFieldDeclaration) {
  const auto f = parse_source("ring ZZ/5[a,b];\nI = ideal(6*a - b);");
  EXPECT_EQ(f.ring->field(), FieldSpec::prime(5));
  EXPECT_EQ(f.ring->format(f.ideal("I").generators()[0]), "a - b");
}

TEST(Parser, ErrorsCarryLineAndColumn) {
  EXPECT_EQ(error_position("ring QQ[x,y];\nI = ideal(x + q);"), std::make_pair(std::size_t{2}, std::size_t{15}));
  EXPECT_EQ(error_position("ring QQ[x,y];\nI = ideal(x +);"), std::make_pair(std::size_t{2}, std::size_t{14}));
  EXPECT_EQ(error_position("ring ZZ/4[x];"), std::make_pair(std::size_t{1}, std::size_t{9}));
  EXPECT_EQ(error_position("ring QQ[x];\nI = ideal(x$);").first, 2U);
  EXPECT_EQ(error_position("ring QQ[x];\nI = ideal(x);\nI = ideal(x^2);").first, 3U);
  EXPECT_EQ(error_position("ring ZZ/3[x];\nI = ideal(x/3);").first, 2U);
  EXPECT_EQ(error_position("I = ideal(x);").first, 1U);
}

TEST(Parser, PolynomialList) {
  RingPtr ring = make_ring(FieldSpec::rationals(), {"x", "y"});
  const auto list = parse_polynomial_list("x^2, y^3 - x", *ring);
  ASSERT_EQ(list.size(), 2U);
  EXPECT_EQ(ring->format(list[1]), "y^3 - x");
  EXPECT_THROW(parse_polynomial("x^", *ring), ParseError);
}
