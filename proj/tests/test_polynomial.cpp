#include <gtest/gtest.h>

#include <random>

#include "monoideal/parser.hpp"
#include "monoideal/polynomial.hpp"
#include "monoideal/ring.hpp"

using namespace monoideal;

namespace {

Polynomial random_poly(std::mt19937_64& rng, const Arith& arith, std::size_t n) {
  std::vector<Term> terms;
  const int count = static_cast<int>(rng() % 5);
  for (int k = 0; k < count; ++k) {
    ExponentVector e;
    for (std::size_t i = 0; i < n; ++i) e.set(i, static_cast<unsigned>(rng() % 3));
    terms.push_back({arith.field().from_int(static_cast<std::int64_t>(rng() % 11) - 5), e});
  }
  return arith.canonical(std::move(terms));
}

}  // namespace

TEST(Polynomial, CanonicalFormCombinesAndSorts) {
  RingPtr ring = make_ring(FieldSpec::rationals(), {"x", "y"});
  const Arith a = ring->arith();
  const auto f = a.canonical({{Scalar{1}, ExponentVector::from({0, 1})},
                              {Scalar{2}, ExponentVector::from({2, 0})},
                              {Scalar{-1}, ExponentVector::from({0, 1})}});
  EXPECT_EQ(f.size(), 1U);
  EXPECT_EQ(ring->format(f), "2*x^2");
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  for (const FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(32003)}) {
    RingPtr ring = make_ring(field, {"x", "y", "z"});
    std::mt19937_64 rng(3);
    for (const TermOrder& order : {TermOrder::grevlex(3), TermOrder::lex(3)}) {
      const Arith a = ring->arith(order);
      for (int k = 0; k < 100; ++k) {
        const auto f = random_poly(rng, a, 3);
        const auto g = random_poly(rng, a, 3);
        const auto h = random_poly(rng, a, 3);
        EXPECT_EQ(a.add(f, g), a.add(g, f));
        EXPECT_EQ(a.mul(f, g), a.mul(g, f));
        EXPECT_EQ(a.mul(f, a.add(g, h)), a.add(a.mul(f, g), a.mul(f, h)));
        EXPECT_EQ(a.mul(a.mul(f, g), h), a.mul(f, a.mul(g, h)));
        EXPECT_TRUE(a.sub(f, f).is_zero());
        EXPECT_EQ(a.add(f, a.neg(g)), a.sub(f, g));
        if (!g.is_zero()) {
          const auto q = a.divide_exact(a.mul(f, g), g);
          ASSERT_TRUE(q.has_value());
          EXPECT_EQ(*q, f);
        }
      }
    }
  }
}

TEST(Polynomial, FormatParseRoundTrip) {
  for (const FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(5)}) {
    RingPtr ring = make_ring(field, {"x", "y", "z"});
    std::mt19937_64 rng(8);
    for (int k = 0; k < 100; ++k) {
      const auto f = random_poly(rng, ring->arith(), 3);
      EXPECT_EQ(parse_polynomial(ring->format(f), *ring), f) << ring->format(f);
    }
  }
}

TEST(Polynomial, MultiHomogenizeOnExample) {
  // x^2 + y + 1 in k[x, y] -> x^2*y_2 + y*y_1^2 + y_1^2*y_2 in lanes (x, y, y_1, y_2).
  RingPtr big = make_ring(FieldSpec::rationals(), {"x", "y", "a", "b"});
  const Arith a = big->arith();
  const auto f = parse_polynomial("x^2 + y + 1", *big);
  const auto h = multi_homogenize(f, 2, a);
  EXPECT_EQ(h, parse_polynomial("x^2*b + y*a^2 + a^2*b", *big));
}

TEST(Polynomial, MultiHomogenizeMatchesDirectFormula) {
  RingPtr big = make_ring(FieldSpec::prime(7), {"x", "y", "z", "a", "b", "c"});
  const Arith a = big->arith();
  std::mt19937_64 rng(2);
  for (int k = 0; k < 100; ++k) {
    const auto f = random_poly(rng, a, 3);
    const auto h = multi_homogenize(f, 3, a);
    ASSERT_EQ(h.size(), f.size());
    // Every term has x_i-degree plus y_i-degree equal to deg_{x_i} f.
    for (const auto& t : h.terms()) {
      for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(t.mono[i] + t.mono[3 + i], f.degree_in(i));
    }
    EXPECT_EQ(a.specialize_to_one(h, 0b111000U), f);
  }
}

TEST(Polynomial, Properties) {
  RingPtr ring = make_ring(FieldSpec::rationals(), {"x", "y"});
  const auto f = parse_polynomial("x^3 - 2*x*y + y^2", *ring);
  EXPECT_EQ(f.total_degree(), 3U);
  EXPECT_EQ(f.degree_in(1), 2U);
  EXPECT_FALSE(f.is_homogeneous());
  EXPECT_TRUE(parse_polynomial("x^2 - 3*x*y", *ring).is_homogeneous());
  EXPECT_EQ(ring->format(ring->arith().monic(parse_polynomial("2*x - 4*y", *ring))), "x - 2*y");
  EXPECT_EQ(ring->format(ring->arith().pow(parse_polynomial("x + y", *ring), 2)), "x^2 + 2*x*y + y^2");
}
