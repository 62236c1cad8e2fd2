#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "monoideal/errors.hpp"
#include "monoideal/monomial_ideal.hpp"
#include "monoideal/parser.hpp"
#include "monoideal/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace monoideal;
using testing_support::ideal_of;

namespace {

MonomialIdeal mon(const std::string& ring, const std::string& gens) {
  return MonomialIdeal::from_ideal(ideal_of(ring, gens));
}

const std::string kXY = "ring QQ[x,y]";
const std::string kXYZ = "ring QQ[x,y,z]";

ExponentVector ev(std::initializer_list<unsigned> e) { return ExponentVector::from(e); }

std::set<std::vector<std::uint16_t>> as_set(const std::vector<ExponentVector>& v, std::size_t n) {
  std::set<std::vector<std::uint16_t>> out;
  for (const auto& e : v) out.insert(std::vector<std::uint16_t>(e.data(), e.data() + n));
  return out;
}

}  // namespace

TEST(MonomialIdeal, MinimalGeneratorsAndPrinting) {
  const auto m = mon(kXY, "x^2, x^3*y, x*y, y^4");
  EXPECT_EQ(m.to_string(), "(y^4, x^2, x*y)");
  EXPECT_EQ(MonomialIdeal::zero(m.ring_ptr()).to_string(), "(0)");
  EXPECT_TRUE(MonomialIdeal::unit(m.ring_ptr()).is_unit());
  EXPECT_THROW(MonomialIdeal::from_ideal(ideal_of(kXY, "x + y")), PreconditionError);
}

TEST(MonomialIdeal, ColonExamples) {
  const auto m = mon(kXYZ, "x^2, x*y, x*z, y^2, z^2");
  EXPECT_EQ(m_colon(m, ev({1, 0, 0})), MonomialIdeal::maximal_power(m.ring_ptr(), 1));
  EXPECT_EQ(m_colon(m, ev({0, 1, 0})), mon(kXYZ, "x, y, z^2"));
  EXPECT_EQ(m_colon(m, ExponentVector{}), m);
}

TEST(MonomialIdeal, IntersectionRadicalExamples) {
  EXPECT_EQ(m_intersect(mon(kXY, "x^2"), mon(kXY, "y")), mon(kXY, "x^2*y"));
  EXPECT_EQ(m_radical(mon(kXY, "x^2*y")), mon(kXY, "x*y"));
  EXPECT_EQ(m_radical(mon(kXY, "x^2, x*y, y^3")), mon(kXY, "x, y"));
  EXPECT_EQ(m_intersect(mon(kXY, "x^2, y"), mon(kXY, "x, y^2")), mon(kXY, "x^2, x*y, y^2"));
  EXPECT_EQ(m_sum(mon(kXY, "x^2"), mon(kXY, "y")), mon(kXY, "x^2, y"));
  EXPECT_EQ(m_product(mon(kXY, "x, y"), mon(kXY, "x, y")), MonomialIdeal::maximal_power(mon(kXY, "x").ring_ptr(), 2));
}

TEST(MonomialIdeal, ArtinianAndPowerGap) {
  EXPECT_TRUE(is_artinian(mon(kXY, "x^2, y^3")));
  EXPECT_EQ(power_gap(mon(kXY, "x^2, y^3")), 4U);
  EXPECT_FALSE(is_artinian(mon(kXY, "x")));
  EXPECT_THROW(power_gap(mon(kXY, "x")), PreconditionError);
  EXPECT_EQ(power_gap(mon(kXY, "x, y")), 1U);
}

TEST(MonomialIdeal, StandardMonomialsAndHilbertFunction) {
  const auto m2 = mon(kXY, "x^2, x*y, y^2");
  EXPECT_EQ(as_set(standard_monomials(m2, 1), 2), as_set({ev({1, 0}), ev({0, 1})}, 2));
  EXPECT_EQ(hilbert_function(m2, 3), (std::vector<std::size_t>{1, 2, 0, 0}));
  const auto n = mon(kXYZ, "x^3, x^2*y, x^2*z, x*y^2, y^3, y^2*z, z^3");
  EXPECT_EQ(hilbert_function(n, 5), (std::vector<std::size_t>{1, 3, 6, 3, 1, 0}));
  EXPECT_TRUE(standard_monomials(mon(kXYZ, "x, y, z"), 2).empty());
}

TEST(MonomialIdeal, SocleExamples) {
  EXPECT_EQ(as_set(socle_monomials(mon(kXYZ, "x^2, x*y, x*z, y^2, z^2")), 3),
            as_set({ev({1, 0, 0}), ev({0, 1, 1})}, 3));
  const auto mb = mon("ring QQ[x,y,z,w]", "x^2, y^2, z^3, w^3");
  EXPECT_EQ(socle_monomials(mb), std::vector<ExponentVector>{ev({1, 1, 2, 2})});
  EXPECT_EQ(socle_monomials(mon(kXY, "x, y")), std::vector<ExponentVector>{ExponentVector{}});
}

TEST(MonomialIdeal, IrreducibleDecompositionExamples) {
  const auto a = mon(kXY, "x^2, x*y, y^2");
  EXPECT_EQ(as_set(irreducible_decomposition(a), 2), as_set({ev({1, 2}), ev({2, 1})}, 2));
  const auto b = mon(kXYZ, "x^2, x*y, x*z, y^2, z^2");
  // Socle {x, yz} gives (x^2, y, z) and (x, y^2, z^2).
  EXPECT_EQ(as_set(irreducible_decomposition(b), 3), as_set({ev({2, 1, 1}), ev({1, 2, 2})}, 3));
  EXPECT_EQ(m_intersect(irreducible_component(b.ring_ptr(), ev({2, 1, 1})), irreducible_component(b.ring_ptr(), ev({1, 2, 2}))), b);
  const auto c = mon(kXY, "x^2, y^3");
  EXPECT_EQ(irreducible_decomposition(c), std::vector<ExponentVector>{ev({2, 3})});
}

TEST(MonomialIdeal, IrreducibleComponentsIntersectBack) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 40; ++k) {
    RingPtr ring = random_ring(rng, FieldSpec::rationals());
    const auto m = random_artinian_monomial(rng, ring);
    const auto parts = irreducible_decomposition(m);
    ASSERT_EQ(parts.size(), socle_monomials(m).size());
    MonomialIdeal cap = MonomialIdeal::unit(ring);
    for (const auto& b : parts) cap = m_intersect(cap, irreducible_component(ring, b));
    EXPECT_EQ(cap, m);
  }
}

TEST(MonomialIdeal, GorensteinPrimaryPrime) {
  EXPECT_TRUE(is_gorenstein(mon(kXY, "x^2, y^3")));
  EXPECT_FALSE(is_gorenstein(mon(kXY, "x^2, x*y, y^2")));
  EXPECT_FALSE(is_primary_monomial(mon(kXY, "x^2, x*y")));
  EXPECT_TRUE(is_primary_monomial(mon(kXY, "x^2, y^5")));
  EXPECT_TRUE(is_prime_monomial(mon(kXYZ, "x, z")));
  EXPECT_FALSE(is_prime_monomial(mon(kXYZ, "x^2, z")));
  EXPECT_TRUE(is_pure_power_form(mon(kXY, "x^2, y^3")));
  EXPECT_FALSE(is_pure_power_form(mon(kXY, "x^2")));
}

TEST(MonomialIdeal, EqualColonWitnessExamples) {
  EXPECT_TRUE(equal_colon_witnesses(mon(kXY, "x^2, y^3")).empty());
  EXPECT_TRUE(equal_colon_witnesses(mon("ring QQ[x,y,z,w]", "x^2, y^2, z^3, w^3")).empty());
  EXPECT_TRUE(equal_colon_witnesses(mon(kXYZ, "x^2, x*y, x*z, y^2, z^2")).empty());
  const auto w = equal_colon_witnesses(mon(kXY, "x^2, x*y, y^2"));
  ASSERT_EQ(w.size(), 1U);
  EXPECT_EQ(as_set({w[0].first, w[0].second}, 2), as_set({ev({1, 0}), ev({0, 1})}, 2));
  const auto classes = equal_colon_classes(mon(kXY, "x^2, x*y, y^2"));
  ASSERT_EQ(classes.size(), 1U);
  EXPECT_EQ(classes[0].degree, 1U);
  EXPECT_EQ(classes[0].colon, mon(kXY, "x, y"));
}

TEST(MonomialIdeal, SocleMatrixExamples) {
  const FieldSpec q = FieldSpec::rationals();
  Matrix id(2, 2);
  id.at(0, 0) = q.one();
  id.at(1, 1) = q.one();
  EXPECT_FALSE(socle_matrix_test(SocleMatrix{{ev({1, 0}), ev({0, 1})}, id, q}));
  Matrix ones(2, 1);
  ones.at(0, 0) = q.one();
  ones.at(1, 0) = q.one();
  EXPECT_TRUE(socle_matrix_test(SocleMatrix{{ev({1, 0}), ev({0, 1})}, ones, q}));

  const Ideal i = ideal_of(kXYZ, "x^2, x*y, x*z, y^2, z^2, x + y*z");
  const auto m = mon(kXYZ, "x^2, x*y, x*z, y^2, z^2");
  const std::vector<Polynomial> combos{i.generators().back()};
  const auto s = socle_matrix(m, combos);
  EXPECT_EQ(s.coeffs.rows(), 2U);
  EXPECT_EQ(s.coeffs.cols(), 1U);
  EXPECT_TRUE(socle_matrix_test(s));
  const std::vector<Polynomial> bad{parse_polynomial("y + x", i.ring())};
  EXPECT_THROW(socle_matrix(m, bad), PreconditionError);
}

TEST(MonomialIdeal, SubidealCriterionExamples) {
  const auto m = mon(kXYZ, "x^2, x*y, x*z, y^2, z^2");
  EXPECT_TRUE(mono_subideal_criterion(ideal_of(kXYZ, "x^2, x*y, x*z, y^2, z^2, x + y*z"), m));
  EXPECT_FALSE(mono_subideal_criterion(ideal_of(kXY, "x^2, x*y, y^2, x"), mon(kXY, "x^2, x*y, y^2")));
  const auto f = testing_support::fixture("ex48");
  EXPECT_TRUE(mono_subideal_criterion(f.ideal("I"), MonomialIdeal::from_ideal(f.ideal("M"))));
  EXPECT_THROW(mono_subideal_criterion(ideal_of(kXY, "x^2, y^2"), mon(kXY, "x, y")), PreconditionError);
}

TEST(MonomialIdeal, OperationsMatchMembershipOracle) {
  // Compare colon, intersection, sum and product with direct membership up to a degree bound.
  std::mt19937_64 rng(47);
  for (int k = 0; k < 40; ++k) {
    RingPtr ring = random_ring(rng, FieldSpec::rationals());
    const std::size_t n = ring->arity();
    const auto a = random_artinian_monomial(rng, ring);
    const auto b = random_artinian_monomial(rng, ring);
    const auto u = random_monomial(rng, n, 2);
    const unsigned d = 9;
    const auto in_a = as_set(oracle::members_up_to(a, d + 2), n);
    const auto in_b = as_set(oracle::members_up_to(b, d + 2), n);
    std::vector<ExponentVector> colon_ref, cap_ref, sum_ref;
    for (unsigned deg = 0; deg <= d; ++deg) {
      for (const auto& v : monomials_of_degree(n, deg)) {
        const auto key = as_set({v}, n);
        const auto key_uv = as_set({v * u}, n);
        const bool ia = in_a.count(*key.begin()) > 0;
        const bool ib = in_b.count(*key.begin()) > 0;
        if (in_a.count(*key_uv.begin())) colon_ref.push_back(v);
        if (ia && ib) cap_ref.push_back(v);
        if (ia || ib) sum_ref.push_back(v);
      }
    }
    EXPECT_EQ(as_set(oracle::members_up_to(m_colon(a, u), d), n), as_set(colon_ref, n));
    EXPECT_EQ(as_set(oracle::members_up_to(m_intersect(a, b), d), n), as_set(cap_ref, n));
    EXPECT_EQ(as_set(oracle::members_up_to(m_sum(a, b), d), n), as_set(sum_ref, n));
    const auto ab = m_product(a, b);
    for (const auto& g : ab.generators()) {
      bool split = false;
      for (const auto& ga : a.generators()) {
        for (const auto& gb : b.generators()) split = split || ga * gb == g;
      }
      EXPECT_TRUE(split);
    }
  }
}

TEST(MonomialIdeal, SocleMatchesDefinition) {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 40; ++k) {
    RingPtr ring = random_ring(rng, FieldSpec::rationals());
    const auto m = random_artinian_monomial(rng, ring);
    std::vector<ExponentVector> ref;
    for (unsigned d = 0; d < power_gap(m); ++d) {
      for (const auto& v : monomials_of_degree(ring->arity(), d)) {
        if (m.contains(v)) continue;
        bool all = true;
        for (std::size_t i = 0; i < ring->arity(); ++i) all = all && m.contains(v * ExponentVector::variable(i));
        if (all) ref.push_back(v);
      }
    }
    EXPECT_EQ(as_set(socle_monomials(m), ring->arity()), as_set(ref, ring->arity()));
  }
}
