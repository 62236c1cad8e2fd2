#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "monoideal/errors.hpp"
#include "monoideal/mono.hpp"
#include "monoideal/random.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace monoideal;
using testing_support::fixture;
using testing_support::fixture_text;
using testing_support::ideal_of;

namespace {

MonomialIdeal mon(const std::string& ring, const std::string& gens) {
  return MonomialIdeal::from_ideal(ideal_of(ring, gens));
}

ExponentVector ev(std::initializer_list<unsigned> e) { return ExponentVector::from(e); }

}  // namespace

TEST(Mono, MethodNames) {
  EXPECT_EQ(parse_method("gb"), MonoMethod::gb);
  EXPECT_EQ(parse_method("puv"), MonoMethod::puv);
  EXPECT_EQ(parse_method("oracle"), MonoMethod::oracle);
  EXPECT_FALSE(parse_method("magic").has_value());
  EXPECT_EQ(to_string(MonoMethod::puv), "puv");
}

TEST(Mono, GbSmallExamples) {
  const auto r = mono_via_gb(ideal_of("ring QQ[x,y]", "x + y"));
  EXPECT_TRUE(r.mono.is_zero());
  const auto m = ideal_of("ring QQ[x,y]", "x^2*y, y^3");
  EXPECT_EQ(mono_via_gb(m).mono, MonomialIdeal::from_ideal(m));
  EXPECT_TRUE(mono_via_gb(ideal_of("ring QQ[x,y]", "x^2 - y")).mono.is_zero());
  EXPECT_EQ(mono_via_gb(ideal_of("ring QQ[x,y]", "x - 1, y")).mono, mon("ring QQ[x,y]", "y"));
  EXPECT_TRUE(mono_via_gb(ideal_of("ring QQ[x,y]", "x*y - 1")).mono.is_zero());
  EXPECT_TRUE(mono_via_gb(ideal_of("ring QQ[x,y]", "x*y - 1, x")).mono.is_unit());
}

TEST(Mono, CharacteristicTwoExample) {
  for (const FieldSpec field : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)}) {
    const auto f = fixture("ex22", field);
    const auto r = mono_via_gb(f.ideal("I"));
    EXPECT_EQ(r.mono.contains(ev({1, 1, 2})), field == FieldSpec::prime(2)) << field.name();
    EXPECT_EQ(contains(f.ideal("I"), f.ring->arith().monomial(Scalar{1}, ev({1, 1, 2}))),
              field == FieldSpec::prime(2));
  }
}

TEST(Mono, UpperExamples) {
  EXPECT_EQ(mono_upper(ideal_of("ring QQ[x,y]", "x + y")), mon("ring QQ[x,y]", "x, y"));
  EXPECT_EQ(mono_upper(ideal_of("ring QQ[x,y]", "x^2 + x*y, y^3")), mon("ring QQ[x,y]", "x^2, x*y, y^3"));
  EXPECT_EQ(mono_upper(ideal_of("ring QQ[x,y]", "x^2, y")), mon("ring QQ[x,y]", "x^2, y"));
}

TEST(Mono, PuvExamples) {
  const auto f = fixture("ex47");
  const std::vector<ExponentVector> beta{ev({2, 0, 0}), ev({0, 2, 0}), ev({0, 0, 2})};
  EXPECT_EQ(mono_via_puv(f.ideal("I"), beta).mono, MonomialIdeal::from_ideal(f.ideal("M")));
  const auto ci = ideal_of("ring QQ[x,y]", "x^2, y^2");
  const std::vector<ExponentVector> beta2{ev({2, 0}), ev({0, 2})};
  EXPECT_EQ(mono_via_puv(ci, beta2).mono, MonomialIdeal::from_ideal(ci));
  // Supplied beta must be in I with disjoint supports.
  const std::vector<ExponentVector> outside{ev({1, 0}), ev({0, 2})};
  EXPECT_THROW(mono_via_puv(ci, outside), PreconditionError);
  const std::vector<ExponentVector> overlapping{ev({2, 0}), ev({2, 2})};
  EXPECT_THROW(mono_via_puv(ci, overlapping), PreconditionError);
}

TEST(Mono, SelectBetaFindsLeastPurePowers) {
  const auto f = fixture("ex22p");
  const auto beta = select_pure_power_beta(f.ideal("I3"));
  // The z power has no closed form here, so it is checked by membership.
  ASSERT_EQ(beta.size(), 3U);
  EXPECT_EQ(beta[0], ev({3, 0, 0}));
  EXPECT_EQ(beta[1], ev({0, 3, 0}));
  const Ideal& i = f.ideal("I3");
  const Arith a = i.ring().arith();
  EXPECT_TRUE(contains(i, a.monomial(Scalar{1}, beta[2])));
  EXPECT_FALSE(contains(i, a.monomial(Scalar{1}, beta[2] / ExponentVector::variable(2))));
  EXPECT_THROW(select_pure_power_beta(ideal_of("ring QQ[x,y]", "x^2")), PreconditionError);
}

TEST(Mono, OracleExamples) {
  const auto q = fixture("quadrics");
  EXPECT_EQ(mono_oracle(q.ideal("I")).mono, MonomialIdeal::maximal_power(q.ring, 3));
  EXPECT_EQ(mono_oracle(q.ideal("I2")).mono, MonomialIdeal::maximal_power(q.ring, 5));
  const auto l = fixture("ex35");
  EXPECT_EQ(mono_oracle(l.ideal("I")).mono, MonomialIdeal::maximal_power(l.ring, 3));
  EXPECT_THROW(mono_oracle(ideal_of("ring QQ[x,y]", "x^2"), 6), PreconditionError);
}

TEST(Mono, DegreeCeilingFromEnvironment) {
  ::setenv("MONO_DEGREE_CEILING", "7", 1);
  EXPECT_EQ(default_degree_ceiling(), 7U);
  ::setenv("MONO_DEGREE_CEILING", "junk", 1);
  EXPECT_EQ(default_degree_ceiling(), 30U);
  ::unsetenv("MONO_DEGREE_CEILING");
  EXPECT_EQ(default_degree_ceiling(), 30U);
}

TEST(Mono, CertificatesReconstructEachGenerator) {
  const auto f = fixture("ex35");
  const Ideal& i = f.ideal("I");
  const Arith a = i.ring().arith();
  for (const auto& r : {mono_via_gb(i, true), mono_via_puv(i, std::nullopt, true), mono_oracle(i, std::nullopt, true)}) {
    ASSERT_TRUE(r.certificate.has_value());
    ASSERT_EQ(r.certificate->size(), r.mono.generators().size());
    for (const auto& c : *r.certificate) {
      Polynomial sum;
      for (std::size_t k = 0; k < c.cofactors.size(); ++k) sum = a.add(sum, a.mul(c.cofactors[k], i.generators()[k]));
      EXPECT_EQ(sum, a.monomial(Scalar{1}, c.monomial));
    }
  }
}

TEST(Mono, MethodsAgreeWithLinearAlgebraOracle) {
  // Homogeneous instances, compared against monomial membership decided by Macaulay matrices.
  std::mt19937_64 rng(59);
  for (int k = 0; k < 25; ++k) {
    RingPtr ring = random_ring(rng, k % 2 ? FieldSpec::prime(3) : FieldSpec::rationals());
    const Ideal i = random_artinian_ideal(rng, ring);
    const auto gb = mono_via_gb(i).mono;
    EXPECT_EQ(mono_via_puv(i).mono, gb);
    EXPECT_EQ(mono_oracle(i).mono, gb);
    unsigned top = 0;
    for (const auto& g : gb.generators()) top = std::max(top, g.degree());
    EXPECT_EQ(MonomialIdeal(ring, oracle::mono_linear(i, top)), gb);
  }
}

TEST(Mono, TooManyVariablesForSaturation) {
  const auto i = ideal_of("ring QQ[a,b,c,d,e,f,g,h]", "a, b, c, d, e, f, g, h");
  EXPECT_THROW(mono_via_gb(i), PreconditionError);
  EXPECT_EQ(mono_oracle(i).mono, MonomialIdeal::maximal_power(i.ring_ptr(), 1));
}

TEST(Mono, CharScanExamples) {
  const std::vector<std::uint64_t> primes{2, 3, 5};
  const auto report = char_scan(fixture_text("ex22"), "I", primes, true);
  ASSERT_EQ(report.entries.size(), 4U);
  EXPECT_EQ(report.entries[0].field, FieldSpec::rationals());
  bool found = false;
  for (const auto& d : report.differences) {
    if (d.monomial == ev({1, 1, 2})) {
      found = true;
      EXPECT_EQ(d.mark, ".G..");
    }
  }
  EXPECT_TRUE(found);

  for (unsigned p : {2U, 3U, 5U}) {
    const auto r = char_scan(fixture_text("ex22p"), "I" + std::to_string(p), primes, true);
    for (const auto& e : r.entries) {
      const bool expected = !e.field.is_rationals() && e.field.characteristic() == p;
      EXPECT_EQ(e.result.mono.contains(ev({0, 0, p})), expected) << p << " " << e.field.name();
    }
  }

  const auto same = char_scan("ring QQ[x,y];\nI = ideal(x^2, x*y^3, y^5);", "I", primes, true);
  EXPECT_TRUE(same.differences.empty());
  for (const auto& e : same.entries) EXPECT_EQ(e.result.mono.generators(), same.entries[0].result.mono.generators());

  const std::vector<std::uint64_t> bad{4};
  EXPECT_THROW(char_scan(fixture_text("ex22"), "I", bad, false), PreconditionError);
  EXPECT_THROW(char_scan(fixture_text("ex22"), "I", {}, false), PreconditionError);
}
