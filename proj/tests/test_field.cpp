#include <gtest/gtest.h>

#include "monoideal/errors.hpp"
#include "monoideal/field.hpp"

using namespace monoideal;

TEST(Field, RationalArithmetic) {
  const FieldSpec q = FieldSpec::rationals();
  const Scalar half = q.from_ratio(1, 2);
  const Scalar third = q.from_ratio(-1, 3);
  EXPECT_EQ(q.to_string(q.add(half, third)), "1/6");
  EXPECT_EQ(q.to_string(q.mul(half, third)), "-1/6");
  EXPECT_TRUE(q.is_one(q.mul(half, q.inv(half))));
  EXPECT_TRUE(q.is_zero(q.sub(half, half)));
  EXPECT_EQ(q.sign(third), -1);
}

TEST(Field, RationalOverflowPromotesToBigValues) {
  const FieldSpec q = FieldSpec::rationals();
  Scalar a = q.from_int(1);
  for (int k = 0; k < 10; ++k) a = q.mul(a, q.from_int(1'000'000'007));
  const mpq_class expected = [] {
    mpz_class v = 1;
    for (int k = 0; k < 10; ++k) v *= 1'000'000'007;
    return mpq_class(v);
  }();
  EXPECT_EQ(a.to_mpq(), expected);
  EXPECT_EQ(q.to_string(q.div(a, a)), "1");
}

TEST(Field, PrimeFieldArithmetic) {
  const FieldSpec f = FieldSpec::prime(7);
  EXPECT_EQ(f.name(), "ZZ/7");
  EXPECT_TRUE(f.is_one(f.mul(f.from_int(3), f.inv(f.from_int(3)))));
  EXPECT_TRUE(f.is_zero(f.from_int(14)));
  EXPECT_TRUE(f.equal(f.from_int(-1), f.from_int(6)));
  EXPECT_EQ(f.to_string(f.from_int(6)), "-1");
  EXPECT_TRUE(f.equal(f.from_ratio(1, 2), f.from_int(4)));
}

TEST(Field, EveryNonzeroResidueIsInvertible) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL, 32003ULL}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(std::min<std::uint64_t>(p, 500)); ++a) {
      ASSERT_TRUE(f.is_one(f.mul(f.from_int(a), f.inv(f.from_int(a))))) << p << " " << a;
    }
  }
}

TEST(Field, Errors) {
  EXPECT_THROW(FieldSpec::prime(4), PreconditionError);
  EXPECT_THROW(FieldSpec::prime(1), PreconditionError);
  EXPECT_THROW(FieldSpec::prime(1ULL << 31U), PreconditionError);
  EXPECT_THROW(FieldSpec::prime(3).from_ratio(1, 3), PreconditionError);
  EXPECT_THROW(FieldSpec::rationals().inv(Scalar{}), PreconditionError);
}

TEST(Field, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    ASSERT_EQ(is_prime(n), prime) << n;
  }
}
