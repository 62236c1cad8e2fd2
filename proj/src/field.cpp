#include "monoideal/field.hpp"

#include <climits>
#include <limits>

#include "monoideal/errors.hpp"

namespace monoideal {

namespace {

Scalar demote(mpq_class q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    return Scalar{static_cast<std::int64_t>(q.get_num().get_si())};
  }
  return Scalar{std::move(q)};
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % m);
    base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * x) % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Scalar::Scalar(mpq_class q) : v_(std::move(q)) {}

mpq_class Scalar::to_mpq() const {
  if (is_small()) return mpq_class(static_cast<long>(small()));
  return big();
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31U)) throw PreconditionError("characteristic " + std::to_string(p) + " is not below 2^31");
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::prime_field, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::name() const {
  return is_rationals() ? std::string("QQ") : "ZZ/" + std::to_string(p_);
}

std::uint64_t FieldSpec::residue(const Scalar& a) const { return static_cast<std::uint64_t>(a.small()); }

Scalar FieldSpec::from_int(std::int64_t v) const {
  if (is_rationals()) return Scalar{v};
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar{r};
}

Scalar FieldSpec::from_mpz(const mpz_class& v) const {
  if (is_rationals()) return demote(mpq_class(v));
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return Scalar{static_cast<std::int64_t>(r.get_si())};
}

Scalar FieldSpec::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (is_rationals()) {
    if (den == 0) throw PreconditionError("division by zero");
    mpq_class q(num, den);
    q.canonicalize();
    return demote(std::move(q));
  }
  Scalar d = from_mpz(den);
  if (is_zero(d)) throw PreconditionError("denominator vanishes modulo " + std::to_string(p_));
  return div(from_mpz(num), d);
}

bool FieldSpec::is_zero(const Scalar& a) const {
  return a.is_small() ? a.small() == 0 : sgn(a.big()) == 0;
}

bool FieldSpec::is_one(const Scalar& a) const {
  return a.is_small() ? a.small() == 1 : a.big() == 1;
}

bool FieldSpec::equal(const Scalar& a, const Scalar& b) const {
  if (a.is_small() && b.is_small()) return a.small() == b.small();
  return a.to_mpq() == b.to_mpq();
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (!is_rationals()) {
    std::uint64_t s = residue(a) + residue(b);
    if (s >= p_) s -= p_;
    return Scalar{static_cast<std::int64_t>(s)};
  }
  if (a.is_small() && b.is_small()) {
    std::int64_t out;
    if (!__builtin_add_overflow(a.small(), b.small(), &out)) return Scalar{out};
  }
  return demote(a.to_mpq() + b.to_mpq());
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (!is_rationals()) {
    std::uint64_t s = residue(a) + p_ - residue(b);
    if (s >= p_) s -= p_;
    return Scalar{static_cast<std::int64_t>(s)};
  }
  if (a.is_small() && b.is_small()) {
    std::int64_t out;
    if (!__builtin_sub_overflow(a.small(), b.small(), &out)) return Scalar{out};
  }
  return demote(a.to_mpq() - b.to_mpq());
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (!is_rationals()) {
    return Scalar{static_cast<std::int64_t>((residue(a) * residue(b)) % p_)};
  }
  if (a.is_small() && b.is_small()) {
    std::int64_t out;
    if (!__builtin_mul_overflow(a.small(), b.small(), &out)) return Scalar{out};
  }
  return demote(a.to_mpq() * b.to_mpq());
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (!is_rationals()) {
    std::uint64_t r = residue(a);
    return Scalar{static_cast<std::int64_t>(r == 0 ? 0 : p_ - r)};
  }
  if (a.is_small() && a.small() != std::numeric_limits<std::int64_t>::min()) return Scalar{-a.small()};
  return demote(-a.to_mpq());
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) throw PreconditionError("inverse of zero");
  if (!is_rationals()) {
    return Scalar{static_cast<std::int64_t>(mod_pow(residue(a), p_ - 2, p_))};
  }
  if (a.is_small() && (a.small() == 1 || a.small() == -1)) return a;
  mpq_class q = a.to_mpq();
  mpq_class r(q.get_den(), q.get_num());
  r.canonicalize();
  return demote(std::move(r));
}

int FieldSpec::sign(const Scalar& a) const {
  if (!is_rationals()) return is_zero(a) ? 0 : 1;
  if (a.is_small()) return (a.small() > 0) - (a.small() < 0);
  return sgn(a.big());
}

std::string FieldSpec::to_string(const Scalar& a) const {
  if (!is_rationals()) {
    auto r = static_cast<std::int64_t>(residue(a));
    if (r > static_cast<std::int64_t>(p_ / 2)) r -= p_;
    return std::to_string(r);
  }
  if (a.is_small()) return std::to_string(a.small());
  return a.big().get_str();
}

}  // namespace monoideal
