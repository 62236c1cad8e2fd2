#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace monoideal {

enum class FieldKind { rationals, prime_field };

/// A field element. For QQ the value is either a machine integer or a
/// normalized GMP rational; results that fit back into int64 with unit
/// denominator are demoted. For ZZ/p the value is always an int64 residue in
/// [0, p). The default value is zero in every field.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(std::int64_t v) : v_(v) {}
  explicit Scalar(mpq_class q);

  bool is_small() const noexcept { return std::holds_alternative<std::int64_t>(v_); }
  std::int64_t small() const { return std::get<std::int64_t>(v_); }
  const mpq_class& big() const { return std::get<mpq_class>(v_); }
  mpq_class to_mpq() const;

 private:
  std::variant<std::int64_t, mpq_class> v_{std::int64_t{0}};
};

/// Coefficient field: QQ or ZZ/p with p prime, p < 2^31.
class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }
  /// Throws PreconditionError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rationals() const noexcept { return kind_ == FieldKind::rationals; }
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  Scalar zero() const { return Scalar{}; }
  Scalar one() const { return Scalar{std::int64_t{1}}; }
  Scalar from_int(std::int64_t v) const;
  Scalar from_mpz(const mpz_class& v) const;
  /// num/den reduced into the field; throws PreconditionError if den
  /// vanishes in the field.
  Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws PreconditionError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Sign used for display normalization; residues mod p count as positive.
  int sign(const Scalar& a) const;
  /// QQ: canonical "a" or "a/b". ZZ/p: the symmetric representative in
  /// (-p/2, p/2].
  std::string to_string(const Scalar& a) const;

 private:
  FieldSpec(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  std::uint64_t residue(const Scalar& a) const;

  FieldKind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace monoideal
