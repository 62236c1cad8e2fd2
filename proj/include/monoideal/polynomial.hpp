#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "monoideal/field.hpp"
#include "monoideal/monomial.hpp"

namespace monoideal {

bool operator==(const Scalar& a, const Scalar& b);

struct Term {
  Scalar coeff;
  ExponentVector mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms with distinct monomials, strictly
/// decreasing under the term order that produced it. The empty term list is
/// zero. A Polynomial does not remember its order; every operation goes
/// through an Arith that fixes field and order.
class Polynomial {
 public:
  Polynomial() = default;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& lead() const { return terms_.front(); }
  const ExponentVector& lead_monomial() const { return terms_.front().mono; }
  const Scalar& lead_coeff() const { return terms_.front().coeff; }

  unsigned total_degree() const noexcept;
  unsigned degree_in(std::size_t var) const noexcept;
  bool is_homogeneous() const noexcept;
  /// Union of the supports of all terms.
  std::uint32_t support() const noexcept;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  friend class Arith;
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}

  std::vector<Term> terms_;
};

/// Polynomial arithmetic for one (field, term order) pair. Inputs must be
/// sorted under order(); outputs are.
class Arith {
 public:
  Arith(FieldSpec field, TermOrder order) : field_(field), order_(std::move(order)) {}

  const FieldSpec& field() const noexcept { return field_; }
  const TermOrder& order() const noexcept { return order_; }

  /// Sorts, merges equal monomials and drops zero coefficients.
  Polynomial canonical(std::vector<Term> terms) const;
  /// Re-sorts a polynomial produced under another order.
  Polynomial reorder(const Polynomial& f) const;

  Polynomial constant(const Scalar& c) const;
  Polynomial monomial(const Scalar& c, const ExponentVector& m) const;
  Polynomial variable(std::size_t index) const { return monomial(field_.one(), ExponentVector::variable(index)); }

  Polynomial add(const Polynomial& f, const Polynomial& g) const;
  Polynomial sub(const Polynomial& f, const Polynomial& g) const;
  Polynomial neg(const Polynomial& f) const;
  Polynomial scale(const Polynomial& f, const Scalar& c) const;
  Polynomial mul_term(const Polynomial& f, const Scalar& c, const ExponentVector& m) const;
  /// f - c * m * g.
  Polynomial sub_mul_term(const Polynomial& f, const Scalar& c, const ExponentVector& m, const Polynomial& g) const;
  /// a * f - c * m * g; used by fraction-free reduction over QQ.
  Polynomial combine(const Scalar& a, const Polynomial& f, const Scalar& c, const ExponentVector& m,
                     const Polynomial& g) const;
  /// out = a * f - c * m * g on raw sorted term ranges; out is overwritten.
  void combine_into(std::span<const Term> f, const Scalar& a, const Scalar& c, const ExponentVector& m,
                    std::span<const Term> g, std::vector<Term>& out) const;
  /// Wraps terms already sorted under order() with nonzero coefficients and
  /// distinct monomials.
  Polynomial from_sorted(std::vector<Term> terms) const { return Polynomial(std::move(terms)); }
  Polynomial mul(const Polynomial& f, const Polynomial& g) const;
  Polynomial pow(const Polynomial& f, unsigned k) const;

  /// Leading coefficient 1 (zero stays zero).
  Polynomial monic(const Polynomial& f) const;
  /// Over QQ: integer coefficients with gcd 1 and positive leading
  /// coefficient. Over ZZ/p: monic.
  Polynomial primitive(const Polynomial& f) const;

  /// Substitutes 1 for every variable whose bit is set in mask.
  Polynomial specialize_to_one(const Polynomial& f, std::uint32_t mask) const;

  /// Exact division f / g; nullopt when g does not divide f.
  std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) const;

 private:
  FieldSpec field_;
  TermOrder order_;
};

/// Multiplies each term x^a of f by prod_i y_i^(d_i - a_i), where
/// d_i = deg_{x_i} f. The x variables are lanes [0, n) and y_i is lane n + i;
/// the result is sorted under arith's order, whose arity must be at least 2n.
Polynomial multi_homogenize(const Polynomial& f, std::size_t n, const Arith& arith);

}  // namespace monoideal
