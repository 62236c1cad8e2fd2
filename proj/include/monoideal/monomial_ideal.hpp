#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monoideal/groebner.hpp"
#include "monoideal/linalg.hpp"
#include "monoideal/ring.hpp"

namespace monoideal {

/// A monomial ideal stored by its minimal generators, sorted grevlex-descending.
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  MonomialIdeal(RingPtr ring, std::vector<ExponentVector> generators);

  static MonomialIdeal zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }
  static MonomialIdeal unit(RingPtr ring) { return MonomialIdeal(std::move(ring), {ExponentVector{}}); }
  /// (x_1, ..., x_n)^d.
  static MonomialIdeal maximal_power(RingPtr ring, unsigned d);
  /// (x_1^b_1, ..., x_n^b_n).
  static MonomialIdeal pure_powers(RingPtr ring, std::span<const unsigned> b);
  /// Throws PreconditionError unless the generators of `ideal` are monomials.
  static MonomialIdeal from_ideal(const Ideal& ideal);

  const RingContext& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_one(); }
  bool contains(const ExponentVector& u) const;
  /// other is contained in *this.
  bool contains(const MonomialIdeal& other) const;

  /// Same generators as a polynomial ideal; the grevlex basis is pre-seeded.
  Ideal to_ideal() const;
  /// "(x^2, x*y)"; "(0)" for the zero ideal.
  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return *a.ring_ == *b.ring_ && a.gens_ == b.gens_;
  }

 private:
  RingPtr ring_;
  std::vector<ExponentVector> gens_;
};

/// Antichain of the divisibility-minimal elements, sorted grevlex-descending.
std::vector<ExponentVector> minimalize(std::vector<ExponentVector> monomials, std::size_t arity);

MonomialIdeal m_colon(const MonomialIdeal& m, const ExponentVector& u);
/// Intersection of M : u over the generators u of N.
MonomialIdeal m_colon_ideal(const MonomialIdeal& m, const MonomialIdeal& n);
MonomialIdeal m_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal m_radical(const MonomialIdeal& m);
MonomialIdeal m_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal m_product(const MonomialIdeal& a, const MonomialIdeal& b);

bool is_artinian(const MonomialIdeal& m);
/// Least s with m^s contained in M. Throws PreconditionError if M is not Artinian.
unsigned power_gap(const MonomialIdeal& m);

/// Degree-d monomials outside M, grevlex-descending.
std::vector<ExponentVector> standard_monomials(const MonomialIdeal& m, unsigned d);
/// Hilbert function of R/M in degrees 0..max_degree.
std::vector<std::size_t> hilbert_function(const MonomialIdeal& m, unsigned max_degree);

/// Standard monomials u with x_i * u in M for every i. Requires Artinian M.
std::vector<ExponentVector> socle_monomials(const MonomialIdeal& m);
/// Exponent vectors b with M the intersection of the ideals (x_i^b_i);
/// one per socle monomial x^(b-1). Requires Artinian M.
std::vector<ExponentVector> irreducible_decomposition(const MonomialIdeal& m);
/// The irreducible ideal (x_1^b_1, ..., x_n^b_n) for an exponent vector b.
MonomialIdeal irreducible_component(const RingPtr& ring, const ExponentVector& b);

/// Exactly one socle monomial. Also checks the pure-power form and throws
/// DisagreementError if the two tests differ. Requires Artinian M.
bool is_gorenstein(const MonomialIdeal& m);
/// M = (x_1^b_1, ..., x_n^b_n) with every variable present.
bool is_pure_power_form(const MonomialIdeal& m);
bool is_primary_monomial(const MonomialIdeal& m);
bool is_prime_monomial(const MonomialIdeal& m);

/// Standard monomials of one degree sharing the colon ideal M : u.
struct WitnessClass {
  unsigned degree = 0;
  std::vector<ExponentVector> members;
  MonomialIdeal colon;
};

/// Classes with at least two members, by degree and then by first member.
/// The degree cap defaults to power_gap(M) - 1. Requires Artinian M.
std::vector<WitnessClass> equal_colon_classes(const MonomialIdeal& m, std::optional<unsigned> cap = std::nullopt);
/// All unordered pairs inside the witness classes.
std::vector<std::pair<ExponentVector, ExponentVector>> equal_colon_witnesses(
    const MonomialIdeal& m, std::optional<unsigned> cap = std::nullopt);

/// Socle monomials u_1..u_r of M and the coordinates of combinations
/// f_j = sum_i a_ij u_i as the columns of an r x s matrix.
struct SocleMatrix {
  std::vector<ExponentVector> socle;
  Matrix coeffs;
  FieldSpec field;
};

/// Throws PreconditionError if some f_j has a term outside the socle or is zero.
SocleMatrix socle_matrix(const MonomialIdeal& m, std::span<const Polynomial> combinations);
/// True iff no standard basis vector e_i lies in the column span.
bool socle_matrix_test(const SocleMatrix& s);

/// M = mono(I) for an Artinian M contained in I, decided by: no socle
/// monomial of M lies in I. Throws PreconditionError if M is not in I.
bool mono_subideal_criterion(const Ideal& ideal, const MonomialIdeal& m);

}  // namespace monoideal
