#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "monoideal/polynomial.hpp"
#include "monoideal/ring.hpp"

namespace monoideal {

/// Reduced Groebner basis: monic elements with pairwise non-divisible leads,
/// fully tail-reduced, sorted descending by lead under `order`.
struct GroebnerBasis {
  TermOrder order;
  std::vector<Polynomial> elements;
  std::vector<ExponentVector> leads;

  bool is_unit() const { return elements.size() == 1 && elements[0].is_constant(); }
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller criteria. Inputs must be sorted under arith.order().
GroebnerBasis buchberger(std::span<const Polynomial> generators, const Arith& arith);

/// A polynomial ideal. Generators are kept nonzero and sorted under the
/// ring's grevlex order. Reduced bases are cached per term order; copies of
/// an Ideal share the cache, and concurrent fills compute the same value.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);

  const RingContext& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  /// Reduced basis under `order` (default: grevlex), computed on first use.
  std::shared_ptr<const GroebnerBasis> groebner(const TermOrder& order) const;
  std::shared_ptr<const GroebnerBasis> groebner() const { return groebner(ring_->default_order()); }
  /// Installs a basis known to be the reduced basis under its order.
  void seed_basis(GroebnerBasis basis) const;

  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_homogeneous() const noexcept;
  bool has_monomial_generators() const noexcept;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<TermOrder, std::shared_ptr<const GroebnerBasis>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Remainder of f modulo the reduced basis of I under `order`; zero iff
/// f is in I. Returned sorted under the ring's grevlex order.
Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const TermOrder& order);
Polynomial normal_form(const Polynomial& f, const Ideal& ideal);

std::shared_ptr<const GroebnerBasis> reduced_gb(const Ideal& ideal, const TermOrder& order);

bool contains(const Ideal& ideal, const Polynomial& f);
/// sub is contained in ideal.
bool contains(const Ideal& ideal, const Ideal& sub);
bool equal(const Ideal& a, const Ideal& b);

/// I intersected with k[remaining variables]; the result lives in a new ring
/// over the remaining variables (in their original order). Dropping every
/// variable throws PreconditionError.
Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop);

/// I : m^infinity via one auxiliary variable t and the generator t*m - 1.
Ideal saturate(const Ideal& ideal, const ExponentVector& m);
/// I : m^infinity by iterating I : m until the ideal stabilizes.
Ideal saturate_by_iterated_colon(const Ideal& ideal, const ExponentVector& m);

/// I cap J via t*I + (1 - t)*J and elimination of t.
Ideal intersect(const Ideal& a, const Ideal& b);
/// I : g = (I cap (g)) / g. Throws PreconditionError for g = 0.
Ideal colon(const Ideal& ideal, const Polynomial& g);
/// I : J as the intersection of I : f over the generators f of J.
Ideal colon_ideal(const Ideal& ideal, const Ideal& other);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, unsigned k);

/// Cofactors c with f = sum_i c_i * g_i over the generators g_i of I, or
/// nullopt when f is not in I. Intended for certificates and small inputs.
std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const Ideal& ideal);

}  // namespace monoideal
