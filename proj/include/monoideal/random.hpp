#pragma once

#include <random>

#include "monoideal/groebner.hpp"
#include "monoideal/monomial_ideal.hpp"

namespace monoideal {

struct RandomIdealShape {
  std::size_t min_vars = 2;
  std::size_t max_vars = 3;
  unsigned max_pure_power = 4;
  std::size_t max_extra_monomials = 2;
  std::size_t min_binomials = 1;
  std::size_t max_binomials = 2;
  unsigned max_degree = 5;
  bool homogeneous = true;
};

/// k[x, y, z, ...] with a random arity in [shape.min_vars, shape.max_vars].
RingPtr random_ring(std::mt19937_64& rng, const FieldSpec& field, const RandomIdealShape& shape = {});

/// Pure powers of every variable plus a few random monomials.
MonomialIdeal random_artinian_monomial(std::mt19937_64& rng, const RingPtr& ring, const RandomIdealShape& shape = {});

/// A random monomial of the given degree in the ring's variables.
ExponentVector random_monomial(std::mt19937_64& rng, std::size_t n, unsigned degree);

/// c1*u + c2*v with u != v of equal degree when shape.homogeneous.
Polynomial random_binomial(std::mt19937_64& rng, const RingContext& ring, const RandomIdealShape& shape = {});

/// random_artinian_monomial plus random binomials.
Ideal random_artinian_ideal(std::mt19937_64& rng, const RingPtr& ring, const RandomIdealShape& shape = {});

}  // namespace monoideal
