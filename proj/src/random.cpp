#include "monoideal/random.hpp"

namespace monoideal {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

RingPtr random_ring(std::mt19937_64& rng, const FieldSpec& field, const RandomIdealShape& shape) {
  static const char* const kNames[] = {"x", "y", "z", "w", "v", "u", "s"};
  const std::size_t n = uniform(rng, shape.min_vars, shape.max_vars);
  std::vector<std::string> names(kNames, kNames + n);
  return make_ring(field, std::move(names));
}

ExponentVector random_monomial(std::mt19937_64& rng, std::size_t n, unsigned degree) {
  ExponentVector e;
  for (unsigned k = 0; k < degree; ++k) {
    const std::size_t v = uniform(rng, 0, n - 1);
    e.set(v, e[v] + 1U);
  }
  return e;
}

MonomialIdeal random_artinian_monomial(std::mt19937_64& rng, const RingPtr& ring, const RandomIdealShape& shape) {
  const std::size_t n = ring->arity();
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(ExponentVector::variable(i, static_cast<unsigned>(uniform(rng, 2, shape.max_pure_power))));
  }
  const std::size_t extra = uniform(rng, 0, shape.max_extra_monomials);
  for (std::size_t k = 0; k < extra; ++k) {
    gens.push_back(random_monomial(rng, n, static_cast<unsigned>(uniform(rng, 2, shape.max_degree))));
  }
  return MonomialIdeal(ring, std::move(gens));
}

Polynomial random_binomial(std::mt19937_64& rng, const RingContext& ring, const RandomIdealShape& shape) {
  const std::size_t n = ring.arity();
  const FieldSpec& field = ring.field();
  for (;;) {
    const auto d1 = static_cast<unsigned>(uniform(rng, 1, shape.max_degree));
    const auto d2 = shape.homogeneous ? d1 : static_cast<unsigned>(uniform(rng, 0, shape.max_degree));
    ExponentVector u = random_monomial(rng, n, d1);
    ExponentVector v = random_monomial(rng, n, d2);
    if (u == v) continue;
    auto coeff = [&] {
      std::int64_t c = 0;
      while (field.is_zero(field.from_int(c))) c = static_cast<std::int64_t>(uniform(rng, 0, 6)) - 3;
      return field.from_int(c);
    };
    return ring.arith().canonical({Term{coeff(), u}, Term{coeff(), v}});
  }
}

Ideal random_artinian_ideal(std::mt19937_64& rng, const RingPtr& ring, const RandomIdealShape& shape) {
  MonomialIdeal base = random_artinian_monomial(rng, ring, shape);
  Arith arith = ring->arith();
  std::vector<Polynomial> gens;
  for (const auto& g : base.generators()) gens.push_back(arith.monomial(ring->field().one(), g));
  const std::size_t k = uniform(rng, shape.min_binomials, shape.max_binomials);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(random_binomial(rng, *ring, shape));
  return Ideal(ring, std::move(gens));
}

}  // namespace monoideal
