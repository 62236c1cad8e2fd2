#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace monoideal {

struct PropertyOutcome {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return checked > 0 && failures == 0; }
};

struct PropertyOptions {
  std::uint64_t seed = 1;
  /// Random Artinian instances per property family.
  std::size_t instances = 50;
};

/// Seeded randomized checks of the structural statements about mono(I):
/// method agreement, containment/idempotence/monotonicity, radicals,
/// intersections, products, regularity, top Betti numbers, levelness,
/// equal-colon binomials, the printed strict-containment examples, the
/// Gorenstein characterization, and the socle-monomial criterion.
std::vector<PropertyOutcome> run_properties(const PropertyOptions& options);

}  // namespace monoideal
