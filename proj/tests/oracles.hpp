#pragma once

// Independent reference computations for tests. None of these use the
// Groebner engine, the Koszul strands or the library's linear algebra.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "monoideal/groebner.hpp"
#include "monoideal/monomial_ideal.hpp"

namespace oracle {

using BettiMap = std::map<std::pair<int, int>, std::uint64_t>;

/// Rank by textbook Gaussian elimination over QQ.
std::size_t rank_q(std::vector<std::vector<mpq_class>> rows);

/// f in I for homogeneous I and f, by a degree-d Macaulay matrix.
bool member_linear(const monoideal::Ideal& ideal, const monoideal::Polynomial& f);

/// Monomials of degree <= max_degree in I (by member_linear), minimalized.
std::vector<monoideal::ExponentVector> mono_linear(const monoideal::Ideal& ideal, unsigned max_degree);

/// beta_{i,j}(R/M) from the upper Koszul simplicial complexes of M.
BettiMap hochster_betti(const monoideal::MonomialIdeal& m);

/// Every monomial of degree <= d divisible by a generator.
std::vector<monoideal::ExponentVector> members_up_to(const monoideal::MonomialIdeal& m, unsigned d);

/// Whitespace-separated tokens.
std::vector<std::string> tokens(const std::string& text);

}  // namespace oracle
