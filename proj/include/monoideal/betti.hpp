#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monoideal/groebner.hpp"
#include "monoideal/monomial_ideal.hpp"

namespace monoideal {

/// Graded Betti numbers beta_{i,j} of a cyclic module R/I.
class BettiTable {
 public:
  explicit BettiTable(std::size_t n_vars = 0) : n_vars_(n_vars) {}

  std::size_t n_vars() const noexcept { return n_vars_; }
  std::uint64_t at(int i, int j) const;
  /// Zero counts are not stored.
  void set(int i, int j, std::uint64_t count);
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Largest i with a nonzero entry; -1 for the empty table.
  int projective_dimension() const;
  /// max{j - i : beta_{i,j} != 0}; -1 for the empty table.
  int regularity() const;
  /// Column sums for i = 0..projective_dimension().
  std::vector<std::uint64_t> totals() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t n_vars_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Standard monomials of in(I) under grevlex in one degree.
struct GradedPieceBasis {
  unsigned degree = 0;
  std::vector<ExponentVector> basis;
};

/// Bases of (R/I)_d for d = 0..max_degree. Requires homogeneous I.
std::vector<GradedPieceBasis> graded_pieces(const Ideal& ideal, unsigned max_degree);

/// Top nonzero degree of R/I for homogeneous Artinian I; -1 if I = (1).
int top_degree(const Ideal& ideal);

/// beta_{i,j}(R/I) for j <= max_degree as the homology of the degree-j
/// strand of the Koszul complex on the variables tensored with R/I. The
/// default bound for Artinian I is t + n with t the top degree of R/I.
/// Throws PreconditionError for non-homogeneous generators, or for
/// non-Artinian I without max_degree.
BettiTable graded_betti(const Ideal& ideal, std::optional<unsigned> max_degree = std::nullopt);
BettiTable graded_betti(const MonomialIdeal& m, std::optional<unsigned> max_degree = std::nullopt);

int regularity(const BettiTable& table);
/// j - n for each nonzero beta_{n,j}, repeated beta_{n,j} times, ascending.
std::vector<int> socle_degrees(const BettiTable& table);
/// beta_{n,j} != 0 for exactly one j.
bool is_level(const BettiTable& table);

/// Macaulay2 layout: header of column indices, a "total:" row, then one row
/// per d = 0..regularity with beta_{i,i+d}; "." for zero; right-aligned.
std::string format_table(const BettiTable& table);
/// "i j count" per nonzero entry, sorted by (i, j).
std::string format_records(const BettiTable& table);

}  // namespace monoideal
