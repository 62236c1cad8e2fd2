#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monoideal/groebner.hpp"
#include "monoideal/monomial_ideal.hpp"

namespace monoideal {

enum class MonoMethod { gb, puv, oracle };

std::string_view to_string(MonoMethod method);
std::optional<MonoMethod> parse_method(std::string_view text);

/// u = sum_i cofactors[i] * g_i over the generators g_i of I.
struct Certificate {
  ExponentVector monomial;
  std::vector<Polynomial> cofactors;
};

/// mono(I) with its provenance. Every generator has been checked to lie in I.
struct MonoResult {
  MonomialIdeal mono;
  MonoMethod method;
  FieldSpec field;
  std::optional<std::vector<Certificate>> certificate;
};

/// Oracle search ceiling: MONO_DEGREE_CEILING if set to a positive integer, else 30.
unsigned default_degree_ceiling();

/// Multi-homogenize, saturate by y_1...y_n and read the monomials of the
/// reduced basis under a y-before-x block order; y is then set to 1.
/// Needs 2n + 1 exponent lanes, so n <= 7.
MonoResult mono_via_gb(const Ideal& ideal, bool certify = false);

/// Mono(I): the monomial ideal generated by every term of every generator.
MonomialIdeal mono_upper(const Ideal& ideal);

/// Least a_i with x_i^a_i in I for each variable, found by doubling and
/// bisection on membership. Throws PreconditionError past the ceiling.
std::vector<ExponentVector> select_pure_power_beta(const Ideal& ideal, std::optional<unsigned> ceiling = std::nullopt);

/// (beta) : Mono((beta) : I). Without beta, I must be Artinian and beta is
/// chosen by select_pure_power_beta. A user-supplied beta must lie in I and
/// have pairwise disjoint supports; unmixedness of I is not checked.
MonoResult mono_via_puv(const Ideal& ideal, std::optional<std::vector<ExponentVector>> beta = std::nullopt,
                        bool certify = false);

/// Brute force over monomials below the least s with m^s in I.
MonoResult mono_oracle(const Ideal& ideal, std::optional<unsigned> ceiling = std::nullopt, bool certify = false);

struct CharScanEntry {
  FieldSpec field;
  MonoResult result;
};

/// A monomial that is a minimal generator of mono over some but not all
/// fields. mark[k] is 'G' (minimal generator), '+' (member, not minimal) or
/// '.' (not a member) for entries[k].
struct CharScanDiff {
  ExponentVector monomial;
  std::string mark;
};

struct CharScanReport {
  std::vector<std::string> names;
  std::vector<CharScanEntry> entries;
  std::vector<CharScanDiff> differences;
};

/// mono_via_gb of the named ideal over QQ (optional, listed first) and each
/// prime field, computed concurrently. Throws PreconditionError on a
/// non-prime p or if no field is requested.
CharScanReport char_scan(std::string_view source, const std::string& ideal_name,
                         std::span<const std::uint64_t> primes, bool include_char_zero);

}  // namespace monoideal
