#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoideal/groebner.hpp"
#include "monoideal/ring.hpp"

namespace monoideal {

/// A parsed ideal file: one ring declaration followed by named ideals.
///
///   ring-decl  := "ring" ("QQ" | "ZZ/" INT) "[" ident ("," ident)* "]"
///   ideal-decl := ident "=" "ideal" "(" poly ("," poly)* ")"
///
/// Statements end with ';' and '#' starts a line comment. Polynomials use
/// + - * ^ / and parentheses over variables and integer literals; '/' only
/// divides by nonzero constants, so "3/2*x" and "x/2" are both accepted.
struct SourceFile {
  RingPtr ring;
  std::vector<std::string> names;  // declaration order
  std::map<std::string, Ideal> ideals;

  /// Throws PreconditionError if no ideal has this name.
  const Ideal& ideal(const std::string& name) const;
};

/// Parses an ideal file. With field_override the declared field is replaced
/// and integer literals are reduced into the given field. Throws ParseError
/// (with line and column) on malformed input, unknown variables, composite
/// or out-of-range characteristics, duplicate ideal names, and denominators
/// that vanish in the field.
SourceFile parse_source(std::string_view text, std::optional<FieldSpec> field_override = std::nullopt);

/// Parses a single polynomial expression over `ring`.
Polynomial parse_polynomial(std::string_view text, const RingContext& ring);

/// Parses a comma-separated polynomial list such as "x^2, y^2".
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingContext& ring);

}  // namespace monoideal
