#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "monoideal/parser.hpp"

namespace testing_support {

inline std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(MONOIDEAL_FIXTURES) + "/" + name + ".ideal");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(MONOIDEAL_FIXTURES) + "/" + name + ".ideal"; }

inline monoideal::SourceFile fixture(const std::string& name,
                                     std::optional<monoideal::FieldSpec> field = std::nullopt) {
  return monoideal::parse_source(fixture_text(name), field);
}

/// A one-ideal source named I over the given ring declaration.
inline monoideal::Ideal ideal_of(const std::string& ring_decl, const std::string& gens) {
  return monoideal::parse_source(ring_decl + ";\nI = ideal(" + gens + ");").ideal("I");
}

}  // namespace testing_support
