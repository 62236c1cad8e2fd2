#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoideal/field.hpp"
#include "monoideal/monomial.hpp"
#include "monoideal/polynomial.hpp"

namespace monoideal {

/// k[x_1, ..., x_n]: coefficient field plus ordered, distinct variable names.
/// The canonical term order of a ring is grevlex.
class RingContext {
 public:
  /// Throws PreconditionError on empty, duplicate, or too many names.
  RingContext(FieldSpec field, std::vector<std::string> names);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t arity() const noexcept { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  TermOrder default_order() const { return TermOrder::grevlex(arity()); }
  Arith arith() const { return Arith(field_, default_order()); }
  Arith arith(const TermOrder& order) const { return Arith(field_, order); }

  /// Appends variables; names that would clash get a numeric suffix.
  RingContext extended(const std::vector<std::string>& extra) const;
  RingContext with_field(FieldSpec field) const { return RingContext(field, names_); }

  std::string format(const ExponentVector& m) const { return format_monomial(m, names_); }
  /// Terms in stored order, e.g. "x^2*y - 3/2*x + 1".
  std::string format(const Polynomial& f) const;
  /// Display convention for generators: over QQ integer-cleared with
  /// positive leading coefficient, over ZZ/p monic; grevlex term order.
  std::string format_generator(const Polynomial& f) const;

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  FieldSpec field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(FieldSpec field, std::vector<std::string> names) {
  return std::make_shared<const RingContext>(field, std::move(names));
}

}  // namespace monoideal
