#include "monoideal/ring.hpp"

#include <algorithm>
#include <set>

#include "monoideal/errors.hpp"

namespace monoideal {

RingContext::RingContext(FieldSpec field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {
  if (names_.empty()) throw PreconditionError("a ring needs at least one variable");
  if (names_.size() > kMaxVars) {
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw PreconditionError("empty variable name");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingContext RingContext::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = names_;
  for (const auto& want : extra) {
    std::string name = want;
    for (int suffix = 1; std::find(names.begin(), names.end(), name) != names.end(); ++suffix) {
      name = want + "_" + std::to_string(suffix);
    }
    names.push_back(name);
  }
  return RingContext(field_, std::move(names));
}

std::string RingContext::format(const Polynomial& f) const {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = field_.to_string(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += format_monomial(t.mono, names_);
    }
  }
  return out;
}

std::string RingContext::format_generator(const Polynomial& f) const {
  Arith a = arith();
  return format(a.primitive(a.reorder(f)));
}

}  // namespace monoideal
