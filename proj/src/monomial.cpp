#include "monoideal/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "monoideal/errors.hpp"

namespace monoideal {

ExponentVector ExponentVector::from_span(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) {
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  ExponentVector e;
  for (std::size_t i = 0; i < exps.size(); ++i) e.set(i, exps[i]);
  return e;
}

ExponentVector ExponentVector::variable(std::size_t index, unsigned power) {
  ExponentVector e;
  e.set(index, power);
  return e;
}

void ExponentVector::set(std::size_t i, unsigned value) {
  if (i >= kMaxVars) throw PreconditionError("variable index out of range");
  if (value > 0xFFFFU) throw std::overflow_error("exponent exceeds 65535");
  e_[i] = static_cast<std::uint16_t>(value);
}

ExponentVector ExponentVector::squarefree() const noexcept {
  ExponentVector r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] != 0 ? 1 : 0;
  return r;
}

ExponentVector ExponentVector::colon(const ExponentVector& u) const noexcept {
  ExponentVector r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] > u.e_[i] ? static_cast<std::uint16_t>(e_[i] - u.e_[i]) : 0;
  return r;
}

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r;
  unsigned overflow = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = static_cast<unsigned>(a.e_[i]) + b.e_[i];
    overflow |= s >> 16U;
    r.e_[i] = static_cast<std::uint16_t>(s);
  }
  if (overflow != 0) throw std::overflow_error("exponent exceeds 65535");
  return r;
}

ExponentVector operator/(const ExponentVector& a, const ExponentVector& b) {
  if (!b.divides(a)) throw PreconditionError("monomial quotient is not exact");
  ExponentVector r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
  return r;
}

std::size_t ExponentVector::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto v : e_) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29U));
}

std::string format_monomial(const ExponentVector& e, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

namespace {

std::vector<std::size_t> iota_vars(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

std::strong_ordering compare_block(const OrderBlock& b, const ExponentVector& x, const ExponentVector& y) noexcept {
  if (b.base == BaseOrder::lex) {
    for (std::size_t v : b.vars) {
      if (x[v] != y[v]) return x[v] <=> y[v];
    }
    return std::strong_ordering::equal;
  }
  unsigned dx = 0;
  unsigned dy = 0;
  for (std::size_t v : b.vars) {
    dx += x[v];
    dy += y[v];
  }
  if (dx != dy) return dx <=> dy;
  for (auto it = b.vars.rbegin(); it != b.vars.rend(); ++it) {
    if (x[*it] != y[*it]) return y[*it] <=> x[*it];
  }
  return std::strong_ordering::equal;
}

}  // namespace

TermOrder TermOrder::lex(std::size_t arity) {
  return TermOrder(Kind::lex, arity, {OrderBlock{iota_vars(arity), BaseOrder::lex}});
}

TermOrder TermOrder::grevlex(std::size_t arity) {
  return TermOrder(Kind::grevlex, arity, {OrderBlock{iota_vars(arity), BaseOrder::grevlex}});
}

TermOrder TermOrder::block(std::size_t arity, std::vector<OrderBlock> blocks) {
  if (arity > kMaxVars) throw PreconditionError("term order arity exceeds variable limit");
  std::vector<int> seen(arity, 0);
  for (const auto& b : blocks) {
    if (b.vars.empty()) throw PreconditionError("empty block in block order");
    for (std::size_t v : b.vars) {
      if (v >= arity || seen[v]++ != 0) throw PreconditionError("blocks do not partition the variables");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw PreconditionError("blocks do not partition the variables");
  }
  return TermOrder(Kind::block, arity, std::move(blocks));
}

TermOrder TermOrder::elimination(std::size_t arity, std::span<const std::size_t> eliminated) {
  std::vector<std::size_t> first(eliminated.begin(), eliminated.end());
  std::sort(first.begin(), first.end());
  std::vector<std::size_t> rest;
  for (std::size_t v = 0; v < arity; ++v) {
    if (!std::binary_search(first.begin(), first.end(), v)) rest.push_back(v);
  }
  std::vector<OrderBlock> blocks;
  if (!first.empty()) blocks.push_back({first, BaseOrder::grevlex});
  if (!rest.empty()) blocks.push_back({rest, BaseOrder::grevlex});
  return block(arity, std::move(blocks));
}

std::strong_ordering TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  for (std::size_t i = arity_; i < kMaxVars; ++i) {
    if (a[i] != 0 || b[i] != 0) throw PreconditionError("exponent vector arity does not match term order");
  }
  return cmp(a, b);
}

std::strong_ordering TermOrder::cmp(const ExponentVector& a, const ExponentVector& b) const noexcept {
  switch (kind_) {
    case Kind::grevlex: {
      unsigned da = a.degree();
      unsigned db = b.degree();
      if (da != db) return da <=> db;
      for (std::size_t i = arity_; i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    }
    case Kind::lex:
      for (std::size_t i = 0; i < arity_; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::block:
      for (const auto& blk : blocks_) {
        auto c = compare_block(blk, a, b);
        if (c != 0) return c;
      }
      return std::strong_ordering::equal;
  }
  return std::strong_ordering::equal;
}

std::string TermOrder::describe() const {
  auto base_name = [](BaseOrder b) { return b == BaseOrder::lex ? "lex" : "grevlex"; };
  if (kind_ != Kind::block) return base_name(blocks_.front().base);
  std::string out = "block[";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i != 0) out += " | ";
    out += base_name(blocks_[i].base);
    out += '(';
    for (std::size_t j = 0; j < blocks_[i].vars.size(); ++j) {
      if (j != 0) out += ',';
      out += std::to_string(blocks_[i].vars[j]);
    }
    out += ')';
  }
  return out + "]";
}

std::vector<ExponentVector> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<ExponentVector> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  ExponentVector cur;
  // Recursive fill of lanes 0..n-1 with the last lane taking the remainder.
  auto fill = [&](auto&& self, std::size_t lane, unsigned remaining) -> void {
    if (lane + 1 == n) {
      cur.set(lane, remaining);
      out.push_back(cur);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      cur.set(lane, v);
      self(self, lane + 1, remaining - v);
    }
    cur.set(lane, 0);
  };
  fill(fill, 0, d);
  TermOrder order = TermOrder::grevlex(n);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return order.greater(a, b); });
  return out;
}

}  // namespace monoideal
