#include "monoideal/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "monoideal/errors.hpp"

namespace monoideal {

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_small() && b.is_small()) return a.small() == b.small();
  return a.to_mpq() == b.to_mpq();
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono[var]);
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  unsigned d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

std::uint32_t Polynomial::support() const noexcept {
  std::uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

Polynomial Arith::canonical(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && field_.is_zero(out.back().coeff)) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial Arith::reorder(const Polynomial& f) const {
  std::vector<Term> terms = f.terms_;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  return Polynomial(std::move(terms));
}

Polynomial Arith::constant(const Scalar& c) const { return monomial(c, ExponentVector{}); }

Polynomial Arith::monomial(const Scalar& c, const ExponentVector& m) const {
  if (field_.is_zero(c)) return Polynomial{};
  return Polynomial(std::vector<Term>{Term{c, m}});
}

Polynomial Arith::add(const Polynomial& f, const Polynomial& g) const {
  return combine(field_.one(), f, field_.neg(field_.one()), ExponentVector{}, g);
}

Polynomial Arith::sub(const Polynomial& f, const Polynomial& g) const {
  return sub_mul_term(f, field_.one(), ExponentVector{}, g);
}

Polynomial Arith::neg(const Polynomial& f) const { return scale(f, field_.neg(field_.one())); }

Polynomial Arith::scale(const Polynomial& f, const Scalar& c) const { return mul_term(f, c, ExponentVector{}); }

Polynomial Arith::mul_term(const Polynomial& f, const Scalar& c, const ExponentVector& m) const {
  if (field_.is_zero(c)) return Polynomial{};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms_) out.push_back(Term{field_.mul(t.coeff, c), t.mono * m});
  return Polynomial(std::move(out));
}

Polynomial Arith::sub_mul_term(const Polynomial& f, const Scalar& c, const ExponentVector& m,
                               const Polynomial& g) const {
  return combine(field_.one(), f, c, m, g);
}

Polynomial Arith::combine(const Scalar& a, const Polynomial& f, const Scalar& c, const ExponentVector& m,
                          const Polynomial& g) const {
  std::vector<Term> out;
  combine_into(f.terms_, a, c, m, g.terms_, out);
  return Polynomial(std::move(out));
}

void Arith::combine_into(std::span<const Term> f, const Scalar& a, const Scalar& c, const ExponentVector& m,
                         std::span<const Term> g, std::vector<Term>& out) const {
  const bool scale_f = !field_.is_one(a);
  const Scalar minus_c = field_.neg(c);
  const bool shift = !m.is_one();
  out.clear();
  out.reserve(f.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  ExponentVector gm;
  if (j < g.size()) gm = shift ? g[j].mono * m : g[j].mono;
  while (i < f.size() && j < g.size()) {
    const Term& ft = f[i];
    auto c3 = order_.cmp(ft.mono, gm);
    if (c3 > 0) {
      out.push_back(scale_f ? Term{field_.mul(a, ft.coeff), ft.mono} : ft);
      ++i;
      continue;
    }
    Scalar gc = field_.mul(minus_c, g[j].coeff);
    if (c3 == 0) {
      Scalar s = field_.add(scale_f ? field_.mul(a, ft.coeff) : ft.coeff, gc);
      if (!field_.is_zero(s)) out.push_back(Term{std::move(s), gm});
      ++i;
    } else {
      out.push_back(Term{std::move(gc), gm});
    }
    ++j;
    if (j < g.size()) gm = shift ? g[j].mono * m : g[j].mono;
  }
  for (; i < f.size(); ++i) {
    const Term& ft = f[i];
    out.push_back(scale_f ? Term{field_.mul(a, ft.coeff), ft.mono} : ft);
  }
  for (; j < g.size(); ++j) {
    out.push_back(Term{field_.mul(minus_c, g[j].coeff), shift ? g[j].mono * m : g[j].mono});
  }
}

Polynomial Arith::mul(const Polynomial& f, const Polynomial& g) const {
  if (f.is_zero() || g.is_zero()) return Polynomial{};
  if (f.size() * g.size() <= 64) {
    Polynomial acc;
    const Scalar minus_one = field_.neg(field_.one());
    for (const auto& t : f.terms_) acc = combine(field_.one(), acc, field_.mul(minus_one, t.coeff), t.mono, g);
    return acc;
  }
  std::unordered_map<ExponentVector, Scalar, ExponentVectorHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& s : f.terms_) {
    for (const auto& t : g.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, field_.mul(s.coeff, t.coeff));
      if (!inserted) it->second = field_.add(it->second, field_.mul(s.coeff, t.coeff));
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!field_.is_zero(c)) terms.push_back(Term{std::move(c), m});
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
  return Polynomial(std::move(terms));
}

Polynomial Arith::pow(const Polynomial& f, unsigned k) const {
  Polynomial result = constant(field_.one());
  Polynomial base = f;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    k >>= 1U;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Polynomial Arith::monic(const Polynomial& f) const {
  if (f.is_zero() || field_.is_one(f.lead_coeff())) return f;
  return scale(f, field_.inv(f.lead_coeff()));
}

Polynomial Arith::primitive(const Polynomial& f) const {
  if (f.is_zero()) return f;
  if (!field_.is_rationals()) return monic(f);
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& t : f.terms_) {
    if (!t.coeff.is_small()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.big().get_den_mpz_t());
  }
  for (const auto& t : f.terms_) {
    mpq_class q = t.coeff.to_mpq() * den_lcm;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
  }
  if (field_.sign(f.lead_coeff()) < 0) num_gcd = -num_gcd;
  Scalar factor = field_.from_ratio(den_lcm, num_gcd);
  if (field_.is_one(factor)) return f;
  return scale(f, factor);
}

Polynomial Arith::specialize_to_one(const Polynomial& f, std::uint32_t mask) const {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms_) {
    Term u = t;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if ((mask >> i) & 1U) u.mono.set(i, 0);
    }
    terms.push_back(std::move(u));
  }
  return canonical(std::move(terms));
}

std::optional<Polynomial> Arith::divide_exact(const Polynomial& f, const Polynomial& g) const {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  std::vector<Term> quotient;
  Polynomial rest = f;
  const Scalar lc_inv = field_.inv(g.lead_coeff());
  while (!rest.is_zero()) {
    const Term& lt = rest.lead();
    if (!g.lead_monomial().divides(lt.mono)) return std::nullopt;
    Term q{field_.mul(lt.coeff, lc_inv), lt.mono / g.lead_monomial()};
    rest = sub_mul_term(rest, q.coeff, q.mono, g);
    quotient.push_back(std::move(q));
  }
  return Polynomial(std::move(quotient));
}

Polynomial multi_homogenize(const Polynomial& f, std::size_t n, const Arith& arith) {
  if (arith.order().arity() < 2 * n) throw PreconditionError("ring lacks homogenizing variables");
  if (f.is_zero()) return f;
  std::vector<unsigned> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = f.degree_in(i);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Term u = t;
    for (std::size_t i = 0; i < n; ++i) u.mono.set(n + i, d[i] - t.mono[i]);
    terms.push_back(std::move(u));
  }
  return arith.canonical(std::move(terms));
}

}  // namespace monoideal
