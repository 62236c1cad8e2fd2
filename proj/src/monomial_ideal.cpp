#include "monoideal/monomial_ideal.hpp"

#include <algorithm>
#include <map>

#include "monoideal/errors.hpp"
#include "monoideal/kernels.hpp"

namespace monoideal {

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> monomials, std::size_t arity) {
  std::sort(monomials.begin(), monomials.end(),
            [](const ExponentVector& a, const ExponentVector& b) { return a.degree() < b.degree(); });
  std::vector<ExponentVector> kept;
  for (const auto& m : monomials) {
    if (!simd::any_divides(kept, m)) kept.push_back(m);
  }
  const TermOrder order = TermOrder::grevlex(arity);
  std::sort(kept.begin(), kept.end(), [&](const ExponentVector& a, const ExponentVector& b) { return order.greater(a, b); });
  return kept;
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<ExponentVector> generators) : ring_(std::move(ring)) {
  if (!ring_) throw PreconditionError("monomial ideal without a ring");
  for (const auto& g : generators) {
    for (std::size_t i = ring_->arity(); i < kMaxVars; ++i) {
      if (g[i] != 0) throw PreconditionError("monomial uses a variable outside the ring");
    }
  }
  gens_ = minimalize(std::move(generators), ring_->arity());
}

MonomialIdeal MonomialIdeal::maximal_power(RingPtr ring, unsigned d) {
  auto gens = monomials_of_degree(ring->arity(), d);
  return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal MonomialIdeal::pure_powers(RingPtr ring, std::span<const unsigned> b) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < b.size(); ++i) gens.push_back(ExponentVector::variable(i, b[i]));
  return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal MonomialIdeal::from_ideal(const Ideal& ideal) {
  std::vector<ExponentVector> gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw PreconditionError("ideal has a non-monomial generator");
    gens.push_back(g.lead_monomial());
  }
  return MonomialIdeal(ideal.ring_ptr(), std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector& u) const { return simd::any_divides(gens_, u); }

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExponentVector& g) { return contains(g); });
}

Ideal MonomialIdeal::to_ideal() const {
  Arith arith = ring_->arith();
  std::vector<Polynomial> polys;
  for (const auto& g : gens_) polys.push_back(arith.monomial(ring_->field().one(), g));
  Ideal out(ring_, polys);
  out.seed_basis(GroebnerBasis{ring_->default_order(), std::move(polys), gens_});
  return out;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += ring_->format(gens_[i]);
  }
  return out + ")";
}

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring() != b.ring()) throw PreconditionError("monomial ideals live in different rings");
}

void require_artinian(const MonomialIdeal& m) {
  if (!is_artinian(m)) throw PreconditionError("monomial ideal " + m.to_string() + " is not Artinian");
}

}  // namespace

MonomialIdeal m_colon(const MonomialIdeal& m, const ExponentVector& u) {
  std::vector<ExponentVector> out(m.generators().size());
  simd::colon_each(m.generators(), u, out);
  return MonomialIdeal(m.ring_ptr(), std::move(out));
}

MonomialIdeal m_colon_ideal(const MonomialIdeal& m, const MonomialIdeal& n) {
  require_same_ring(m, n);
  MonomialIdeal acc = MonomialIdeal::unit(m.ring_ptr());
  for (const auto& u : n.generators()) acc = m_intersect(acc, m_colon(m, u));
  return acc;
}

MonomialIdeal m_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> out;
  std::vector<ExponentVector> row(b.generators().size());
  for (const auto& g : a.generators()) {
    simd::lcm_each(b.generators(), g, row);
    out.insert(out.end(), row.begin(), row.end());
  }
  return MonomialIdeal(a.ring_ptr(), std::move(out));
}

MonomialIdeal m_radical(const MonomialIdeal& m) {
  std::vector<ExponentVector> out;
  for (const auto& g : m.generators()) out.push_back(g.squarefree());
  return MonomialIdeal(m.ring_ptr(), std::move(out));
}

MonomialIdeal m_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> out = a.generators();
  out.insert(out.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring_ptr(), std::move(out));
}

MonomialIdeal m_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> out;
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) out.push_back(g * h);
  }
  return MonomialIdeal(a.ring_ptr(), std::move(out));
}

bool is_artinian(const MonomialIdeal& m) {
  std::uint32_t seen = 0;
  for (const auto& g : m.generators()) {
    if (g.is_one()) return true;
    const std::uint32_t s = g.support();
    if ((s & (s - 1)) == 0) seen |= s;
  }
  const std::size_t n = m.ring().arity();
  return seen == ((std::uint32_t{1} << n) - 1);
}

unsigned power_gap(const MonomialIdeal& m) {
  require_artinian(m);
  // A monomial of degree s avoids M iff some standard monomial of degree s
  // exists; the largest such degree is at most sum(a_i - 1).
  const std::size_t n = m.ring().arity();
  unsigned bound = 0;
  for (std::size_t i = 0; i < n; ++i) {
    unsigned a = 0;
    for (const auto& g : m.generators()) {
      if (g.support() == (std::uint32_t{1} << i)) a = g[i];
    }
    bound += a - 1;
  }
  if (m.is_unit()) return 0;
  for (unsigned s = bound + 1; s > 0; --s) {
    if (!standard_monomials(m, s - 1).empty()) return s;
  }
  return 0;
}

std::vector<ExponentVector> standard_monomials(const MonomialIdeal& m, unsigned d) {
  std::vector<ExponentVector> out;
  for (const auto& u : monomials_of_degree(m.ring().arity(), d)) {
    if (!m.contains(u)) out.push_back(u);
  }
  return out;
}

std::vector<std::size_t> hilbert_function(const MonomialIdeal& m, unsigned max_degree) {
  std::vector<std::size_t> out;
  for (unsigned d = 0; d <= max_degree; ++d) out.push_back(standard_monomials(m, d).size());
  return out;
}

std::vector<ExponentVector> socle_monomials(const MonomialIdeal& m) {
  const unsigned gap = power_gap(m);
  const std::size_t n = m.ring().arity();
  std::vector<ExponentVector> out;
  for (unsigned d = 0; d < gap; ++d) {
    for (const auto& u : standard_monomials(m, d)) {
      bool socle = true;
      for (std::size_t i = 0; i < n && socle; ++i) socle = m.contains(u * ExponentVector::variable(i));
      if (socle) out.push_back(u);
    }
  }
  const TermOrder order = TermOrder::grevlex(n);
  std::sort(out.begin(), out.end(), [&](const ExponentVector& a, const ExponentVector& b) { return order.greater(a, b); });
  return out;
}

std::vector<ExponentVector> irreducible_decomposition(const MonomialIdeal& m) {
  std::vector<ExponentVector> out;
  const std::size_t n = m.ring().arity();
  for (const auto& u : socle_monomials(m)) {
    ExponentVector b = u;
    for (std::size_t i = 0; i < n; ++i) b.set(i, u[i] + 1U);
    out.push_back(b);
  }
  return out;
}

MonomialIdeal irreducible_component(const RingPtr& ring, const ExponentVector& b) {
  std::vector<unsigned> exps;
  for (std::size_t i = 0; i < ring->arity(); ++i) exps.push_back(b[i]);
  return MonomialIdeal::pure_powers(ring, exps);
}

bool is_pure_power_form(const MonomialIdeal& m) {
  if (m.is_unit()) return false;
  const std::size_t n = m.ring().arity();
  if (m.generators().size() != n) return false;
  std::uint32_t seen = 0;
  for (const auto& g : m.generators()) {
    const std::uint32_t s = g.support();
    if (s == 0 || (s & (s - 1)) != 0) return false;
    seen |= s;
  }
  return seen == ((std::uint32_t{1} << n) - 1);
}

bool is_gorenstein(const MonomialIdeal& m) {
  require_artinian(m);
  if (m.is_unit()) throw PreconditionError("the unit ideal has no socle");
  const bool by_socle = socle_monomials(m).size() == 1;
  const bool by_form = is_pure_power_form(m);
  if (by_socle != by_form) {
    throw DisagreementError("Gorenstein tests disagree on " + m.to_string());
  }
  return by_socle;
}

bool is_primary_monomial(const MonomialIdeal& m) {
  if (m.is_unit()) return false;
  std::uint32_t used = 0;
  std::uint32_t pure = 0;
  for (const auto& g : m.generators()) {
    const std::uint32_t s = g.support();
    used |= s;
    if ((s & (s - 1)) == 0) pure |= s;
  }
  return (used & ~pure) == 0;
}

bool is_prime_monomial(const MonomialIdeal& m) {
  if (m.is_unit()) return false;
  return std::all_of(m.generators().begin(), m.generators().end(),
                     [](const ExponentVector& g) { return g.degree() == 1; });
}

std::vector<WitnessClass> equal_colon_classes(const MonomialIdeal& m, std::optional<unsigned> cap) {
  const unsigned gap = power_gap(m);
  const unsigned top = cap ? *cap : (gap == 0 ? 0 : gap - 1);
  std::vector<WitnessClass> out;
  for (unsigned d = 1; d <= top; ++d) {
    std::vector<WitnessClass> classes;
    for (const auto& u : standard_monomials(m, d)) {
      MonomialIdeal c = m_colon(m, u);
      auto it = std::find_if(classes.begin(), classes.end(), [&](const WitnessClass& w) { return w.colon == c; });
      if (it == classes.end()) {
        classes.push_back(WitnessClass{d, {u}, std::move(c)});
      } else {
        it->members.push_back(u);
      }
    }
    for (auto& w : classes) {
      if (w.members.size() >= 2) out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<std::pair<ExponentVector, ExponentVector>> equal_colon_witnesses(const MonomialIdeal& m,
                                                                             std::optional<unsigned> cap) {
  std::vector<std::pair<ExponentVector, ExponentVector>> out;
  for (const auto& w : equal_colon_classes(m, cap)) {
    for (std::size_t i = 0; i < w.members.size(); ++i) {
      for (std::size_t j = i + 1; j < w.members.size(); ++j) out.emplace_back(w.members[i], w.members[j]);
    }
  }
  return out;
}

SocleMatrix socle_matrix(const MonomialIdeal& m, std::span<const Polynomial> combinations) {
  SocleMatrix out{socle_monomials(m), Matrix(), m.ring().field()};
  out.coeffs = Matrix(out.socle.size(), combinations.size());
  for (std::size_t j = 0; j < combinations.size(); ++j) {
    const Polynomial& f = combinations[j];
    if (f.is_zero()) throw PreconditionError("zero column in the socle matrix");
    for (const auto& t : f.terms()) {
      auto it = std::find(out.socle.begin(), out.socle.end(), t.mono);
      if (it == out.socle.end()) {
        throw PreconditionError("term " + m.ring().format(t.mono) + " is not a socle monomial of " + m.to_string());
      }
      out.coeffs.at(static_cast<std::size_t>(it - out.socle.begin()), j) = t.coeff;
    }
  }
  return out;
}

bool socle_matrix_test(const SocleMatrix& s) {
  const std::size_t r = s.coeffs.rows();
  const std::size_t base = rank(s.coeffs, s.field);
  std::vector<Scalar> e(r, s.field.zero());
  for (std::size_t i = 0; i < r; ++i) {
    e[i] = s.field.one();
    if (rank(s.coeffs.with_column(e), s.field) == base) return false;
    e[i] = s.field.zero();
  }
  return true;
}

bool mono_subideal_criterion(const Ideal& ideal, const MonomialIdeal& m) {
  if (ideal.ring() != m.ring()) throw PreconditionError("ideals live in different rings");
  Arith arith = m.ring().arith();
  const Scalar one = m.ring().field().one();
  for (const auto& g : m.generators()) {
    if (!contains(ideal, arith.monomial(one, g))) {
      throw PreconditionError("generator " + m.ring().format(g) + " of M is not in I");
    }
  }
  for (const auto& u : socle_monomials(m)) {
    if (contains(ideal, arith.monomial(one, u))) return false;
  }
  return true;
}

}  // namespace monoideal
