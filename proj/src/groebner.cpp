#include "monoideal/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "monoideal/errors.hpp"
#include "monoideal/kernels.hpp"

namespace monoideal {

namespace {

mpz_class as_integer(const Scalar& s) {
  if (s.is_small()) return mpz_class(static_cast<long>(s.small()));
  return s.big().get_num();
}

// Integer content of a run of QQ terms whose coefficients are integral.
mpz_class integer_content(std::span<const Term> terms, mpz_class acc = 0) {
  for (const auto& t : terms) {
    if (acc == 1) break;
    if (t.coeff.is_small()) {
      std::int64_t v = t.coeff.small();
      if (v != std::numeric_limits<std::int64_t>::min() && acc.fits_slong_p()) {
        acc = static_cast<long>(std::gcd(static_cast<std::int64_t>(acc.get_si()), v < 0 ? -v : v));
        continue;
      }
    }
    mpz_class v = as_integer(t.coeff);
    mpz_gcd(acc.get_mpz_t(), acc.get_mpz_t(), v.get_mpz_t());
  }
  return acc;
}

void divide_terms(std::vector<Term>& terms, const mpz_class& d, const FieldSpec& field) {
  for (auto& t : terms) t.coeff = field.from_mpz(as_integer(t.coeff) / d);
}

// Reduction of polynomials against a fixed list of reducers.
//
// exact mode: reducers are monic and the result is the true remainder.
// fraction-free mode (QQ only): reducers are integral and primitive; the
// result is a primitive integral multiple of the remainder.
class Reducer {
 public:
  Reducer(const Arith& arith, bool fraction_free) : arith_(arith), fraction_free_(fraction_free) {}

  void set(const std::vector<const Polynomial*>& reducers) {
    reducers_ = reducers;
    leads_.clear();
    for (const auto* r : reducers_) leads_.push_back(r->lead_monomial());
  }

  bool top_reducible(const ExponentVector& m) const { return simd::any_divides(leads_, m); }

  /// Full reduction; if skip_lead, the leading term is kept untouched
  /// (tail reduction).
  Polynomial reduce(const Polynomial& f, bool skip_lead = false) const {
    const FieldSpec& field = arith_.field();
    std::vector<Term> work(f.terms().begin(), f.terms().end());
    std::vector<Term> done;
    std::vector<Term> tmp;
    std::size_t pos = 0;
    if (skip_lead && !work.empty()) {
      done.push_back(work[0]);
      pos = 1;
    }
    unsigned steps = 0;
    while (pos < work.size()) {
      const Term& t = work[pos];
      std::ptrdiff_t k = simd::find_divisor(leads_, t.mono);
      if (k < 0) {
        done.push_back(std::move(work[pos]));
        ++pos;
        continue;
      }
      const Polynomial& g = *reducers_[static_cast<std::size_t>(k)];
      ExponentVector m = t.mono / g.lead_monomial();
      std::span<const Term> rest(work.data() + pos, work.size() - pos);
      if (!fraction_free_ || field.is_one(g.lead_coeff())) {
        Scalar c = fraction_free_ ? t.coeff : field.div(t.coeff, g.lead_coeff());
        arith_.combine_into(rest, field.one(), c, m, g.terms(), tmp);
      } else {
        mpz_class lg = as_integer(g.lead_coeff());
        mpz_class lf = as_integer(t.coeff);
        mpz_class d;
        mpz_gcd(d.get_mpz_t(), lg.get_mpz_t(), lf.get_mpz_t());
        if (lg < 0) d = -d;
        Scalar a = field.from_mpz(lg / d);
        Scalar c = field.from_mpz(lf / d);
        arith_.combine_into(rest, a, c, m, g.terms(), tmp);
        if (!field.is_one(a)) {
          for (auto& dt : done) dt.coeff = field.mul(dt.coeff, a);
        }
      }
      work.swap(tmp);
      pos = 0;
      if (fraction_free_ && (++steps % 16U) == 0) {
        mpz_class c = integer_content(work, integer_content(done));
        if (c > 1) {
          divide_terms(work, c, field);
          divide_terms(done, c, field);
        }
      }
    }
    Polynomial out = arith_.from_sorted(std::move(done));
    return fraction_free_ ? arith_.primitive(out) : out;
  }

 private:
  const Arith& arith_;
  bool fraction_free_;
  std::vector<const Polynomial*> reducers_;
  std::vector<ExponentVector> leads_;
};

class BuchbergerRun {
 public:
  explicit BuchbergerRun(const Arith& arith)
      : arith_(arith), field_(arith.field()), reducer_(arith, arith.field().is_rationals()) {}

  void add_generator(const Polynomial& f) {
    Polynomial g = normalize(f);
    if (g.is_zero()) return;
    insert(std::move(g));
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (before(pairs_[k], pairs_[best])) best = k;
      }
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Polynomial h = reducer_.reduce(spoly(p));
      if (!h.is_zero()) insert(normalize(h));
    }
  }

  GroebnerBasis finish() {
    std::vector<std::size_t> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      bool redundant = false;
      for (std::size_t l = 0; l < polys_.size() && !redundant; ++l) {
        if (l == k || !active_[l]) continue;
        if (leads_[l].divides(leads_[k]) && (leads_[l] != leads_[k] || l < k)) redundant = true;
      }
      if (!redundant) minimal.push_back(k);
    }
    std::vector<Polynomial> monic;
    monic.reserve(minimal.size());
    for (std::size_t k : minimal) monic.push_back(arith_.monic(polys_[k]));
    std::vector<const Polynomial*> ptrs;
    for (const auto& p : monic) ptrs.push_back(&p);
    Reducer exact(arith_, false);
    exact.set(ptrs);
    GroebnerBasis gb{arith_.order(), {}, {}};
    for (const auto& p : monic) gb.elements.push_back(exact.reduce(p, true));
    std::sort(gb.elements.begin(), gb.elements.end(), [&](const Polynomial& a, const Polynomial& b) {
      return arith_.order().greater(a.lead_monomial(), b.lead_monomial());
    });
    for (const auto& e : gb.elements) gb.leads.push_back(e.lead_monomial());
    return gb;
  }

 private:
  struct Pair {
    std::uint32_t i;
    std::uint32_t j;
    ExponentVector lcm;
    unsigned degree;
  };

  bool before(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto c = arith_.order().cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::pair(a.j, a.i) < std::pair(b.j, b.i);
  }

  Polynomial normalize(const Polynomial& f) const {
    return field_.is_rationals() ? arith_.primitive(f) : arith_.monic(f);
  }

  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = polys_[p.i];
    const Polynomial& g = polys_[p.j];
    ExponentVector mf = p.lcm / f.lead_monomial();
    ExponentVector mg = p.lcm / g.lead_monomial();
    Scalar a = field_.one();
    Scalar c = field_.one();
    if (field_.is_rationals()) {
      mpz_class lf = as_integer(f.lead_coeff());
      mpz_class lg = as_integer(g.lead_coeff());
      mpz_class d;
      mpz_gcd(d.get_mpz_t(), lf.get_mpz_t(), lg.get_mpz_t());
      a = field_.from_mpz(lg / d);
      c = field_.from_mpz(lf / d);
    }
    return arith_.combine(field_.one(), arith_.mul_term(f, a, mf), c, mg, g);
  }

  // Gebauer-Moeller update with the new element h.
  void insert(Polynomial h) {
    const auto hi = static_cast<std::uint32_t>(polys_.size());
    const ExponentVector lh = h.lead_monomial();
    polys_.push_back(std::move(h));
    leads_.push_back(lh);
    active_.push_back(0);

    struct Candidate {
      std::uint32_t g;
      ExponentVector lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    for (std::uint32_t g = 0; g < hi; ++g) {
      if (active_[g]) c.push_back({g, lcm(leads_[g], lh), leads_[g].coprime(lh)});
    }
    std::vector<Candidate> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Candidate& p = c[k];
      bool keep = p.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) keep = !c[l].lcm.divides(p.lcm);
        for (std::size_t l = 0; l < d.size() && keep; ++l) keep = !d[l].lcm.divides(p.lcm);
      }
      if (keep) d.push_back(p);
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (const Pair& p : pairs_) {
      if (!lh.divides(p.lcm) || lcm(leads_[p.i], lh) == p.lcm || lcm(leads_[p.j], lh) == p.lcm) kept.push_back(p);
    }
    for (const Candidate& p : d) {
      if (!p.coprime) kept.push_back({p.g, hi, p.lcm, p.lcm.degree()});
    }
    pairs_.swap(kept);

    for (std::uint32_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(leads_[g])) active_[g] = 0;
    }
    active_[hi] = 1;

    std::vector<const Polynomial*> reducers;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (active_[g]) reducers.push_back(&polys_[g]);
    }
    // polys_ may reallocate on the next push; reducers are rebuilt each time.
    reducer_.set(reducers);
  }

  const Arith& arith_;
  const FieldSpec& field_;
  Reducer reducer_;
  std::vector<Polynomial> polys_;
  std::vector<ExponentVector> leads_;
  std::vector<char> active_;
  std::vector<Pair> pairs_;
};

std::vector<std::size_t> complement(std::size_t n, std::span<const std::size_t> drop) {
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) keep.push_back(v);
  }
  return keep;
}

std::uint32_t mask_of(std::span<const std::size_t> vars) {
  std::uint32_t m = 0;
  for (std::size_t v : vars) m |= 1U << v;
  return m;
}

Polynomial project(const Polynomial& f, std::span<const std::size_t> keep, const Arith& target) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    ExponentVector e;
    for (std::size_t k = 0; k < keep.size(); ++k) e.set(k, t.mono[keep[k]]);
    terms.push_back(Term{t.coeff, e});
  }
  return target.from_sorted(std::move(terms));
}

// Generators of `ideal` (in ext, possibly with extra variables appended)
// after eliminating `drop`; the result is seeded with its grevlex basis.
Ideal eliminate_into(const RingContext& ext, const std::vector<Polynomial>& gens_grevlex,
                     std::span<const std::size_t> drop, RingPtr target) {
  TermOrder order = TermOrder::elimination(ext.arity(), drop);
  Arith arith = ext.arith(order);
  std::vector<Polynomial> gens;
  gens.reserve(gens_grevlex.size());
  for (const auto& g : gens_grevlex) gens.push_back(arith.reorder(g));
  GroebnerBasis gb = buchberger(gens, arith);
  std::vector<std::size_t> keep = complement(ext.arity(), drop);
  std::uint32_t dropped = mask_of(drop);
  Arith target_arith = target->arith();
  GroebnerBasis restricted{target->default_order(), {}, {}};
  for (const auto& e : gb.elements) {
    if ((e.support() & dropped) != 0) continue;
    restricted.elements.push_back(project(e, keep, target_arith));
    restricted.leads.push_back(restricted.elements.back().lead_monomial());
  }
  Ideal out(std::move(target), restricted.elements);
  out.seed_basis(std::move(restricted));
  return out;
}

void require_same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw PreconditionError("ideals live in different rings");
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> generators, const Arith& arith) {
  BuchbergerRun run(arith);
  for (const auto& g : generators) run.add_generator(g);
  run.run();
  return run.finish();
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  if (!ring_) throw PreconditionError("ideal without a ring");
  Arith arith = ring_->arith();
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    for (const auto& t : g.terms()) {
      for (std::size_t i = ring_->arity(); i < kMaxVars; ++i) {
        if (t.mono[i] != 0) throw PreconditionError("generator uses a variable outside the ring");
      }
    }
    generators_.push_back(arith.reorder(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Arith arith = ring->arith();
  Polynomial one = arith.constant(ring->field().one());
  return Ideal(std::move(ring), {one});
}

std::shared_ptr<const GroebnerBasis> Ideal::groebner(const TermOrder& order) const {
  if (order.arity() != ring_->arity()) throw PreconditionError("term order arity does not match the ring");
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return it->second;
  }
  Arith arith = ring_->arith(order);
  std::vector<Polynomial> gens;
  gens.reserve(generators_.size());
  for (const auto& g : generators_) gens.push_back(arith.reorder(g));
  auto basis = std::make_shared<const GroebnerBasis>(buchberger(gens, arith));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(order, basis);
  return it->second;
}

void Ideal::seed_basis(GroebnerBasis basis) const {
  std::lock_guard lock(cache_->mutex);
  TermOrder order = basis.order;
  cache_->bases.emplace(std::move(order), std::make_shared<const GroebnerBasis>(std::move(basis)));
}

bool Ideal::is_homogeneous() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool Ideal::has_monomial_generators() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::shared_ptr<const GroebnerBasis> reduced_gb(const Ideal& ideal, const TermOrder& order) {
  return ideal.groebner(order);
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const TermOrder& order) {
  auto gb = ideal.groebner(order);
  Arith arith = ideal.ring().arith(order);
  Reducer reducer(arith, false);
  std::vector<const Polynomial*> ptrs;
  for (const auto& e : gb->elements) ptrs.push_back(&e);
  reducer.set(ptrs);
  Polynomial r = reducer.reduce(arith.reorder(f));
  return ideal.ring().arith().reorder(r);
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) {
  return normal_form(f, ideal, ideal.ring().default_order());
}

bool contains(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) return true;
  auto gb = ideal.groebner();
  if (gb->is_unit()) return true;
  if (!simd::any_divides(gb->leads, f.lead_monomial())) return false;
  return normal_form(f, ideal).is_zero();
}

bool contains(const Ideal& ideal, const Ideal& sub) {
  require_same_ring(ideal, sub);
  return std::all_of(sub.generators().begin(), sub.generators().end(),
                     [&](const Polynomial& g) { return contains(ideal, g); });
}

bool equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  return a.groebner()->elements == b.groebner()->elements;
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop) {
  const RingContext& ring = ideal.ring();
  for (std::size_t v : drop) {
    if (v >= ring.arity()) throw PreconditionError("eliminated variable out of range");
  }
  std::vector<std::size_t> keep = complement(ring.arity(), drop);
  if (keep.empty()) throw PreconditionError("cannot eliminate every variable");
  std::vector<std::string> names;
  for (std::size_t v : keep) names.push_back(ring.names()[v]);
  RingPtr target = make_ring(ring.field(), std::move(names));
  return eliminate_into(ring, ideal.generators(), drop, std::move(target));
}

Ideal saturate(const Ideal& ideal, const ExponentVector& m) {
  if (m.is_one() || ideal.is_zero()) return ideal;
  const RingContext& ring = ideal.ring();
  const std::size_t n = ring.arity();
  RingContext ext = ring.extended({"t"});
  Arith arith = ext.arith();
  std::vector<Polynomial> gens = ideal.generators();
  ExponentVector tm = m * ExponentVector::variable(n);
  gens.push_back(arith.canonical({Term{ext.field().one(), tm}, Term{ext.field().neg(ext.field().one()), {}}}));
  const std::size_t drop[] = {n};
  return eliminate_into(ext, gens, drop, ideal.ring_ptr());
}

Ideal saturate_by_iterated_colon(const Ideal& ideal, const ExponentVector& m) {
  Arith arith = ideal.ring().arith();
  Polynomial g = arith.monomial(ideal.ring().field().one(), m);
  Ideal current = ideal;
  for (;;) {
    Ideal next = colon(current, g);
    if (contains(current, next)) return current;
    current = std::move(next);
  }
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  const RingContext& ring = a.ring();
  const std::size_t n = ring.arity();
  RingContext ext = ring.extended({"t"});
  Arith arith = ext.arith();
  const FieldSpec& field = ext.field();
  Polynomial t = arith.variable(n);
  Polynomial one_minus_t = arith.sub(arith.constant(field.one()), t);
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(arith.mul(t, f));
  for (const auto& g : b.generators()) gens.push_back(arith.mul(one_minus_t, g));
  const std::size_t drop[] = {n};
  return eliminate_into(ext, gens, drop, a.ring_ptr());
}

Ideal colon(const Ideal& ideal, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("colon by the zero polynomial");
  if (ideal.is_zero()) return ideal;
  Arith arith = ideal.ring().arith();
  Polynomial gg = arith.reorder(g);
  if (gg.is_constant()) return ideal;
  Ideal meet = intersect(ideal, Ideal(ideal.ring_ptr(), {gg}));
  std::vector<Polynomial> quotients;
  for (const auto& h : meet.generators()) {
    auto q = arith.divide_exact(h, gg);
    if (!q) throw DisagreementError("intersection with (g) produced a non-multiple of g");
    quotients.push_back(std::move(*q));
  }
  return Ideal(ideal.ring_ptr(), std::move(quotients));
}

Ideal colon_ideal(const Ideal& ideal, const Ideal& other) {
  require_same_ring(ideal, other);
  if (other.is_zero()) return Ideal::unit(ideal.ring_ptr());
  std::optional<Ideal> acc;
  for (const auto& f : other.generators()) {
    Ideal q = colon(ideal, f);
    acc = acc ? intersect(*acc, q) : q;
  }
  return *acc;
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a, b);
  Arith arith = a.ring().arith();
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(arith.mul(f, g));
  }
  return Ideal(a.ring_ptr(), std::move(gens));
}

Ideal power(const Ideal& a, unsigned k) {
  Ideal result = Ideal::unit(a.ring_ptr());
  for (unsigned i = 0; i < k; ++i) result = product(result, a);
  return result;
}

std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const Ideal& ideal) {
  const RingContext& ring = ideal.ring();
  Arith arith = ring.arith();
  const FieldSpec& field = ring.field();
  const std::size_t r = ideal.generators().size();

  struct Tracked {
    Polynomial p;
    std::vector<Polynomial> cof;
  };
  auto make_monic = [&](Tracked& t) {
    Scalar inv = field.inv(t.p.lead_coeff());
    t.p = arith.scale(t.p, inv);
    for (auto& c : t.cof) c = arith.scale(c, inv);
  };
  // t -= c * m * g, tracked.
  auto subtract = [&](Tracked& t, const Scalar& c, const ExponentVector& m, const Tracked& g) {
    t.p = arith.sub_mul_term(t.p, c, m, g.p);
    for (std::size_t k = 0; k < r; ++k) t.cof[k] = arith.sub_mul_term(t.cof[k], c, m, g.cof[k]);
  };
  // Top-reduces t by basis, collecting irreducible terms into `rest`.
  auto reduce = [&](Tracked t, const std::vector<Tracked>& basis, Polynomial* rest) {
    std::vector<Term> remainder;
    while (!t.p.is_zero()) {
      const Term lt = t.p.lead();
      auto it = std::find_if(basis.begin(), basis.end(),
                             [&](const Tracked& b) { return b.p.lead_monomial().divides(lt.mono); });
      if (it == basis.end()) {
        if (rest == nullptr) break;
        remainder.push_back(lt);
        t.p = arith.sub(t.p, arith.monomial(lt.coeff, lt.mono));
        continue;
      }
      subtract(t, field.div(lt.coeff, it->p.lead_coeff()), lt.mono / it->p.lead_monomial(), *it);
    }
    if (rest != nullptr) *rest = arith.from_sorted(std::move(remainder));
    return t;
  };

  std::vector<Tracked> basis;
  for (std::size_t i = 0; i < r; ++i) {
    Tracked t{ideal.generators()[i], std::vector<Polynomial>(r)};
    t.cof[i] = arith.constant(field.one());
    make_monic(t);
    basis.push_back(std::move(t));
  }
  std::vector<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);
  }
  while (!queue.empty()) {
    auto [i, j] = queue.back();
    queue.pop_back();
    const ExponentVector& li = basis[i].p.lead_monomial();
    const ExponentVector& lj = basis[j].p.lead_monomial();
    if (li.coprime(lj)) continue;
    ExponentVector l = lcm(li, lj);
    Tracked s{arith.mul_term(basis[i].p, field.one(), l / li), {}};
    for (const auto& c : basis[i].cof) s.cof.push_back(arith.mul_term(c, field.one(), l / li));
    subtract(s, field.one(), l / lj, basis[j]);
    Tracked h = reduce(std::move(s), basis, nullptr);
    if (h.p.is_zero()) continue;
    make_monic(h);
    basis.push_back(std::move(h));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) queue.emplace_back(k, basis.size() - 1);
  }

  Tracked target{arith.reorder(f), std::vector<Polynomial>(r)};
  Polynomial rest;
  Tracked reduced = reduce(std::move(target), basis, &rest);
  if (!rest.is_zero()) return std::nullopt;
  // f - sum(cof_k * g_k) = 0 after reduction, so f = -cof.
  std::vector<Polynomial> out;
  for (auto& c : reduced.cof) out.push_back(arith.neg(c));
  return out;
}

}  // namespace monoideal
