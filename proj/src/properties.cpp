#include "monoideal/properties.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>

#include "monoideal/betti.hpp"
#include "monoideal/mono.hpp"
#include "monoideal/monomial_ideal.hpp"
#include "monoideal/random.hpp"

namespace monoideal {

namespace {

using Failure = std::optional<std::string>;

class Suite {
 public:
  void check(const std::string& name, const std::function<Failure()>& body) {
    PropertyOutcome& o = slot(name);
    ++o.checked;
    Failure f;
    try {
      f = body();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    if (f) {
      if (o.failures++ == 0) o.first_failure = *f;
    }
  }

  std::vector<PropertyOutcome> results() const { return outcomes_; }

 private:
  PropertyOutcome& slot(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return outcomes_[it->second];
    index_.emplace(name, outcomes_.size());
    outcomes_.push_back(PropertyOutcome{name, 0, 0, {}});
    return outcomes_.back();
  }

  std::vector<PropertyOutcome> outcomes_;
  std::map<std::string, std::size_t> index_;
};

std::string describe(const Ideal& ideal) {
  std::string out = ideal.ring().field().name() + " (";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += ideal.ring().format(ideal.generators()[i]);
  }
  return out + ")";
}

Polynomial binomial(const RingContext& ring, const ExponentVector& u, const ExponentVector& v) {
  const Scalar one = ring.field().one();
  return ring.arith().canonical({Term{one, u}, Term{one, v}});
}

Ideal add_generator(const MonomialIdeal& m, const Polynomial& f) {
  std::vector<Polynomial> gens = m.to_ideal().generators();
  gens.push_back(f);
  return Ideal(m.ring_ptr(), std::move(gens));
}

Ideal add_generator(const Ideal& ideal, const Polynomial& f) {
  std::vector<Polynomial> gens = ideal.generators();
  gens.push_back(f);
  return Ideal(ideal.ring_ptr(), std::move(gens));
}

FieldSpec pick_field(std::size_t k) {
  static const std::uint64_t kPrimes[] = {2, 3, 5, 32003};
  if (k % 4 != 3) return FieldSpec::rationals();
  return FieldSpec::prime(kPrimes[(k / 4) % 4]);
}

bool betti_nonzero(const BettiTable& t, int i, int j) { return t.at(i, j) != 0; }

void three_way(Suite& s, const Ideal& ideal) {
  s.check("three-way method agreement", [&]() -> Failure {
    const auto gb = mono_via_gb(ideal).mono;
    const auto puv = mono_via_puv(ideal).mono;
    const auto oracle = mono_oracle(ideal).mono;
    if (gb == puv && gb == oracle) return std::nullopt;
    return describe(ideal) + ": gb " + gb.to_string() + ", puv " + puv.to_string() + ", oracle " + oracle.to_string();
  });
}

void containment_properties(Suite& s, std::mt19937_64& rng, const Ideal& ideal, const RandomIdealShape& shape) {
  const MonomialIdeal mono = mono_via_gb(ideal).mono;
  s.check("mono(I) is contained in I", [&]() -> Failure {
    for (const auto& g : mono.generators()) {
      if (!contains(ideal, ideal.ring().arith().monomial(ideal.ring().field().one(), g))) {
        return describe(ideal) + ": " + ideal.ring().format(g) + " not in I";
      }
    }
    return std::nullopt;
  });
  s.check("mono is idempotent", [&]() -> Failure {
    const auto again = mono_via_gb(mono.to_ideal()).mono;
    if (again == mono) return std::nullopt;
    return describe(ideal) + ": mono(mono(I)) = " + again.to_string();
  });
  const Ideal bigger = add_generator(ideal, random_binomial(rng, ideal.ring(), shape));
  s.check("mono preserves inclusions", [&]() -> Failure {
    const auto big = mono_via_gb(bigger).mono;
    if (big.contains(mono)) return std::nullopt;
    return describe(ideal) + " inside " + describe(bigger) + " but mono shrinks";
  });
  s.check("mono commutes with radicals", [&]() -> Failure {
    // I is Artinian, so rad(I) is m, or (1) when I is the unit ideal.
    const auto rad = m_radical(mono);
    const auto expected = mono.is_unit() ? MonomialIdeal::unit(ideal.ring_ptr())
                                         : MonomialIdeal::maximal_power(ideal.ring_ptr(), 1);
    if (rad == expected && mono_via_gb(expected.to_ideal()).mono == expected) return std::nullopt;
    return describe(ideal) + ": rad(mono(I)) = " + rad.to_string();
  });
}

void pair_properties(Suite& s, const Ideal& a, const Ideal& b) {
  const MonomialIdeal ma = mono_via_gb(a).mono;
  const MonomialIdeal mb = mono_via_gb(b).mono;
  s.check("mono commutes with intersections", [&]() -> Failure {
    const auto lhs = mono_via_gb(intersect(a, b)).mono;
    const auto rhs = m_intersect(ma, mb);
    if (lhs == rhs) return std::nullopt;
    return describe(a) + " and " + describe(b) + ": " + lhs.to_string() + " vs " + rhs.to_string();
  });
  s.check("mono of products is sandwiched", [&]() -> Failure {
    const auto mid = mono_via_gb(product(a, b)).mono;
    const auto low = m_product(ma, mb);
    const auto high = m_intersect(ma, mb);
    if (mid.contains(low) && high.contains(mid)) return std::nullopt;
    return describe(a) + " and " + describe(b) + ": mono(IJ) = " + mid.to_string();
  });
}

void betti_properties(Suite& s, const Ideal& ideal) {
  const MonomialIdeal mono = mono_via_gb(ideal).mono;
  const int n = static_cast<int>(ideal.ring().arity());
  const BettiTable ti = graded_betti(ideal);
  const BettiTable tm = graded_betti(mono);
  s.check("Artinian and regularity preserved", [&]() -> Failure {
    const Ideal mi = mono.to_ideal();
    const int top_i = top_degree(ideal);
    const int top_m = top_degree(mi);
    if (is_artinian(mono) && regularity(ti) == regularity(tm) && regularity(ti) == top_i && top_i == top_m) {
      return std::nullopt;
    }
    return describe(ideal) + ": reg " + std::to_string(regularity(ti)) + " vs " + std::to_string(regularity(tm)) +
           ", top degrees " + std::to_string(top_i) + " vs " + std::to_string(top_m);
  });
  s.check("top Betti numbers of mono(I) force those of I", [&]() -> Failure {
    for (const auto& [key, v] : tm.entries()) {
      if (key.first == n && !betti_nonzero(ti, n, key.second)) {
        return describe(ideal) + ": beta_{n," + std::to_string(key.second) + "} vanishes for R/I";
      }
    }
    return std::nullopt;
  });
  s.check("level passes to mono(I)", [&]() -> Failure {
    if (!is_level(ti)) return std::nullopt;
    if (is_level(tm) && socle_degrees(ti).front() == socle_degrees(tm).front()) return std::nullopt;
    return describe(ideal) + ": R/I level but R/mono(I) is not, or socle degree moves";
  });
  s.check("Gorenstein mono forces a pure-power ideal", [&]() -> Failure {
    const bool gorenstein = is_gorenstein(mono);
    const bool complete_intersection = mono.generators().size() == ideal.ring().arity();
    if (gorenstein != complete_intersection) return describe(ideal) + ": Gorenstein and complete intersection differ";
    if (!gorenstein || equal(ideal, mono.to_ideal())) return std::nullopt;
    return describe(ideal) + ": mono(I) = " + mono.to_string() + " is Gorenstein but I differs";
  });
}

void criterion_properties(Suite& s, const Ideal& ideal) {
  const MonomialIdeal mono = mono_via_gb(ideal).mono;
  std::vector<MonomialIdeal> candidates{mono};
  std::vector<ExponentVector> powers;
  for (const auto& g : mono.generators()) {
    const std::uint32_t sup = g.support();
    if ((sup & (sup - 1)) == 0) powers.push_back(g);
  }
  candidates.emplace_back(ideal.ring_ptr(), powers);
  for (std::size_t k = 0; k < mono.generators().size(); ++k) {
    const std::uint32_t sup = mono.generators()[k].support();
    if ((sup & (sup - 1)) == 0) continue;
    auto gens = mono.generators();
    gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
    candidates.emplace_back(ideal.ring_ptr(), gens);
    break;
  }
  const MonomialIdeal maximal = MonomialIdeal::maximal_power(ideal.ring_ptr(), 1);
  for (const auto& m : candidates) {
    s.check("socle-monomial criterion (a)<=>(b)<=>(c)", [&]() -> Failure {
      const bool a = m == mono;
      const bool b = mono_subideal_criterion(ideal, m);
      const bool c = m.contains(m_intersect(m_colon_ideal(m, maximal), mono));
      if (a == b && b == c) return std::nullopt;
      return describe(ideal) + " with M = " + m.to_string() + ": a=" + std::to_string(a) + " b=" + std::to_string(b) +
             " c=" + std::to_string(c);
    });
  }
}

void equal_colon_properties(Suite& s, std::mt19937_64& rng, const MonomialIdeal& m) {
  const unsigned gap = power_gap(m);
  std::vector<ExponentVector> standard;
  for (unsigned d = 1; d < gap; ++d) {
    for (const auto& u : standard_monomials(m, d)) standard.push_back(u);
  }
  if (standard.size() < 2) return;
  std::uniform_int_distribution<std::size_t> pick(0, standard.size() - 1);
  std::vector<std::pair<ExponentVector, ExponentVector>> pairs;
  for (int k = 0; k < 3; ++k) {
    const auto& u1 = standard[pick(rng)];
    const auto& u2 = standard[pick(rng)];
    if (u1 != u2) pairs.emplace_back(u1, u2);
  }
  for (const auto& w : equal_colon_witnesses(m)) {
    pairs.push_back(w);
    break;
  }
  for (const auto& [u1, u2] : pairs) {
    s.check("equal colons <=> binomial adds no monomials", [&]() -> Failure {
      const bool same = m_colon(m, u1) == m_colon(m, u2);
      const auto mono = mono_via_gb(add_generator(m, binomial(m.ring(), u1, u2))).mono;
      if (same == (mono == m)) return std::nullopt;
      return m.to_string() + " with " + m.ring().format(u1) + " + " + m.ring().format(u2) + ": mono " + mono.to_string();
    });
  }
  const auto socle = socle_monomials(m);
  s.check("non-Gorenstein M is mono of a non-monomial ideal", [&]() -> Failure {
    if (is_gorenstein(m)) return std::nullopt;
    const auto mono = mono_via_gb(add_generator(m, binomial(m.ring(), socle[0], socle[1]))).mono;
    if (mono == m) return std::nullopt;
    return m.to_string() + ": socle binomial changes mono to " + mono.to_string();
  });
}

void printed_counterexamples(Suite& s) {
  struct Case {
    std::vector<unsigned> gens;  // flattened (a, b) pairs in k[x, y]
    ExponentVector u1;
    ExponentVector u2;
  };
  const std::vector<Case> cases{
      {{6, 0, 0, 6, 2, 4}, ExponentVector::from({2, 1}), ExponentVector::from({1, 2})},
      {{3, 0, 0, 2}, ExponentVector::from({1, 0}), ExponentVector::from({0, 1})},
  };
  RingPtr ring = make_ring(FieldSpec::rationals(), {"x", "y"});
  for (const auto& c : cases) {
    s.check("binomial lower bound can be strict", [&]() -> Failure {
      std::vector<ExponentVector> gens;
      for (std::size_t k = 0; k < c.gens.size(); k += 2) gens.push_back(ExponentVector::from({c.gens[k], c.gens[k + 1]}));
      MonomialIdeal m(ring, gens);
      const auto mono = mono_via_gb(add_generator(m, binomial(*ring, c.u1, c.u2))).mono;
      std::vector<ExponentVector> bound = m.generators();
      const MonomialIdeal c2 = m_colon(m, c.u2);
      const MonomialIdeal c1 = m_colon(m, c.u1);
      for (const auto& g : c2.generators()) bound.push_back(g * c.u1);
      for (const auto& g : c1.generators()) bound.push_back(g * c.u2);
      MonomialIdeal lower(ring, bound);
      if (mono.contains(lower) && !(mono == lower)) return std::nullopt;
      return m.to_string() + ": mono " + mono.to_string() + " vs lower bound " + lower.to_string();
    });
  }
}

void monomial_vs_groebner(Suite& s, std::mt19937_64& rng, const RingPtr& ring, const RandomIdealShape& shape) {
  const MonomialIdeal a = random_artinian_monomial(rng, ring, shape);
  const MonomialIdeal b = random_artinian_monomial(rng, ring, shape);
  const ExponentVector u = random_monomial(rng, ring->arity(), 2);
  s.check("combinatorial colon and intersection match Groebner", [&]() -> Failure {
    const Ideal ai = a.to_ideal();
    const Polynomial up = ring->arith().monomial(ring->field().one(), u);
    const bool colon_ok = equal(m_colon(a, u).to_ideal(), colon(ai, up));
    const bool cap_ok = equal(m_intersect(a, b).to_ideal(), intersect(ai, b.to_ideal()));
    if (colon_ok && cap_ok) return std::nullopt;
    return a.to_string() + " and " + b.to_string() + (colon_ok ? ": intersection differs" : ": colon differs");
  });
}

}  // namespace

std::vector<PropertyOutcome> run_properties(const PropertyOptions& options) {
  Suite s;
  std::mt19937_64 rng(options.seed);
  RandomIdealShape graded;
  RandomIdealShape affine;
  affine.homogeneous = false;

  for (std::size_t k = 0; k < options.instances; ++k) {
    RingPtr ring = random_ring(rng, pick_field(k), graded);
    const Ideal ideal = random_artinian_ideal(rng, ring, graded);
    three_way(s, ideal);
    containment_properties(s, rng, ideal, graded);
    pair_properties(s, ideal, random_artinian_ideal(rng, ring, graded));
    betti_properties(s, ideal);
    criterion_properties(s, ideal);
    equal_colon_properties(s, rng, random_artinian_monomial(rng, ring, graded));
    monomial_vs_groebner(s, rng, ring, graded);

    RingPtr affine_ring = random_ring(rng, pick_field(k), affine);
    const Ideal affine_ideal = random_artinian_ideal(rng, affine_ring, affine);
    three_way(s, affine_ideal);
    containment_properties(s, rng, affine_ideal, affine);
    criterion_properties(s, affine_ideal);
  }
  printed_counterexamples(s);
  return s.results();
}

}  // namespace monoideal
