#include "monoideal/mono.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <string>

#include "monoideal/errors.hpp"
#include "monoideal/parser.hpp"

namespace monoideal {

std::string_view to_string(MonoMethod method) {
  switch (method) {
    case MonoMethod::gb:
      return "gb";
    case MonoMethod::puv:
      return "puv";
    case MonoMethod::oracle:
      return "oracle";
  }
  return "?";
}

std::optional<MonoMethod> parse_method(std::string_view text) {
  if (text == "gb") return MonoMethod::gb;
  if (text == "puv") return MonoMethod::puv;
  if (text == "oracle") return MonoMethod::oracle;
  return std::nullopt;
}

unsigned default_degree_ceiling() {
  if (const char* env = std::getenv("MONO_DEGREE_CEILING")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 0xFFFF) return static_cast<unsigned>(v);
  }
  return 30;
}

namespace {

Polynomial monomial_poly(const RingContext& ring, const ExponentVector& u) {
  return ring.arith().monomial(ring.field().one(), u);
}

bool member(const Ideal& ideal, const ExponentVector& u) { return contains(ideal, monomial_poly(ideal.ring(), u)); }

MonoResult finish(const Ideal& ideal, MonomialIdeal mono, MonoMethod method, bool certify) {
  MonoResult out{std::move(mono), method, ideal.ring().field(), std::nullopt};
  for (const auto& g : out.mono.generators()) {
    if (!member(ideal, g)) {
      throw DisagreementError(std::string(to_string(method)) + " produced " + ideal.ring().format(g) +
                              ", which is not in the ideal");
    }
  }
  if (certify) {
    std::vector<Certificate> certs;
    for (const auto& g : out.mono.generators()) {
      auto cof = lift(monomial_poly(ideal.ring(), g), ideal);
      if (!cof) throw DisagreementError("no cofactors for " + ideal.ring().format(g));
      certs.push_back(Certificate{g, std::move(*cof)});
    }
    out.certificate = std::move(certs);
  }
  return out;
}

}  // namespace

MonoResult mono_via_gb(const Ideal& ideal, bool certify) {
  const RingContext& ring = ideal.ring();
  const std::size_t n = ring.arity();
  if (2 * n + 1 > kMaxVars) {
    throw PreconditionError("the saturation method supports at most " + std::to_string((kMaxVars - 1) / 2) +
                            " variables");
  }
  if (ideal.is_zero()) return finish(ideal, MonomialIdeal::zero(ideal.ring_ptr()), MonoMethod::gb, certify);

  std::vector<std::string> extra;
  for (std::size_t i = 0; i < n; ++i) extra.push_back("y" + std::to_string(i + 1));
  extra.emplace_back("t");
  RingContext ext = ring.extended(extra);
  const FieldSpec& field = ext.field();

  // Saturating with t*y_1...y_n - 1 under [t | y | x] leaves, after dropping
  // the t-elements, the reduced basis of the saturation under [y | x].
  std::vector<std::size_t> xs(n);
  std::vector<std::size_t> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = i;
    ys[i] = n + i;
  }
  const std::size_t t = 2 * n;
  TermOrder order = TermOrder::block(ext.arity(), {OrderBlock{{t}, BaseOrder::grevlex},
                                                   OrderBlock{ys, BaseOrder::grevlex},
                                                   OrderBlock{xs, BaseOrder::grevlex}});
  Arith arith = ext.arith(order);
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(multi_homogenize(f, n, arith));
  ExponentVector ty = ExponentVector::variable(t);
  for (std::size_t y : ys) ty = ty * ExponentVector::variable(y);
  gens.push_back(arith.canonical({Term{field.one(), ty}, Term{field.neg(field.one()), {}}}));

  GroebnerBasis gb = buchberger(gens, arith);
  std::uint32_t y_mask = 0;
  for (std::size_t y : ys) y_mask |= std::uint32_t{1} << y;
  std::vector<ExponentVector> monomials;
  for (const auto& e : gb.elements) {
    if (!e.is_monomial() || e.degree_in(t) != 0) continue;
    monomials.push_back(arith.specialize_to_one(e, y_mask).lead_monomial());
  }
  return finish(ideal, MonomialIdeal(ideal.ring_ptr(), std::move(monomials)), MonoMethod::gb, certify);
}

MonomialIdeal mono_upper(const Ideal& ideal) {
  std::vector<ExponentVector> terms;
  for (const auto& g : ideal.generators()) {
    for (const auto& t : g.terms()) terms.push_back(t.mono);
  }
  return MonomialIdeal(ideal.ring_ptr(), std::move(terms));
}

std::vector<ExponentVector> select_pure_power_beta(const Ideal& ideal, std::optional<unsigned> ceiling) {
  const unsigned cap = ceiling ? *ceiling : default_degree_ceiling();
  std::vector<ExponentVector> beta;
  for (std::size_t i = 0; i < ideal.ring().arity(); ++i) {
    auto in = [&](unsigned a) { return member(ideal, ExponentVector::variable(i, a)); };
    unsigned hi = 1;
    while (hi < cap && !in(hi)) hi = std::min(cap, 2 * hi);
    if (!in(hi)) {
      throw PreconditionError("no power of " + ideal.ring().names()[i] + " up to degree " + std::to_string(cap) +
                              " lies in the ideal");
    }
    unsigned lo = hi / 2;  // lo == 0 or x^lo not in I
    while (hi - lo > 1) {
      const unsigned mid = lo + (hi - lo) / 2;
      (in(mid) ? hi : lo) = mid;
    }
    beta.push_back(ExponentVector::variable(i, hi));
  }
  return beta;
}

MonoResult mono_via_puv(const Ideal& ideal, std::optional<std::vector<ExponentVector>> beta, bool certify) {
  const RingContext& ring = ideal.ring();
  if (contains(ideal, ring.arith().constant(ring.field().one()))) {
    return finish(ideal, MonomialIdeal::unit(ideal.ring_ptr()), MonoMethod::puv, certify);
  }
  std::vector<ExponentVector> b = beta ? std::move(*beta) : select_pure_power_beta(ideal);
  if (b.empty()) throw PreconditionError("beta must be nonempty");
  std::uint32_t seen = 0;
  for (const auto& u : b) {
    if (u.is_one()) throw PreconditionError("beta contains the unit monomial");
    if ((u.support() & seen) != 0) throw PreconditionError("beta monomials must have pairwise disjoint supports");
    seen |= u.support();
    if (!member(ideal, u)) throw PreconditionError("beta monomial " + ring.format(u) + " is not in the ideal");
  }
  MonomialIdeal bm(ideal.ring_ptr(), b);
  Ideal bi = bm.to_ideal();

  // (beta) : I, skipping generators already in (beta), whose colon is (1).
  std::optional<Ideal> quotient;
  for (const auto& f : ideal.generators()) {
    if (contains(bi, f)) continue;
    Ideal q = colon(bi, f);
    quotient = quotient ? intersect(*quotient, q) : q;
  }
  MonomialIdeal upper = quotient ? mono_upper(*quotient) : MonomialIdeal::unit(ideal.ring_ptr());
  return finish(ideal, m_colon_ideal(bm, upper), MonoMethod::puv, certify);
}

MonoResult mono_oracle(const Ideal& ideal, std::optional<unsigned> ceiling, bool certify) {
  const unsigned cap = ceiling ? *ceiling : default_degree_ceiling();
  const std::size_t n = ideal.ring().arity();
  std::optional<unsigned> gap;
  for (unsigned s = 0; s <= cap && !gap; ++s) {
    auto degree_s = monomials_of_degree(n, s);
    if (std::all_of(degree_s.begin(), degree_s.end(), [&](const ExponentVector& u) { return member(ideal, u); })) {
      gap = s;
    }
  }
  if (!gap) throw PreconditionError("ideal is not Artinian within degree " + std::to_string(cap));
  std::vector<ExponentVector> found;
  for (unsigned d = 0; d < *gap; ++d) {
    for (const auto& u : monomials_of_degree(n, d)) {
      bool covered = false;
      for (const auto& g : found) covered = covered || g.divides(u);
      if (!covered && member(ideal, u)) found.push_back(u);
    }
  }
  auto top = monomials_of_degree(n, *gap);
  found.insert(found.end(), top.begin(), top.end());
  return finish(ideal, MonomialIdeal(ideal.ring_ptr(), std::move(found)), MonoMethod::oracle, certify);
}

CharScanReport char_scan(std::string_view source, const std::string& ideal_name,
                         std::span<const std::uint64_t> primes, bool include_char_zero) {
  std::vector<FieldSpec> fields;
  if (include_char_zero) fields.push_back(FieldSpec::rationals());
  for (std::uint64_t p : primes) fields.push_back(FieldSpec::prime(p));
  if (fields.empty()) throw PreconditionError("no field requested");

  std::vector<std::future<MonoResult>> jobs;
  for (const auto& f : fields) {
    jobs.push_back(std::async(std::launch::async, [source, ideal_name, f] {
      SourceFile file = parse_source(source, f);
      return mono_via_gb(file.ideal(ideal_name));
    }));
  }
  CharScanReport report;
  for (std::size_t k = 0; k < fields.size(); ++k) report.entries.push_back({fields[k], jobs[k].get()});
  report.names = report.entries.front().result.mono.ring().names();

  const std::size_t n = report.names.size();
  const TermOrder order = TermOrder::grevlex(n);
  auto desc = [&](const ExponentVector& a, const ExponentVector& b) { return order.greater(a, b); };
  std::set<ExponentVector, decltype(desc)> all(desc);
  for (const auto& e : report.entries) all.insert(e.result.mono.generators().begin(), e.result.mono.generators().end());
  for (const auto& u : all) {
    std::string mark;
    for (const auto& e : report.entries) {
      const auto& gens = e.result.mono.generators();
      mark += std::find(gens.begin(), gens.end(), u) != gens.end() ? 'G' : (e.result.mono.contains(u) ? '+' : '.');
    }
    if (mark.find_first_not_of('G') != std::string::npos) report.differences.push_back({u, mark});
  }
  return report;
}

}  // namespace monoideal
