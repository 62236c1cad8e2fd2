#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "monoideal/betti.hpp"
#include "monoideal/errors.hpp"
#include "monoideal/mono.hpp"
#include "monoideal/parser.hpp"
#include "monoideal/properties.hpp"

namespace monoideal::cli {

namespace {

struct Options {
  std::string input;
  std::string ideal = "I";
  std::string field;
  std::string format = "text";
  std::string method = "gb";
  std::vector<std::string> beta;
  std::vector<std::uint64_t> primes{2, 3, 5};
  bool char0 = false;
  bool certify = false;
  unsigned max_degree = 0;
  unsigned ceiling = 0;
  std::uint64_t seed = 0;
  std::size_t instances = 50;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::optional<FieldSpec> parse_field(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text == "QQ") return FieldSpec::rationals();
  std::string digits = text.rfind("ZZ/", 0) == 0 ? text.substr(3) : text;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
    throw PreconditionError("unknown field '" + text + "' (use QQ or ZZ/p)");
  }
  return FieldSpec::prime(std::stoull(digits));
}

bool records(const Options& o) { return o.format == "records"; }

void print_generators(std::ostream& out, const MonomialIdeal& m) {
  if (m.is_zero()) out << "0\n";
  for (const auto& g : m.generators()) out << m.ring().format(g) << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_degrees(const std::vector<int>& d) {
  if (d.empty()) return "none";
  std::string out;
  for (std::size_t k = 0; k < d.size(); ++k) out += (k ? " " : "") + std::to_string(d[k]);
  return out;
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int mono() {
    SourceFile file = load();
    const Ideal& ideal = file.ideal(o_.ideal);
    std::vector<MonoResult> results;
    if (o_.method == "all") {
      results.push_back(mono_via_gb(ideal, o_.certify));
      results.push_back(mono_via_puv(ideal, beta(ideal.ring())));
      results.push_back(mono_oracle(ideal, ceiling()));
      for (const auto& r : results) {
        if (!(r.mono == results.front().mono)) {
          throw DisagreementError("methods disagree: gb " + results.front().mono.to_string() + ", " +
                                  std::string(to_string(r.method)) + " " + r.mono.to_string());
        }
      }
    } else {
      auto method = parse_method(o_.method);
      if (!method) throw PreconditionError("unknown method '" + o_.method + "'");
      switch (*method) {
        case MonoMethod::gb:
          results.push_back(mono_via_gb(ideal, o_.certify));
          break;
        case MonoMethod::puv:
          results.push_back(mono_via_puv(ideal, beta(ideal.ring()), o_.certify));
          break;
        case MonoMethod::oracle:
          results.push_back(mono_oracle(ideal, ceiling(), o_.certify));
          break;
      }
    }
    const MonoResult& r = results.front();
    if (records(o_)) {
      print_generators(out_, r.mono);
      return ok;
    }
    std::string methods;
    for (const auto& x : results) methods += (methods.empty() ? "" : "=") + std::string(to_string(x.method));
    out_ << "method: " << methods << "\n";
    out_ << "field: " << r.field.name() << "\n";
    out_ << "mono(" << o_.ideal << ") = " << r.mono.to_string() << "\n";
    if (r.certificate) {
      const RingContext& ring = ideal.ring();
      for (const auto& c : *r.certificate) {
        out_ << ring.format(c.monomial) << " =";
        bool first = true;
        for (std::size_t i = 0; i < c.cofactors.size(); ++i) {
          if (c.cofactors[i].is_zero()) continue;
          out_ << (first ? " " : " + ") << "(" << ring.format(c.cofactors[i]) << ")*("
               << ring.format(ideal.generators()[i]) << ")";
          first = false;
        }
        out_ << "\n";
      }
    }
    return ok;
  }

  int upper() {
    SourceFile file = load();
    MonomialIdeal m = mono_upper(file.ideal(o_.ideal));
    if (records(o_)) {
      print_generators(out_, m);
    } else {
      out_ << "Mono(" << o_.ideal << ") = " << m.to_string() << "\n";
    }
    return ok;
  }

  int betti() {
    SourceFile file = load();
    BettiTable t = graded_betti(file.ideal(o_.ideal), max_degree());
    out_ << (records(o_) ? format_records(t) : format_table(t));
    return ok;
  }

  int compare() {
    SourceFile file = load();
    const Ideal& ideal = file.ideal(o_.ideal);
    MonomialIdeal m = mono_via_gb(ideal).mono;
    BettiTable ti = graded_betti(ideal, max_degree());
    BettiTable tm = graded_betti(m, max_degree());
    const int n = static_cast<int>(ideal.ring().arity());
    bool top_ok = true;
    for (const auto& [key, v] : tm.entries()) {
      if (key.first == n && ti.at(n, key.second) == 0) top_ok = false;
    }
    const bool reg_equal = regularity(ti) == regularity(tm);
    if (records(o_)) {
      for (const auto& g : m.generators()) out_ << "mono " << m.ring().format(g) << "\n";
      for (const auto& [key, v] : ti.entries()) out_ << "betti I " << key.first << " " << key.second << " " << v << "\n";
      for (const auto& [key, v] : tm.entries()) out_ << "betti mono " << key.first << " " << key.second << " " << v << "\n";
      out_ << "regularity I " << regularity(ti) << "\nregularity mono " << regularity(tm) << "\n";
      out_ << "level I " << yes_no(is_level(ti)) << "\nlevel mono " << yes_no(is_level(tm)) << "\n";
      out_ << "regularity-equal " << yes_no(reg_equal) << "\ntop-betti-implication " << yes_no(top_ok) << "\n";
      return ok;
    }
    const std::string a = "R/" + o_.ideal;
    const std::string b = "R/mono(" + o_.ideal + ")";
    out_ << "mono(" << o_.ideal << ") = " << m.to_string() << "\n\n";
    out_ << a << ":\n" << format_table(ti) << "\n" << b << ":\n" << format_table(tm) << "\n";
    out_ << "regularity: " << a << " " << regularity(ti) << ", " << b << " " << regularity(tm) << "\n";
    out_ << "level: " << a << " " << yes_no(is_level(ti)) << ", " << b << " " << yes_no(is_level(tm)) << "\n";
    out_ << "socle degrees: " << a << " " << join_degrees(socle_degrees(ti)) << "; " << b << " "
         << join_degrees(socle_degrees(tm)) << "\n";
    out_ << "regularity equal: " << yes_no(reg_equal) << "\n";
    out_ << "top-Betti implication holds: " << yes_no(top_ok) << "\n";
    return ok;
  }

  int witness() {
    SourceFile file = load();
    MonomialIdeal m = MonomialIdeal::from_ideal(file.ideal(o_.ideal));
    if (!is_artinian(m)) throw PreconditionError(o_.ideal + " is not Artinian");
    const auto classes = equal_colon_classes(m);
    const bool gorenstein = is_gorenstein(m);
    const RingContext& ring = m.ring();

    // Examples of preimages, each checked with the saturation method.
    std::optional<Polynomial> graded;
    if (!classes.empty()) graded = binomial(ring, classes.front().members[0], classes.front().members[1]);
    std::optional<Polynomial> any;
    if (!gorenstein) {
      const auto socle = socle_monomials(m);
      any = binomial(ring, socle[0], socle[1]);
    }
    for (const auto& f : {graded, any}) {
      if (f && !(mono_via_gb(with(m, *f)).mono == m)) {
        throw DisagreementError("mono(M + (" + ring.format(*f) + ")) differs from M");
      }
    }

    if (records(o_)) {
      for (const auto& w : classes) {
        out_ << "class " << w.degree;
        for (const auto& u : w.members) out_ << " " << ring.format(u);
        out_ << "\n";
      }
      out_ << "gorenstein " << yes_no(gorenstein) << "\n";
      out_ << "graded-preimage " << (graded ? ring.format(*graded) : "none") << "\n";
      out_ << "preimage " << (any ? ring.format(*any) : "none") << "\n";
      return ok;
    }
    out_ << "M = " << m.to_string() << "\n";
    if (classes.empty()) {
      out_ << "no witnesses\n";
    } else {
      out_ << "witness classes:\n";
      for (const auto& w : classes) {
        out_ << "  degree " << w.degree << ":";
        for (std::size_t k = 0; k < w.members.size(); ++k) out_ << (k ? ", " : " ") << ring.format(w.members[k]);
        out_ << "  (colon " << w.colon.to_string() << ")\n";
      }
    }
    out_ << (gorenstein ? "Gorenstein\n" : "not Gorenstein\n");
    if (graded) {
      out_ << "graded non-monomial preimage: M + (" << ring.format(*graded) << ")\n";
    } else {
      out_ << "no graded non-monomial preimage exists\n";
    }
    if (any) {
      out_ << "non-monomial preimage: M + (" << ring.format(*any) << ")\n";
    } else {
      out_ << "no non-monomial preimage exists\n";
    }
    return ok;
  }

  int charscan() {
    const std::string text = read_file(o_.input);
    CharScanReport report = char_scan(text, o_.ideal, o_.primes, o_.char0);
    if (records(o_)) {
      for (const auto& e : report.entries) {
        for (const auto& g : e.result.mono.generators()) {
          out_ << e.field.name() << " " << e.result.mono.ring().format(g) << "\n";
        }
      }
      for (const auto& d : report.differences) out_ << "diff " << format_monomial(d.monomial, report.names) << " " << d.mark << "\n";
      return ok;
    }
    std::size_t width = 0;
    for (const auto& e : report.entries) width = std::max(width, e.field.name().size());
    for (const auto& e : report.entries) {
      const std::string name = e.field.name();
      out_ << name << ":" << std::string(width - name.size() + 1, ' ') << e.result.mono.to_string() << "\n";
    }
    if (report.differences.empty()) {
      out_ << "differences: none\n";
      return ok;
    }
    out_ << "differences (G minimal generator, + member, . absent):\n";
    for (const auto& d : report.differences) {
      out_ << "  " << format_monomial(d.monomial, report.names) << ":";
      for (std::size_t k = 0; k < report.entries.size(); ++k) {
        out_ << " " << report.entries[k].field.name() << " " << d.mark[k];
      }
      out_ << "\n";
    }
    return ok;
  }

  int oracle() {
    SourceFile file = load();
    MonoResult r = mono_oracle(file.ideal(o_.ideal), ceiling(), o_.certify);
    if (records(o_)) {
      print_generators(out_, r.mono);
    } else {
      out_ << "method: oracle\nfield: " << r.field.name() << "\nmono(" << o_.ideal << ") = " << r.mono.to_string()
           << "\n";
    }
    return ok;
  }

  int selftest() {
    const auto outcomes = run_properties({o_.seed, o_.instances});
    bool all = true;
    for (const auto& p : outcomes) {
      all = all && p.ok();
      out_ << (p.ok() ? "PASS " : "FAIL ") << p.name << " (" << p.checked << " checks";
      if (p.failures > 0) out_ << ", " << p.failures << " failures; first: " << p.first_failure;
      out_ << ")\n";
    }
    return all ? ok : disagreement;
  }

 private:
  SourceFile load() const { return parse_source(read_file(o_.input), parse_field(o_.field)); }

  std::optional<unsigned> ceiling() const { return o_.ceiling > 0 ? std::optional<unsigned>(o_.ceiling) : std::nullopt; }
  std::optional<unsigned> max_degree() const {
    return o_.max_degree > 0 ? std::optional<unsigned>(o_.max_degree) : std::nullopt;
  }

  std::optional<std::vector<ExponentVector>> beta(const RingContext& ring) const {
    if (o_.beta.empty()) return std::nullopt;
    std::vector<ExponentVector> out;
    for (const auto& text : o_.beta) {
      Polynomial p = parse_polynomial(text, ring);
      if (!p.is_monomial()) throw PreconditionError("beta entry '" + text + "' is not a monomial");
      out.push_back(p.lead_monomial());
    }
    return out;
  }

  static Polynomial binomial(const RingContext& ring, const ExponentVector& u, const ExponentVector& v) {
    const Scalar one = ring.field().one();
    return ring.arith().canonical({Term{one, u}, Term{one, v}});
  }

  static Ideal with(const MonomialIdeal& m, const Polynomial& f) {
    std::vector<Polynomial> gens = m.to_ideal().generators();
    gens.push_back(f);
    return Ideal(m.ring_ptr(), std::move(gens));
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Monomial subideals, Betti tables and related checks for polynomial ideals", "monoideal"};
  app.require_subcommand(1);

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--in", o.input, "ideal file")->required();
    sub->add_option("--ideal", o.ideal, "ideal name in the file")->capture_default_str();
  };
  auto add_common = [&](CLI::App* sub) {
    add_input(sub);
    sub->add_option("--field", o.field, "override the field: QQ or ZZ/p");
    sub->add_option("--format", o.format, "text or records")->check(CLI::IsMember({"text", "records"}))->capture_default_str();
  };

  CLI::App* mono = app.add_subcommand("mono", "largest monomial subideal mono(I)");
  add_common(mono);
  mono->add_option("--method", o.method, "gb, puv, oracle or all")
      ->check(CLI::IsMember({"gb", "puv", "oracle", "all"}))
      ->capture_default_str();
  mono->add_option("--beta", o.beta, "monomials for the puv method")->delimiter(',');
  mono->add_option("--ceiling", o.ceiling, "oracle degree ceiling");
  mono->add_flag("--certify", o.certify, "print cofactor certificates");

  CLI::App* upper = app.add_subcommand("upper", "smallest monomial ideal Mono(I) containing I");
  add_common(upper);

  CLI::App* betti = app.add_subcommand("betti", "graded Betti table of R/I");
  add_common(betti);
  betti->add_option("--max-degree", o.max_degree, "largest internal degree (required if R/I is not Artinian)");

  CLI::App* compare = app.add_subcommand("compare", "Betti tables of R/I and R/mono(I) side by side");
  add_common(compare);
  compare->add_option("--max-degree", o.max_degree, "largest internal degree");

  CLI::App* witness = app.add_subcommand("witness", "equal-colon witnesses and Gorenstein test for a monomial ideal");
  add_common(witness);

  CLI::App* charscan = app.add_subcommand("charscan", "mono(I) across characteristics");
  add_input(charscan);
  charscan->add_option("--format", o.format, "text or records")->check(CLI::IsMember({"text", "records"}));
  charscan->add_option("--primes", o.primes, "comma-separated primes")->delimiter(',')->capture_default_str();
  charscan->add_flag("--char0", o.char0, "include QQ");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force mono(I) for Artinian I");
  add_common(oracle);
  oracle->add_option("--ceiling", o.ceiling, "degree ceiling (default MONO_DEGREE_CEILING or 30)");
  oracle->add_flag("--certify", o.certify, "attach cofactor certificates");

  CLI::App* selftest = app.add_subcommand("selftest", "");
  selftest->group("");
  selftest->add_option("--seed", o.seed, "random seed")->required();
  selftest->add_option("--instances", o.instances, "random instances per family");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  }

  Session session(o, out);
  try {
    if (*mono) return session.mono();
    if (*upper) return session.upper();
    if (*betti) return session.betti();
    if (*compare) return session.compare();
    if (*witness) return session.witness();
    if (*charscan) return session.charscan();
    if (*oracle) return session.oracle();
    if (*selftest) return session.selftest();
  } catch (const ParseError& e) {
    err << o.input << ":" << e.what() << "\n";
    return parse_error;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return precondition;
  } catch (const DisagreementError& e) {
    err << "internal disagreement: " << e.what() << "\n";
    return disagreement;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return disagreement;
  }
  return parse_error;
}

}  // namespace monoideal::cli
