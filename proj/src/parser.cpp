#include "monoideal/parser.hpp"

#include <cctype>

#include "monoideal/errors.hpp"

namespace monoideal {

namespace {

enum class Tok { ident, integer, symbol, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t n = 0; n < k; ++n, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line;
    const std::size_t cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::integer, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    static constexpr std::string_view kSymbols = ";,[]()=+-*^/";
    if (kSymbols.find(c) == std::string_view::npos) {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
    out.push_back({Tok::symbol, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  SourceFile source(std::optional<FieldSpec> field_override) {
    SourceFile out;
    while (peek().kind != Tok::end) {
      const Token& head = peek();
      if (head.kind == Tok::ident && head.text == "ring") {
        if (out.ring) fail("duplicate ring declaration", head);
        out.ring = ring_decl(field_override);
        ring_ = out.ring.get();
      } else if (head.kind == Tok::ident) {
        if (!out.ring) fail("ideal declared before the ring", head);
        Token name = next();
        if (out.ideals.contains(name.text)) fail("duplicate ideal name '" + name.text + "'", name);
        expect("=");
        const Token& kw = peek();
        if (kw.kind != Tok::ident || kw.text != "ideal") fail("expected 'ideal'", kw);
        next();
        expect("(");
        std::vector<Polynomial> gens{expr()};
        while (accept(",")) gens.push_back(expr());
        expect(")");
        out.ideals.emplace(name.text, Ideal(out.ring, std::move(gens)));
        out.names.push_back(name.text);
      } else {
        fail("expected a statement", head);
      }
      expect(";");
    }
    if (!out.ring) fail("missing ring declaration", peek());
    return out;
  }

  void bind(const RingContext& ring) { ring_ = &ring; }

  Polynomial expr() {
    Arith arith = ring_->arith();
    Polynomial acc = term();
    for (;;) {
      if (accept("+")) {
        acc = arith.add(acc, term());
      } else if (accept("-")) {
        acc = arith.sub(acc, term());
      } else {
        return acc;
      }
    }
  }

  bool at_end() const { return peek().kind == Tok::end; }
  bool accept(std::string_view sym) {
    if (peek().kind == Tok::symbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] static void fail(const std::string& what, const Token& at) {
    throw ParseError(what, at.line, at.column);
  }

 private:
  Token next() { return tokens_[pos_++]; }

  void expect(std::string_view sym) {
    if (!accept(sym)) {
      const Token& t = peek();
      fail("expected '" + std::string(sym) + "' but found " + (t.kind == Tok::end ? "end of input" : "'" + t.text + "'"),
           t);
    }
  }

  RingPtr ring_decl(std::optional<FieldSpec> field_override) {
    next();  // "ring"
    const Token& f = peek();
    if (f.kind != Tok::ident || (f.text != "QQ" && f.text != "ZZ")) fail("expected 'QQ' or 'ZZ/p'", f);
    next();
    FieldSpec field = FieldSpec::rationals();
    if (f.text == "ZZ") {
      expect("/");
      const Token p = peek();
      if (p.kind != Tok::integer) fail("expected a prime characteristic", p);
      next();
      mpz_class value(p.text);
      if (value >= (mpz_class(1) << 31)) fail("characteristic " + p.text + " is not below 2^31", p);
      if (!is_prime(value.get_ui())) fail("composite characteristic " + p.text, p);
      field = FieldSpec::prime(value.get_ui());
    }
    if (field_override) field = *field_override;
    expect("[");
    std::vector<std::string> names;
    do {
      const Token v = peek();
      if (v.kind != Tok::ident) fail("expected a variable name", v);
      next();
      for (const auto& n : names) {
        if (n == v.text) fail("duplicate variable '" + v.text + "'", v);
      }
      names.push_back(v.text);
    } while (accept(","));
    const Token& close = peek();
    expect("]");
    try {
      return make_ring(field, std::move(names));
    } catch (const PreconditionError& e) {
      fail(e.what(), close);
    }
  }

  Polynomial term() {
    Arith arith = ring_->arith();
    const FieldSpec& field = ring_->field();
    Polynomial acc = unary();
    for (;;) {
      if (accept("*")) {
        acc = arith.mul(acc, unary());
      } else if (peek().kind == Tok::symbol && peek().text == "/") {
        next();
        const Token& rhs_at = peek();
        Polynomial d = unary();
        if (!d.is_constant()) fail("division by a non-constant", rhs_at);
        if (d.is_zero()) fail("division by zero", rhs_at);
        acc = arith.scale(acc, field.inv(d.lead_coeff()));
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept("-")) return ring_->arith().neg(unary());
    if (accept("+")) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!accept("^")) return base;
    const Token e = peek();
    if (e.kind != Tok::integer) fail("expected a nonnegative integer exponent", e);
    next();
    mpz_class k(e.text);
    if (k > 0xFFFF) fail("exponent too large", e);
    return ring_->arith().pow(base, static_cast<unsigned>(k.get_ui()));
  }

  Polynomial primary() {
    const Token t = peek();
    Arith arith = ring_->arith();
    const FieldSpec& field = ring_->field();
    if (t.kind == Tok::integer) {
      next();
      // A literal a/b must not vanish in the field; "0" itself is allowed.
      Scalar c = field.from_mpz(mpz_class(t.text));
      if (peek().kind == Tok::symbol && peek().text == "/" && tokens_[pos_ + 1].kind == Tok::integer &&
          !(tokens_[pos_ + 2].kind == Tok::symbol && tokens_[pos_ + 2].text == "^")) {
        next();
        const Token den = next();
        try {
          c = field.from_ratio(mpz_class(t.text), mpz_class(den.text));
        } catch (const PreconditionError& err) {
          fail(err.what(), den);
        }
      }
      return arith.constant(c);
    }
    if (t.kind == Tok::ident) {
      next();
      auto idx = ring_->index_of(t.text);
      if (!idx) fail("unknown variable '" + t.text + "'", t);
      return arith.variable(*idx);
    }
    if (accept("(")) {
      Polynomial inner = expr();
      expect(")");
      return inner;
    }
    fail(t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const RingContext* ring_ = nullptr;
};

}  // namespace

const Ideal& SourceFile::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw PreconditionError("no ideal named '" + name + "'");
  return it->second;
}

SourceFile parse_source(std::string_view text, std::optional<FieldSpec> field_override) {
  Parser parser(text);
  return parser.source(field_override);
}

Polynomial parse_polynomial(std::string_view text, const RingContext& ring) {
  Parser parser(text);
  parser.bind(ring);
  Polynomial f = parser.expr();
  if (!parser.at_end()) Parser::fail("unexpected trailing input", parser.peek());
  return f;
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingContext& ring) {
  Parser parser(text);
  parser.bind(ring);
  std::vector<Polynomial> out{parser.expr()};
  while (parser.accept(",")) out.push_back(parser.expr());
  if (!parser.at_end()) Parser::fail("unexpected trailing input", parser.peek());
  return out;
}

}  // namespace monoideal
