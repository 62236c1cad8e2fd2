#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace monoideal {

/// Number of exponent lanes. One ExponentVector is exactly one 256-bit
/// register; auxiliary variables (y_i, t) count against this limit.
inline constexpr std::size_t kMaxVars = 16;

/// Coefficient-free power product x^a. Lanes at or beyond the ring arity are
/// zero.
class alignas(32) ExponentVector {
 public:
  ExponentVector() = default;

  /// Throws PreconditionError if exps has more than kMaxVars entries or an
  /// entry exceeds 65535.
  static ExponentVector from_span(std::span<const unsigned> exps);
  static ExponentVector from(std::initializer_list<unsigned> exps) {
    return from_span(std::span<const unsigned>(exps.begin(), exps.size()));
  }
  static ExponentVector variable(std::size_t index, unsigned power = 1);

  std::uint16_t operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value);
  const std::uint16_t* data() const noexcept { return e_.data(); }
  std::uint16_t* data() noexcept { return e_.data(); }

  unsigned degree() const noexcept {
    unsigned d = 0;
    for (auto v : e_) d += v;
    return d;
  }
  bool is_one() const noexcept {
    for (auto v : e_) {
      if (v != 0) return false;
    }
    return true;
  }
  /// this | other.
  bool divides(const ExponentVector& other) const noexcept {
    bool ok = true;
    for (std::size_t i = 0; i < kMaxVars; ++i) ok &= e_[i] <= other.e_[i];
    return ok;
  }
  bool coprime(const ExponentVector& other) const noexcept {
    bool ok = true;
    for (std::size_t i = 0; i < kMaxVars; ++i) ok &= (e_[i] == 0) | (other.e_[i] == 0);
    return ok;
  }
  /// Bit i set iff x_i appears.
  std::uint32_t support() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) mask |= static_cast<std::uint32_t>(e_[i] != 0) << i;
    return mask;
  }
  /// Product of the variables in the support.
  ExponentVector squarefree() const noexcept;
  /// lcm(this, u) / u, i.e. the generator of (this) : u.
  ExponentVector colon(const ExponentVector& u) const noexcept;

  friend ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) noexcept {
    ExponentVector r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }
  friend ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) noexcept {
    ExponentVector r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
    return r;
  }
  /// Throws std::overflow_error if an exponent exceeds 65535.
  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b);
  /// Exact quotient; throws PreconditionError unless b | a.
  friend ExponentVector operator/(const ExponentVector& a, const ExponentVector& b);

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& e) const noexcept { return e.hash(); }
};

/// "x^2*y" style rendering; "1" for the empty product.
std::string format_monomial(const ExponentVector& e, std::span<const std::string> names);

enum class BaseOrder : std::uint8_t { lex, grevlex };

struct OrderBlock {
  std::vector<std::size_t> vars;
  BaseOrder base = BaseOrder::grevlex;

  friend bool operator==(const OrderBlock&, const OrderBlock&) = default;
  friend auto operator<=>(const OrderBlock&, const OrderBlock&) = default;
};

/// Monomial order on an arity-n ring. Block orders compare the restriction
/// to the first block, then the second, and so on, so every monomial that
/// involves a variable of an earlier block beats every monomial supported on
/// later blocks only.
class TermOrder {
 public:
  enum class Kind : std::uint8_t { lex, grevlex, block };

  static TermOrder lex(std::size_t arity);
  static TermOrder grevlex(std::size_t arity);
  /// Blocks must partition {0..arity-1}; throws PreconditionError otherwise.
  static TermOrder block(std::size_t arity, std::vector<OrderBlock> blocks);
  /// [eliminated vars, grevlex | remaining vars, grevlex].
  static TermOrder elimination(std::size_t arity, std::span<const std::size_t> eliminated);

  Kind kind() const noexcept { return kind_; }
  std::size_t arity() const noexcept { return arity_; }
  const std::vector<OrderBlock>& blocks() const noexcept { return blocks_; }

  /// Checked comparison; throws PreconditionError if either argument uses a
  /// variable beyond arity().
  std::strong_ordering compare(const ExponentVector& a, const ExponentVector& b) const;
  /// Unchecked comparison for hot loops.
  std::strong_ordering cmp(const ExponentVector& a, const ExponentVector& b) const noexcept;
  bool greater(const ExponentVector& a, const ExponentVector& b) const noexcept { return cmp(a, b) > 0; }

  std::string describe() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;
  friend auto operator<=>(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(Kind kind, std::size_t arity, std::vector<OrderBlock> blocks)
      : kind_(kind), arity_(arity), blocks_(std::move(blocks)) {}

  Kind kind_;
  std::size_t arity_;
  std::vector<OrderBlock> blocks_;
};

/// All exponent vectors of total degree d in the first n variables, in
/// grevlex-descending order.
std::vector<ExponentVector> monomials_of_degree(std::size_t n, unsigned d);

}  // namespace monoideal
