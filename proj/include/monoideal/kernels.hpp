#pragma once

// Batch kernels over exponent vectors. Each kernel has a scalar reference
// implementation and, on x86-64, an AVX2 implementation that treats one
// ExponentVector as one 16 x u16 register. The active table is chosen once at
// first use from the CPU features; MONOIDEAL_SIMD=scalar|avx2 overrides the
// choice (an unsupported request falls back to scalar).

#include <cstddef>
#include <cstdint>
#include <span>

#include "monoideal/monomial.hpp"

namespace monoideal::simd {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  const char* name;
  /// Index of the first divisors[i] dividing m, or -1.
  std::ptrdiff_t (*find_divisor)(const ExponentVector* divisors, std::size_t n, const ExponentVector& m);
  /// out[i] = (d | candidates[i]); returns the number of marked entries.
  std::size_t (*mark_multiples)(const ExponentVector* candidates, std::size_t n, const ExponentVector& d,
                                std::uint8_t* out);
  /// out[i] = lcm(in[i], u).
  void (*lcm_each)(const ExponentVector* in, std::size_t n, const ExponentVector& u, ExponentVector* out);
  /// out[i] = lcm(in[i], u) / u.
  void (*colon_each)(const ExponentVector* in, std::size_t n, const ExponentVector& u, ExponentVector* out);
};

bool supported(Isa isa) noexcept;
/// Table for a specific ISA, or nullptr when the CPU or build lacks it.
const KernelTable* table(Isa isa) noexcept;
const KernelTable& active() noexcept;

namespace detail {
extern const KernelTable kScalarTable;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable kAvx2Table;
#endif
}  // namespace detail

inline std::ptrdiff_t find_divisor(std::span<const ExponentVector> divisors, const ExponentVector& m) {
  return active().find_divisor(divisors.data(), divisors.size(), m);
}

inline bool any_divides(std::span<const ExponentVector> divisors, const ExponentVector& m) {
  return find_divisor(divisors, m) >= 0;
}

inline std::size_t mark_multiples(std::span<const ExponentVector> candidates, const ExponentVector& d,
                                  std::span<std::uint8_t> out) {
  return active().mark_multiples(candidates.data(), candidates.size(), d, out.data());
}

inline void lcm_each(std::span<const ExponentVector> in, const ExponentVector& u, std::span<ExponentVector> out) {
  active().lcm_each(in.data(), in.size(), u, out.data());
}

inline void colon_each(std::span<const ExponentVector> in, const ExponentVector& u, std::span<ExponentVector> out) {
  active().colon_each(in.data(), in.size(), u, out.data());
}

}  // namespace monoideal::simd
