#include "monoideal/kernels.hpp"

namespace monoideal::simd {

namespace {

std::ptrdiff_t find_divisor_scalar(const ExponentVector* divisors, std::size_t n, const ExponentVector& m) {
  for (std::size_t i = 0; i < n; ++i) {
    if (divisors[i].divides(m)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::size_t mark_multiples_scalar(const ExponentVector* candidates, std::size_t n, const ExponentVector& d,
                                  std::uint8_t* out) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = d.divides(candidates[i]) ? 1 : 0;
    count += out[i];
  }
  return count;
}

void lcm_each_scalar(const ExponentVector* in, std::size_t n, const ExponentVector& u, ExponentVector* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = lcm(in[i], u);
}

void colon_each_scalar(const ExponentVector* in, std::size_t n, const ExponentVector& u, ExponentVector* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = in[i].colon(u);
}

}  // namespace

namespace detail {
const KernelTable kScalarTable{Isa::scalar, "scalar", find_divisor_scalar, mark_multiples_scalar, lcm_each_scalar,
                               colon_each_scalar};
}  // namespace detail

}  // namespace monoideal::simd
