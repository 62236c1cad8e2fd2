// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "monoideal/kernels.hpp"

namespace monoideal::simd {

namespace {

inline __m256i load(const ExponentVector& e) {
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(e.data()));
}

inline void store(ExponentVector& e, __m256i v) { _mm256_store_si256(reinterpret_cast<__m256i*>(e.data()), v); }

// d | m  <=>  max(d, m) == m in every lane.
inline bool divides(__m256i d, __m256i m) {
  __m256i eq = _mm256_cmpeq_epi16(_mm256_max_epu16(d, m), m);
  return _mm256_movemask_epi8(eq) == -1;
}

std::ptrdiff_t find_divisor_avx2(const ExponentVector* divisors, std::size_t n, const ExponentVector& m) {
  const __m256i mv = load(m);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256i eq0 = _mm256_cmpeq_epi16(_mm256_max_epu16(load(divisors[i]), mv), mv);
    __m256i eq1 = _mm256_cmpeq_epi16(_mm256_max_epu16(load(divisors[i + 1]), mv), mv);
    int m0 = _mm256_movemask_epi8(eq0);
    int m1 = _mm256_movemask_epi8(eq1);
    if (m0 == -1) return static_cast<std::ptrdiff_t>(i);
    if (m1 == -1) return static_cast<std::ptrdiff_t>(i + 1);
  }
  for (; i < n; ++i) {
    if (divides(load(divisors[i]), mv)) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::size_t mark_multiples_avx2(const ExponentVector* candidates, std::size_t n, const ExponentVector& d,
                                std::uint8_t* out) {
  const __m256i dv = load(d);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t hit = divides(dv, load(candidates[i])) ? 1 : 0;
    out[i] = hit;
    count += hit;
  }
  return count;
}

void lcm_each_avx2(const ExponentVector* in, std::size_t n, const ExponentVector& u, ExponentVector* out) {
  const __m256i uv = load(u);
  for (std::size_t i = 0; i < n; ++i) store(out[i], _mm256_max_epu16(load(in[i]), uv));
}

// lcm(g, u) / u == saturating g - u.
void colon_each_avx2(const ExponentVector* in, std::size_t n, const ExponentVector& u, ExponentVector* out) {
  const __m256i uv = load(u);
  for (std::size_t i = 0; i < n; ++i) store(out[i], _mm256_subs_epu16(load(in[i]), uv));
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{Isa::avx2, "avx2", find_divisor_avx2, mark_multiples_avx2, lcm_each_avx2,
                             colon_each_avx2};
}  // namespace detail

}  // namespace monoideal::simd
