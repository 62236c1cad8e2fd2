#include <gtest/gtest.h>

#include <random>

#include "monoideal/kernels.hpp"

using namespace monoideal;

namespace {

std::vector<ExponentVector> random_batch(std::mt19937_64& rng, std::size_t count, unsigned max) {
  std::vector<ExponentVector> out(count);
  for (auto& e : out) {
    for (std::size_t i = 0; i < kMaxVars; ++i) e.set(i, static_cast<unsigned>(rng() % (max + 1)));
  }
  return out;
}

// Plain loops, written without the kernel tables.
std::ptrdiff_t naive_find(const std::vector<ExponentVector>& d, const ExponentVector& m) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    bool ok = true;
    for (std::size_t k = 0; k < kMaxVars; ++k) ok = ok && d[i][k] <= m[k];
    if (ok) return static_cast<std::ptrdiff_t>(i);
  }
  return -1;
}

std::vector<const simd::KernelTable*> tables() {
  std::vector<const simd::KernelTable*> out{simd::table(simd::Isa::scalar)};
  if (const auto* t = simd::table(simd::Isa::avx2)) out.push_back(t);
  return out;
}

}  // namespace

TEST(Kernels, ScalarIsAlwaysAvailable) {
  ASSERT_NE(simd::table(simd::Isa::scalar), nullptr);
  EXPECT_TRUE(simd::supported(simd::Isa::scalar));
  EXPECT_EQ(simd::supported(simd::Isa::avx2), simd::table(simd::Isa::avx2) != nullptr);
}

TEST(Kernels, EveryTableMatchesNaiveLoops) {
  std::mt19937_64 rng(5);
  for (const auto* t : tables()) {
    for (int round = 0; round < 200; ++round) {
      // Small exponents make divisibility common; occasional large ones test the full u16 range.
      const unsigned max = round % 10 == 0 ? 65535 : 2;
      const std::size_t count = static_cast<std::size_t>(rng() % 40);
      auto batch = random_batch(rng, count, max);
      const auto probe = random_batch(rng, 1, max + 1)[0];

      EXPECT_EQ(t->find_divisor(batch.data(), batch.size(), probe), naive_find(batch, probe)) << t->name;

      std::vector<std::uint8_t> marks(count);
      std::size_t marked = t->mark_multiples(batch.data(), count, probe, marks.data());
      std::size_t expected = 0;
      for (std::size_t i = 0; i < count; ++i) {
        EXPECT_EQ(marks[i] != 0, probe.divides(batch[i])) << t->name;
        expected += probe.divides(batch[i]) ? 1 : 0;
      }
      EXPECT_EQ(marked, expected);

      std::vector<ExponentVector> out(count);
      t->lcm_each(batch.data(), count, probe, out.data());
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < kMaxVars; ++k) ASSERT_EQ(out[i][k], std::max(batch[i][k], probe[k])) << t->name;
      }
      t->colon_each(batch.data(), count, probe, out.data());
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < kMaxVars; ++k) {
          ASSERT_EQ(out[i][k], batch[i][k] > probe[k] ? batch[i][k] - probe[k] : 0) << t->name;
        }
      }
    }
  }
}

TEST(Kernels, ActiveTableIsOneOfTheAvailable) {
  const auto& active = simd::active();
  EXPECT_TRUE(&active == simd::table(simd::Isa::scalar) || &active == simd::table(simd::Isa::avx2));
}
