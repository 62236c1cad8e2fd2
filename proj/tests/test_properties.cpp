#include <gtest/gtest.h>

#include "monoideal/properties.hpp"

using namespace monoideal;

TEST(Properties, SeededSuitePasses) {
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    const auto outcomes = run_properties(PropertyOptions{seed, 50});
    ASSERT_FALSE(outcomes.empty());
    for (const auto& o : outcomes) {
      EXPECT_TRUE(o.ok()) << o.name << ": " << o.failures << "/" << o.checked << " failed; first: " << o.first_failure;
    }
  }
}

TEST(Properties, SameSeedSameOutcome) {
  const auto a = run_properties(PropertyOptions{9, 5});
  const auto b = run_properties(PropertyOptions{9, 5});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].name, b[k].name);
    EXPECT_EQ(a[k].checked, b[k].checked);
  }
}
