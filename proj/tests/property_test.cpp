#include <gtest/gtest.h>

#include "support/properties.hpp"
#include "support/testing.hpp"

namespace pec::testing {
namespace {

const char* kShipped[] = {"coin", "antibiotic", "keys"};

TEST(Properties, ShippedDomains) {
  std::mt19937_64 rng(1);
  for (const char* name : kShipped) {
    DomainDescription dd = load_domain(name);
    Model model(dd);
    EXPECT_EQ(check_normalization(model), "") << name;
    EXPECT_EQ(check_additivity(model, rng, 20), "") << name;
    EXPECT_EQ(check_transition_rows(dd), "") << name;
    EXPECT_EQ(check_narrative_sums(dd), "") << name;
    EXPECT_EQ(check_persistence(model), "") << name;
  }
}

TEST(Properties, Decomposition) {
  for (const char* name : kShipped) {
    EXPECT_EQ(check_decomposition(load_domain(name)), "") << name;
  }
}

TEST(Properties, RandomDomains) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 60; ++k) {
    DomainDescription dd = random_domain(rng, {});
    Model model(dd);
    ASSERT_EQ(check_normalization(model), "") << render(dd);
    ASSERT_EQ(check_additivity(model, rng, 10), "") << render(dd);
    ASSERT_EQ(check_transition_rows(dd), "") << render(dd);
    ASSERT_EQ(check_narrative_sums(dd), "") << render(dd);
    ASSERT_EQ(check_persistence(model), "") << render(dd);
    ASSERT_EQ(check_decomposition(dd), "") << render(dd);
  }
}

TEST(Properties, OracleEquivalenceOnMicroDomains) {
  std::mt19937_64 rng(77);
  const DomainLimits micro{2, 2, 1, 3};
  for (int k = 0; k < 25; ++k) {
    DomainDescription dd = random_domain(rng, micro);
    ASSERT_EQ(check_oracle(dd), "") << render(dd);
  }
}

TEST(Properties, OracleEquivalenceOnShippedDomains) {
  EXPECT_EQ(check_oracle(load_domain("coin")), "");
}

}  // namespace
}  // namespace pec::testing
