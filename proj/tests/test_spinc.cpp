#include <gtest/gtest.h>

#include "einobs/error.hpp"
#include "einobs/spinc.hpp"
#include "test_support.hpp"

using namespace einobs;
using einobs::testing::big;
using einobs::testing::uniform;

namespace {

Invariants numbers(long long e, long long sigma, long long b1 = 0) {
  return Invariants{big(e), big(sigma), big(b1), std::nullopt};
}

SwStatus random_status(std::mt19937_64& rng) {
  return static_cast<SwStatus>(uniform(rng, 0, 3));
}

// Random invariants with e + sigma even and a c1^2 congruent to 2e+3sigma
// mod 4.
std::pair<Integer, Invariants> random_characteristic_pair(std::mt19937_64& rng) {
  const long long e = uniform(rng, -1'000'000, 1'000'000);
  long long sigma = uniform(rng, -1'000'000, 1'000'000);
  if ((e + sigma) % 2 != 0) ++sigma;
  const Invariants inv = numbers(e, sigma, uniform(rng, 0, 10));
  const Integer c1_sq = inv.two_e_plus_3sigma() + 4 * big(uniform(rng, -1000, 1000));
  return {c1_sq, inv};
}

}  // namespace

TEST(FormalDimension, Examples) {
  EXPECT_EQ(formal_dimension(0, block_invariants(K3{})), 0);
  const ChenSurface chen{big(2'000'000), big(11'000'000), false};
  EXPECT_EQ(formal_dimension(chen.y, block_invariants(chen)), 0);
  // 2e + 3 sigma = -4 with e = 4, sigma = -4.
  EXPECT_EQ(formal_dimension(0, numbers(4, -4)), 1);
}

TEST(FormalDimension, ErrorsExactlyOffTheCongruence) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const long long e = uniform(rng, -1000, 1000);
    long long sigma = uniform(rng, -1000, 1000);
    if ((e + sigma) % 2 != 0) ++sigma;
    const Invariants inv = numbers(e, sigma);
    const Integer c1_sq = big(uniform(rng, -5000, 5000));
    const bool integral = mpz_divisible_ui_p(Integer(c1_sq - inv.two_e_plus_3sigma()).get_mpz_t(), 4);
    if (integral) {
      EXPECT_EQ(4 * formal_dimension(c1_sq, inv), c1_sq - inv.two_e_plus_3sigma());
    } else {
      try {
        formal_dimension(c1_sq, inv);
        ADD_FAILURE();
      } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::kNonIntegralDimension);
      }
    }
  }
}

TEST(Canonical, PositiveDegreeIsNontrivialSW) {
  const ChenSurface chen{big(2'000'000), big(11'000'000), false};
  const Invariants inv = block_invariants(chen);
  const SpinCDescriptor d = canonical_spinc_of_kahler(inv, chen.y, true);
  EXPECT_EQ(d.status(), SwStatus::kNontrivialSW);
  EXPECT_EQ(formal_dimension(d.c1_sq(), inv), 0);
  ASSERT_EQ(d.provenance().size(), 1u);
  EXPECT_EQ(d.provenance()[0], "canonical class, deg K>0, #M=1");
}

TEST(Canonical, NonPositiveDegreeIsUnknownAndMismatchThrows) {
  const Invariants cp2 = block_invariants(CP2{});
  EXPECT_EQ(canonical_spinc_of_kahler(cp2, 9, false).status(), SwStatus::kUnknown);
  try {
    canonical_spinc_of_kahler(cp2, 5, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCanonicalMismatch);
  }
}

TEST(BlowUp, Examples) {
  const Invariants k3 = block_invariants(K3{});
  const SpinCDescriptor base = canonical_spinc_of_kahler(k3, 0, true);
  const auto same = blow_up(base, k3, 0);
  EXPECT_EQ(same.first.c1_sq(), 0);
  EXPECT_EQ(same.first.provenance().size(), 1u);

  const auto [d5, inv5] = blow_up(base, k3, 5);
  EXPECT_EQ(d5.c1_sq(), -5);
  EXPECT_EQ(formal_dimension(d5.c1_sq(), inv5), 0);
  EXPECT_EQ(d5.status(), SwStatus::kNontrivialSW);

  const ChenSurface chen{big(2'000'000), big(11'000'000), false};
  const Invariants ci = block_invariants(chen);
  const auto [d3, inv3] = blow_up(canonical_spinc_of_kahler(ci, chen.y, true), ci, 3);
  EXPECT_EQ(d3.c1_sq(), 11'000'000 - 3);
  EXPECT_EQ(formal_dimension(d3.c1_sq(), inv3), 0);
}

TEST(S1S3Sum, StatusRules) {
  const Invariants k3 = block_invariants(K3{});
  const SpinCDescriptor sw = canonical_spinc_of_kahler(k3, 0, true);

  const auto [one, inv1] = s1s3_sum(sw, k3, 1);
  EXPECT_EQ(one.status(), SwStatus::kBClass);
  ASSERT_TRUE(one.holonomy_count().has_value());
  EXPECT_EQ(*one.holonomy_count(), 1);
  EXPECT_EQ(formal_dimension(one.c1_sq(), inv1), 1);

  const auto [two, inv2] = s1s3_sum(sw, k3, 2);
  EXPECT_EQ(two.status(), SwStatus::kBClassTrivialSW);
  EXPECT_FALSE(two.holonomy_count().has_value());
  EXPECT_EQ(formal_dimension(two.c1_sq(), inv2), 2);

  const auto [three, inv3] = s1s3_sum(sw, k3, 3);
  EXPECT_EQ(three.status(), SwStatus::kBClass);
  EXPECT_FALSE(three.holonomy_count().has_value());
  EXPECT_NE(three.provenance().back().find("l>=3"), std::string::npos);

  const SpinCDescriptor unknown(0, SwStatus::kUnknown);
  const auto [u, invu] = s1s3_sum(unknown, k3, 1);
  EXPECT_EQ(u.status(), SwStatus::kUnknown);
  EXPECT_EQ(formal_dimension(u.c1_sq(), invu), 1);

  const SpinCDescriptor bclass(0, SwStatus::kBClass);
  const auto [b, invb] = s1s3_sum(bclass, k3, 4);
  EXPECT_EQ(b.status(), SwStatus::kBClass);

  EXPECT_THROW(s1s3_sum(sw, k3, 0), Error);
}

TEST(S1S3Sum, TwoSingleSumsEqualOneDoubleSum) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto [c1_sq, inv] = random_characteristic_pair(rng);
    const SpinCDescriptor d(c1_sq, SwStatus::kNontrivialSW);
    const auto once = s1s3_sum(d, inv, 1);
    const auto twice = s1s3_sum(once.first, once.second, 1);
    const auto direct = s1s3_sum(d, inv, 2);
    EXPECT_EQ(twice.first.c1_sq(), direct.first.c1_sq());
    EXPECT_TRUE(same_numbers(twice.second, direct.second));
    EXPECT_EQ(formal_dimension(twice.first.c1_sq(), twice.second),
              formal_dimension(direct.first.c1_sq(), direct.second));
    EXPECT_EQ(twice.first.status(), SwStatus::kBClassTrivialSW);
    EXPECT_EQ(direct.first.status(), SwStatus::kBClassTrivialSW);
  }
}

TEST(SpinCProperty, DimensionShiftAndBlowUpInvariance) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    const auto [c1_sq, inv] = random_characteristic_pair(rng);
    const SpinCDescriptor d(c1_sq, random_status(rng));
    const Integer d0 = formal_dimension(c1_sq, inv);
    for (int k = 0; k <= 100; k += 7) {
      const auto b = blow_up(d, inv, k);
      EXPECT_EQ(formal_dimension(b.first.c1_sq(), b.second), d0);
      EXPECT_EQ(b.first.status(), d.status());
    }
    for (int l = 1; l <= 100; l += 9) {
      const auto s = s1s3_sum(d, inv, l);
      EXPECT_EQ(formal_dimension(s.first.c1_sq(), s.second), d0 + l);
    }
  }
}

TEST(SpinCProperty, BlowUpAndSumCommute) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto [c1_sq, inv] = random_characteristic_pair(rng);
    const SpinCDescriptor d(c1_sq, random_status(rng));
    const Integer k = big(uniform(rng, 0, 50));
    const Integer l = big(uniform(rng, 1, 50));
    const auto b = blow_up(d, inv, k);
    const auto bs = s1s3_sum(b.first, b.second, l);
    const auto s = s1s3_sum(d, inv, l);
    const auto sb = blow_up(s.first, s.second, k);
    EXPECT_EQ(bs.first.c1_sq(), sb.first.c1_sq());
    EXPECT_TRUE(same_numbers(bs.second, sb.second));
    EXPECT_EQ(bs.first.status(), sb.first.status());
  }
}

TEST(C1PlusBound, Examples) {
  EXPECT_EQ(c1plus_sq_lower_bound(block_invariants(K3{})).at_least, 0);
  EXPECT_EQ(c1plus_sq_lower_bound(block_invariants(ChenSurface{big(7), big(40), false})).at_least, 40);
  // 2e + 3 sigma = 57 with e = 33, sigma = -3.
  EXPECT_EQ(c1plus_sq_lower_bound(numbers(33, -3)).at_least, 57);
}
