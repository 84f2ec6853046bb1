#include <gtest/gtest.h>

#include <set>

#include "burstkit/burst.hpp"
#include "burstkit/error.hpp"
#include "oracles.hpp"

using namespace burstkit;

namespace {

std::set<oracle::RawWord> enumerated(const Field& f, std::size_t n, std::size_t tau, bool phased) {
  std::set<oracle::RawWord> out;
  for (const auto& w : enumerate_bursts(f, BurstSpace(n, tau, phased))) out.insert(oracle::raw(w));
  return out;
}

std::set<oracle::RawWord> brute(std::uint32_t q, std::size_t n, std::size_t tau, bool phased) {
  std::set<oracle::RawWord> out;
  for (const auto& w : oracle::all_words(q, n))
    if (phased ? oracle::is_phased_burst(w, tau) : oracle::is_burst(w, tau)) out.insert(w);
  return out;
}

}  // namespace

TEST(Burst, Predicate) {
  EXPECT_TRUE(is_burst(oracle::cooked({0, 0, 0, 0, 0}), 1));
  EXPECT_FALSE(is_burst(oracle::cooked({0, 1, 0, 1, 0}), 2));
  EXPECT_TRUE(is_burst(oracle::cooked({0, 1, 0, 1, 0}), 3));
  EXPECT_TRUE(is_burst(oracle::cooked({0, 0, 0, 2}), 1));
  EXPECT_THROW(is_burst(oracle::cooked({0, 1}), 0), DomainError);
  EXPECT_THROW(is_burst(oracle::cooked({0, 1}), 3), DomainError);
}

TEST(Burst, Windows) {
  const BurstSpace plain(5, 2);
  EXPECT_EQ(plain.windows().size(), 4u);
  const BurstSpace phased(6, 2, true);
  ASSERT_EQ(phased.windows().size(), 3u);
  EXPECT_EQ(phased.windows()[2], (Window{4, 2}));
  // 0 <= i < n / tau for real n / tau: the final block is clipped.
  const BurstSpace clipped(5, 2, true);
  ASSERT_EQ(clipped.windows().size(), 3u);
  EXPECT_EQ(clipped.windows()[2], (Window{4, 1}));
  EXPECT_THROW(BurstSpace(3, 4), DomainError);
}

TEST(Burst, SmallEnumerations) {
  auto f2 = field_new(2, 1);
  EXPECT_EQ(enumerate_bursts(*f2, BurstSpace(4, 2)).size(), 8u);
  EXPECT_EQ(enumerate_bursts(*f2, BurstSpace(4, 2, true)).size(), 7u);
  auto f3 = field_new(3, 1);
  EXPECT_EQ(enumerate_bursts(*f3, BurstSpace(5, 1)).size(), 1u + 2 * 5);
}

TEST(Burst, EnumerationOrder) {
  auto f2 = field_new(2, 1);
  const auto words = enumerate_bursts(*f2, BurstSpace(3, 2));
  std::vector<oracle::RawWord> got;
  for (const auto& w : words) got.push_back(oracle::raw(w));
  const std::vector<oracle::RawWord> want{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  EXPECT_EQ(got, want);
}

TEST(Burst, EnumerationCap) {
  auto f = field_new(17, 1);
  EXPECT_THROW(enumerate_bursts(*f, BurstSpace(16, 8), 1000), CapExceeded);
}

TEST(Burst, CountFormula) {
  EXPECT_EQ(count_bursts(2, 5, 2), BigInt(10));
  EXPECT_EQ(count_bursts(2, 4, 2), BigInt(8));
  for (std::uint64_t q : {2u, 5u, 16u}) EXPECT_EQ(count_bursts(q, 9, 1), BigInt(1 + (q - 1) * 9));
  // tau = 0 evaluates the formula as written: the sum is empty.
  EXPECT_EQ(count_bursts(3, 4, 0), BigInt(1 + 2 * 4));
  EXPECT_THROW(count_bursts(2, 3, 4), DomainError);
  EXPECT_GT(count_bursts(256, 255, 40), BigInt(UINT64_MAX));
}

TEST(Burst, CanonicalPattern) {
  const Word w = oracle::cooked({0, 0, 2, 1, 0});
  const BurstPattern p = canonical_pattern(w, 2);
  EXPECT_EQ(p.start, 2u);
  EXPECT_EQ(p.payload, oracle::cooked({2, 1}));
  EXPECT_EQ(p.expand(5), w);
  // A burst in the last tau positions anchors at n - tau.
  const BurstPattern tail = canonical_pattern(oracle::cooked({0, 0, 0, 0, 3}), 3);
  EXPECT_EQ(tail.start, 2u);
  EXPECT_TRUE(canonical_pattern(oracle::cooked({0, 0, 0}), 2).is_zero());
  EXPECT_THROW(canonical_pattern(oracle::cooked({1, 0, 1}), 2), DomainError);
}

TEST(BurstProperty, CountMatchesEnumerationAndBruteForce) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = field_for_size(q);
    for (std::size_t n = 1; n <= 8; ++n)
      for (std::size_t tau = 1; tau <= n; ++tau) {
        const auto got = enumerate_bursts(*f, BurstSpace(n, tau));
        ASSERT_EQ(BigInt(got.size()), count_bursts(q, n, tau)) << q << " " << n << " " << tau;
        if (n <= 6) ASSERT_EQ(enumerated(*f, n, tau, false), brute(q, n, tau, false));
      }
  }
}

TEST(BurstProperty, EveryYieldedWordIsABurstAndAppearsOnce) {
  auto f = field_for_size(3);
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t tau = 1; tau <= n; ++tau) {
      const auto words = enumerate_bursts(*f, BurstSpace(n, tau));
      std::set<oracle::RawWord> seen;
      for (const auto& w : words) {
        ASSERT_TRUE(is_burst(w, tau));
        ASSERT_TRUE(seen.insert(oracle::raw(w)).second);
      }
    }
}

TEST(BurstProperty, PhasedEnumerationMatchesBruteForce) {
  for (std::uint32_t q : {2u, 3u}) {
    auto f = field_for_size(q);
    for (std::size_t n = 1; n <= 6; ++n)
      for (std::size_t tau = 1; tau <= n; ++tau) {
        const auto phased = enumerated(*f, n, tau, true);
        ASSERT_EQ(phased, brute(q, n, tau, true));
        ASSERT_EQ(BigInt(phased.size()), count_phased_bursts(q, n, tau));
        if (n % tau == 0) {
          const auto plain = enumerated(*f, n, tau, false);
          for (const auto& w : phased) ASSERT_TRUE(plain.count(w));
        }
      }
  }
}

TEST(BurstProperty, CountIsMonotone) {
  for (std::uint64_t q : {2u, 3u, 4u, 7u})
    for (std::uint64_t n = 1; n <= 12; ++n)
      for (std::uint64_t tau = 1; tau <= n; ++tau) {
        if (tau > 1) ASSERT_GE(count_bursts(q, n, tau), count_bursts(q, n, tau - 1));
        if (tau < n) ASSERT_LE(count_bursts(q, n, tau), count_bursts(q, n + 1, tau));
      }
}
