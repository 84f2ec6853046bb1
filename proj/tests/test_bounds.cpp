#include <gtest/gtest.h>

#include <random>

#include "burstkit/bounds.hpp"
#include "burstkit/burst.hpp"
#include "burstkit/error.hpp"
#include "burstkit/listdec.hpp"
#include "oracles.hpp"

using namespace burstkit;

namespace {

BigInt brute_volume(std::uint32_t q, std::size_t n, std::size_t tau) {
  std::size_t count = 0;
  for (const auto& w : oracle::all_words(q, n)) count += oracle::is_burst(w, tau) ? 1 : 0;
  return count;
}

}  // namespace

TEST(SpherePacking, FloorOfVolumeRatio) {
  ASSERT_EQ(brute_volume(2, 5, 2), BigInt(10));
  const BoundVerdict v = sphere_packing(2, 5, 2, 1, 3);
  EXPECT_TRUE(v.applicable);
  EXPECT_EQ(*v.max_size, BigInt(3));
  EXPECT_TRUE(*v.satisfied);
  EXPECT_FALSE(*sphere_packing(2, 5, 2, 1, 4).satisfied);
}

TEST(SpherePacking, GenerousListPermitsEverything) {
  const BigInt volume = count_bursts(3, 5, 3);
  const BoundVerdict v = sphere_packing(3, 5, 3, volume.convert_to<std::uint64_t>(), big_pow(3, 5));
  EXPECT_TRUE(*v.satisfied);
  EXPECT_GE(*v.max_size, big_pow(3, 5));
}

TEST(SpherePacking, WholeSpaceViolatesWithListOne) {
  for (std::uint64_t q : {2u, 3u, 5u})
    for (std::uint64_t n = 1; n <= 6; ++n) EXPECT_FALSE(*sphere_packing(q, n, n, 1, big_pow(q, n)).satisfied);
  EXPECT_THROW(sphere_packing(2, 3, 4, 1, 1), DomainError);
  EXPECT_THROW(sphere_packing(2, 3, 2, 0, 1), DomainError);
}

TEST(Reiger, ListOneIsClassicalBound) {
  for (std::uint64_t tau = 1; tau <= 4; ++tau) {
    const BoundVerdict v = reiger_group(2, 10, tau, 1, 1);
    EXPECT_TRUE(v.applicable);
    EXPECT_EQ(*v.max_size, big_pow(2, 10 - 2 * tau));
    EXPECT_DOUBLE_EQ(v.min_redundancy, 2.0 * tau);
    EXPECT_EQ(reiger_linear_min_r(tau, 1), 2 * tau);
  }
}

TEST(Reiger, ListTwoBurstTwoNeedsRedundancyThree) {
  const BoundVerdict v = reiger_group(2, 6, 2, 2, 1);
  EXPECT_DOUBLE_EQ(v.min_redundancy, 3.0);
  EXPECT_EQ(*v.max_size, big_pow(2, 3));
  EXPECT_EQ(reiger_linear_min_r(2, 2), 3u);
}

TEST(Reiger, AppendixParametersAreOutsideBothReigerForms) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    const BigInt size = big_pow(q, 4);
    const BoundVerdict strict = reiger_group(q, 8, 3, 2, size);
    const BoundVerdict relaxed = reiger_group_relaxed(q, 8, 3, 2, size);
    const BoundVerdict linear = reiger_linear(q, 8, 3, 2, size);
    EXPECT_FALSE(strict.applicable);
    EXPECT_FALSE(relaxed.applicable);
    EXPECT_FALSE(linear.applicable);
    EXPECT_FALSE(strict.satisfied.has_value());
    EXPECT_FALSE(linear.satisfied.has_value());
  }
  EXPECT_EQ(reiger_linear_min_r(3, 2), 5u);
  EXPECT_EQ(reiger_linear_min_r(4, 2), 6u);
}

TEST(Reiger, RelaxedHypotheses) {
  EXPECT_TRUE(reiger_group_relaxed(2, 8, 4, 2, 1).applicable);
  EXPECT_FALSE(reiger_group(2, 8, 4, 2, 1).applicable);
  EXPECT_FALSE(reiger_group_relaxed(2, 8, 3, 2, 1).applicable);
}

TEST(GeneralEll2, Thresholds) {
  const BoundVerdict v3 = general_code_ell2(3, 4, 2, 4);
  EXPECT_EQ(*v3.max_size, BigInt(4));
  EXPECT_TRUE(*v3.satisfied);
  EXPECT_FALSE(*general_code_ell2(3, 4, 2, 5).satisfied);
  EXPECT_EQ(*general_code_ell2(2, 4, 2, 1).max_size, BigInt(2));
  EXPECT_TRUE(*general_code_ell2(5, 8, 4, 1).satisfied);
  EXPECT_FALSE(general_code_ell2(3, 6, 3, 1).applicable);
  EXPECT_FALSE(general_code_ell2(3, 6, 4, 1).applicable);
}

TEST(GeneralAnyEll, Thresholds) {
  const BoundVerdict v = general_code_any_ell(3, 4, 2, 2, 4);
  EXPECT_EQ(*v.max_size, BigInt(5));
  EXPECT_TRUE(*v.satisfied);
  EXPECT_FALSE(*general_code_any_ell(3, 4, 2, 2, 6).satisfied);
  EXPECT_EQ(*general_code_any_ell(2, 8, 4, 2, 1).max_size, BigInt(7));
  EXPECT_TRUE(*general_code_any_ell(2, 8, 4, 2, 1).satisfied);
  EXPECT_FALSE(general_code_any_ell(2, 8, 3, 2, 1).applicable);
  EXPECT_FALSE(general_code_any_ell(2, 8, 4, 1, 1).applicable);
}

TEST(LemmaMell, Threshold) {
  const BoundVerdict v = lemma_Mell(3, 4, 2, 2, 5);
  EXPECT_TRUE(v.applicable);
  EXPECT_TRUE(*v.satisfied);
  EXPECT_FALSE(*lemma_Mell(3, 4, 2, 2, 6).satisfied);
  EXPECT_EQ(*lemma_Mell(2, 6, 3, 3, 1).max_size, BigInt(11));
  EXPECT_FALSE(lemma_Mell(3, 5, 2, 2, 1).applicable);
}

TEST(NoDetection, Thresholds) {
  EXPECT_EQ(*no_detection_ell2(3, 4, 2, 6).max_size, BigInt(6));
  EXPECT_TRUE(*no_detection_ell2(3, 4, 2, 6).satisfied);
  EXPECT_FALSE(*no_detection_ell2(3, 4, 2, 7).satisfied);
  EXPECT_EQ(*no_detection_ell2(2, 4, 2, 4).max_size, BigInt(4));
  for (std::uint64_t q : {2u, 3u, 4u, 7u}) EXPECT_TRUE(*no_detection_ell2(q, 4, 2, 2 * q).satisfied);
  EXPECT_FALSE(no_detection_ell2(2, 6, 3, 1).applicable);
}

TEST(Bounds, NamesRoundTrip) {
  for (BoundId id : all_bounds()) EXPECT_EQ(parse_bound(bound_name(id)), id);
  EXPECT_EQ(all_bounds().size(), 8u);
  EXPECT_FALSE(parse_bound("singleton"));
}

TEST(Bounds, EllTwoBoundsNeedSmallLists) {
  EXPECT_TRUE(evaluate_bound(BoundId::general_ell2, 3, 4, 2, 2, 4).applicable);
  EXPECT_FALSE(evaluate_bound(BoundId::general_ell2, 3, 4, 2, 3, 4).applicable);
  EXPECT_FALSE(evaluate_bound(BoundId::no_detection_ell2, 3, 4, 2, 3, 4).satisfied.has_value());
}

TEST(Bounds, IntegerRoot) {
  EXPECT_EQ(integer_root(0, 3), BigInt(0));
  EXPECT_EQ(integer_root(26, 3), BigInt(2));
  EXPECT_EQ(integer_root(27, 3), BigInt(3));
  const BigInt big = big_pow(7, 90);
  EXPECT_EQ(integer_root(big, 3), big_pow(7, 30));
  EXPECT_EQ(integer_root(big - 1, 3), big_pow(7, 30) - 1);
}

TEST(BoundsProperty, MaxSizeIsExactThreshold) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t q = 2 + oracle::uniform(rng, 15);
    const std::uint64_t n = 2 + oracle::uniform(rng, 30);
    const std::uint64_t tau = 1 + oracle::uniform(rng, n);
    const std::uint64_t ell = 1 + oracle::uniform(rng, 4);
    for (BoundId id : all_bounds()) {
      const BoundVerdict probe = evaluate_bound(id, q, n, tau, ell, 1);
      if (!probe.applicable || !probe.max_size) continue;
      const BigInt m = *probe.max_size;
      ASSERT_TRUE(*evaluate_bound(id, q, n, tau, ell, m).satisfied) << bound_name(id);
      ASSERT_FALSE(*evaluate_bound(id, q, n, tau, ell, m + 1).satisfied) << bound_name(id);
      if (m > 0) ASSERT_TRUE(*evaluate_bound(id, q, n, tau, ell, m - 1).satisfied) << bound_name(id);
    }
  }
}

TEST(BoundsProperty, ReigerBeatsSpherePackingForShortCodes) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u})
    for (std::uint64_t ell = 1; ell <= 3; ++ell)
      for (std::uint64_t tau = ell; tau <= 8; tau += ell) {
        const std::uint64_t limit = ell * sat_pow(q, tau / ell);
        for (std::uint64_t n = tau; n < std::min<std::uint64_t>(limit, 60); ++n) {
          const BoundVerdict sp = sphere_packing(q, n, tau, ell, 1);
          const BoundVerdict rg = reiger_group(q, n, tau, ell, 1);
          ASSERT_LE(*rg.max_size, *sp.max_size) << q << " " << n << " " << tau << " " << ell;
        }
      }
}

TEST(BoundsProperty, CertifiedRsCodesSatisfyApplicableBounds) {
  for (std::uint64_t q : {7u, 8u}) {
    auto f = field_for_size(q);
    const std::size_t n = q - 1;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t tau = 1; tau <= r; ++tau)
        for (std::size_t ell = 1; ell <= 3; ++ell) {
          const CodeHandle code{"rs", {}, rs_code(f, n, r)};
          const CertReport rep = certify(code, tau, ell);
          if (!rep.detects || !rep.decodable.value()) continue;
          for (BoundId id : {BoundId::sphere_packing, BoundId::reiger_group, BoundId::reiger_group_relaxed,
                             BoundId::reiger_linear, BoundId::general_ell2, BoundId::general_any_ell,
                             BoundId::no_detection_ell2}) {
            const BoundVerdict v = evaluate_bound(id, q, n, tau, ell, code.size());
            if (v.applicable) ASSERT_TRUE(*v.satisfied) << bound_name(id) << " r=" << r << " tau=" << tau;
          }
        }
  }
}
