#include <gtest/gtest.h>

#include <random>

#include "lvmb/arrangement.hpp"
#include "lvmb/error.hpp"
#include "oracles.hpp"

namespace lvmb {
namespace {

LVMBConfig with_generators(std::size_t n, const std::vector<std::vector<std::size_t>>& gens) {
  ExactMatrix l(1, n);
  for (std::size_t i = 0; i < n; ++i) l(0, i) = static_cast<long>(i);
  return testing::make_config(n, 1, l, gens);
}

const LVMBConfig& cfg_a() {
  static const LVMBConfig cfg = testing::make_config(4, 1, ExactMatrix{{1, 2, 3, 0}}, {{4}, {1, 2, 3}});
  return cfg;
}

IndexSet one_based(std::vector<std::size_t> v) { return IndexSet::from_one_based(v); }

TEST(KCount, Examples) {
  EXPECT_EQ(k_count(cfg_a()), 1u);
  EXPECT_EQ(k_count(with_generators(4, {{1}, {2}, {3}})), 3u);
  EXPECT_EQ(k_count(with_generators(4, {{1, 2}, {3, 4}})), 0u);
  EXPECT_EQ(capable_indices(cfg_a()), one_based({1, 2, 3}));
}

TEST(SubspaceContainedInE, Examples) {
  EXPECT_TRUE(subspace_contained_in_E(cfg_a(), one_based({4})));
  EXPECT_FALSE(subspace_contained_in_E(cfg_a(), one_based({1})));
  EXPECT_TRUE(subspace_contained_in_E(cfg_a(), one_based({1, 2, 3})));
  EXPECT_THROW(subspace_contained_in_E(cfg_a(), IndexSet{}), Error);
  EXPECT_THROW(subspace_contained_in_E(cfg_a(), one_based({5})), Error);
}

TEST(PointInV, Examples) {
  EXPECT_TRUE(point_in_V(cfg_a(), IndexSet{}));
  EXPECT_FALSE(point_in_V(cfg_a(), one_based({4})));
  EXPECT_TRUE(point_in_V(cfg_a(), one_based({2})));
  try {
    point_in_V(cfg_a(), one_based({1, 2, 3, 4}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::all_coordinates_zero);
  }
}

TEST(VanishingNonempty, Examples) {
  EXPECT_TRUE(vanishing_nonempty(cfg_a(), FundamentalField::coordinate(4, 0)));
  EXPECT_FALSE(vanishing_nonempty(cfg_a(), FundamentalField::coordinate(4, 3)));
  EXPECT_FALSE(vanishing_nonempty(cfg_a(), FundamentalField{{1, 1, 1, 0}}));
  // Full support never vanishes, even with E empty.
  EXPECT_FALSE(vanishing_nonempty(with_generators(4, {}), FundamentalField{{1, -2, 3, 1}}));
  try {
    vanishing_nonempty(cfg_a(), FundamentalField{ExactVector(4)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::zero_field);
  }
}

TEST(Arrangement, MonotoneAndSupportOnly) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t g = 0; g < rng() % 4; ++g) {
      const IndexSet s(rng() & mask);
      if (!s.empty()) gens.push_back(s.one_based());
    }
    const LVMBConfig cfg = with_generators(n, gens);
    const IndexSet small(rng() & mask);
    if (small.empty()) continue;
    const IndexSet large = small | IndexSet(rng() & mask);
    if (subspace_contained_in_E(cfg, small)) EXPECT_TRUE(subspace_contained_in_E(cfg, large));

    // Two fields with the same support get the same answer.
    FundamentalField f1{ExactVector(n)}, f2{ExactVector(n)};
    for (std::size_t i : small.elements()) {
      f1.alpha[i] = static_cast<long>(1 + rng() % 5);
      f2.alpha[i] = GaussianRational(Rational(-1, 3), Rational(static_cast<long>(rng() % 3)));
    }
    EXPECT_EQ(vanishing_nonempty(cfg, f1), vanishing_nonempty(cfg, f2));
  }
}

TEST(Arrangement, HyperplaneFieldsCharacterizeK) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t g = 0; g < 1 + rng() % 4; ++g) {
      IndexSet s(rng() & mask);
      if (rng() % 2 == 0) s = IndexSet{static_cast<std::size_t>(rng() % n)};
      if (!s.empty()) gens.push_back(s.one_based());
    }
    const LVMBConfig cfg = with_generators(n, gens);
    std::size_t silent = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!vanishing_nonempty(cfg, FundamentalField::coordinate(n, i))) ++silent;
    EXPECT_EQ(silent, k_count(cfg));
  }
}

TEST(Arrangement, AgreesWithSamplingOracle) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t g = 0; g < rng() % 5; ++g) {
      const IndexSet s(rng() & mask);
      if (!s.empty()) gens.push_back(s.one_based());
    }
    const LVMBConfig cfg = with_generators(n, gens);
    const IndexSet s(rng() & mask);
    if (s.empty() || s == IndexSet::full(n)) continue;
    EXPECT_EQ(!subspace_contained_in_E(cfg, s), testing::sampled_point_in_V(cfg, s.one_based(), rng));
  }
}

}  // namespace
}  // namespace lvmb
