#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lvmb/error.hpp"
#include "lvmb/nvp.hpp"
#include "oracles.hpp"

namespace lvmb {
namespace {

LVMBConfig cfg_a() { return testing::make_config(4, 1, ExactMatrix{{1, 2, 3, 0}}, {{4}, {1, 2, 3}}); }
LVMBConfig cfg_b() { return testing::make_config(4, 1, ExactMatrix{{1, 2, 3, 0}}, {{1}, {2}, {3}}); }

std::vector<std::size_t> idx(std::initializer_list<std::size_t> one_based) {
  std::vector<std::size_t> out;
  for (std::size_t i : one_based) out.push_back(i - 1);
  return out;
}

TEST(RankModRelations, Examples) {
  EXPECT_EQ(rank_mod_relations(cfg_a(), idx({1, 2})), 2u);
  EXPECT_EQ(rank_mod_relations(cfg_a(), std::vector<std::size_t>{}), 0u);
  EXPECT_EQ(rank_mod_relations(cfg_a(), idx({1, 2, 3, 4})), 2u);
  const LVMBConfig flat = testing::make_config(4, 1, ExactMatrix{{2, 2, 2, 2}}, {});
  try {
    rank_mod_relations(flat, idx({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::relation_rank_deficient);
  }
  EXPECT_THROW(rank_mod_relations(cfg_a(), idx({1, 1})), Error);
}

TEST(DecideNvp, Examples) {
  const NvpDecision a = decide_nvp(cfg_a());
  EXPECT_TRUE(a.holds);
  EXPECT_FALSE(a.affine_flag);
  ASSERT_TRUE(std::holds_alternative<BasisCertificate>(a.evidence));

  const NvpDecision b = decide_nvp(cfg_b());
  EXPECT_FALSE(b.holds);
  ASSERT_TRUE(std::holds_alternative<DeficiencyWitness>(b.evidence));
  const auto& w = std::get<DeficiencyWitness>(b.evidence);
  EXPECT_EQ(w.capable, IndexSet::from_one_based({4}));
  EXPECT_EQ(w.required, 2u);

  // k = m + 1 = 2.
  const NvpDecision affine = decide_nvp(testing::make_config(4, 1, ExactMatrix{{1, 2, 3, 0}}, {{1}, {2}}));
  EXPECT_TRUE(affine.holds);
  EXPECT_TRUE(affine.affine_flag);
}

TEST(DecideNvp, RequiresValidConfig) {
  try {
    decide_nvp(testing::make_config(4, 1, ExactMatrix{{3, 3, 3, 3}}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::validation_failed);
  }
}

TEST(ConstructCertificate, Examples) {
  EXPECT_EQ(construct_certificate(cfg_a()).indices, idx({1, 2}));
  try {
    construct_certificate(cfg_b());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::certificate_impossible);
  }
  // k = 0: the first nu capable indices already reach full rank.
  const LVMBConfig torus = testing::make_config(4, 1, ExactMatrix{{1, 2, 3, 0}}, {{1, 2}, {3, 4}});
  EXPECT_EQ(construct_certificate(torus).indices, idx({1, 2}));
  // Lambda = (0, 1, 2, 3, 3): after {1, 2}, e_3 adds nothing mod W because the remaining
  // columns 4, 5 coincide, so the greedy scan skips it and takes 4.
  const LVMBConfig skip = testing::make_config(5, 1, ExactMatrix{{0, 1, 2, 3, 3}}, {});
  const BasisCertificate c = construct_certificate(skip);
  EXPECT_EQ(c.indices, idx({1, 2, 4}));
  EXPECT_TRUE(verify_certificate(skip, c));
}

TEST(VerifyCertificate, Examples) {
  EXPECT_TRUE(verify_certificate(cfg_a(), {idx({1, 2})}));
  EXPECT_FALSE(verify_certificate(cfg_a(), {idx({1, 4})}));
  EXPECT_FALSE(verify_certificate(cfg_a(), {idx({1, 1})}));
  EXPECT_FALSE(verify_certificate(cfg_a(), {idx({1})}));
  EXPECT_FALSE(verify_certificate(cfg_a(), {{7, 1}}));
}

// Random general-position data: the theorem's equivalence plus certificate properties.
TEST(Nvp, VerdictMatchesHyperplaneCount) {
  std::mt19937_64 rng(17);
  int holds = 0;
  int fails = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t m = 1 + rng() % 2;
    const std::size_t n = 2 * m + 1 + rng() % 3;
    const ExactMatrix lambda = testing::random_matrix(rng, m, n, 20);
    std::vector<std::vector<std::size_t>> gens;
    for (std::size_t i = 1; i <= n; ++i)
      if (rng() % 3 == 0) gens.push_back({i});
    LVMBConfig cfg = testing::make_config(n, m, lambda, gens);
    if (!validate(cfg).passed) continue;

    const std::size_t k = k_count(cfg);
    const NvpDecision d = decide_nvp(cfg);
    EXPECT_EQ(d.holds, k <= m + 1);
    if (d.holds) {
      ++holds;
      const auto cert = construct_certificate(cfg);
      EXPECT_TRUE(verify_certificate(cfg, cert));
      // Rescaling each certificate field keeps it a valid basis.
      std::vector<FundamentalField> scaled;
      for (std::size_t i : cert.indices)
        scaled.push_back(FundamentalField::coordinate(n, i, GaussianRational(Rational(-3, 2), Rational(5))));
      EXPECT_TRUE(verify_field_basis(cfg, scaled));
    } else {
      ++fails;
      EXPECT_THROW(construct_certificate(cfg), Error);
      const auto& w = std::get<DeficiencyWitness>(d.evidence);
      EXPECT_LT(w.capable_count(), cfg.nu());
      EXPECT_LT(rank_mod_relations(cfg, w.capable.elements()), cfg.nu());
    }

    // rank_mod_relations is monotone along any index sequence and bounded by nu.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t prev = 0;
    for (std::size_t len = 1; len <= n; ++len) {
      const std::size_t r = rank_mod_relations(cfg, std::span(order).first(len));
      EXPECT_GE(r, prev);
      EXPECT_LE(r, cfg.nu());
      prev = r;
    }
  }
  EXPECT_GT(holds, 10);
  EXPECT_GT(fails, 10);
}

}  // namespace
}  // namespace lvmb
