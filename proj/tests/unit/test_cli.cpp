#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lvmb/arrangement.hpp"
#include "lvmb/cli/commands.hpp"
#include "lvmb/config_io.hpp"
#include "lvmb/error.hpp"

namespace lvmb::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("lvmb_test_" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

const char* kCfgA = R"({"n": 4, "m": 1, "lambda": [[1, 2, 3, 0]], "excluded": [[4], [1, 2, 3]]})";
const char* kCfgB = R"({"n": 4, "m": 1, "lambda": [[1, 2, 3, 0]], "excluded": [[1], [2], [3]]})";
const char* kN4M2 = R"({"n": 4, "m": 2, "lambda": [[1, 0, 1, 2], [0, 1, 1, 3]], "excluded": []})";

bool has_float(const json& j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto& v : j)
      if (has_float(v)) return true;
  return false;
}

TEST(Generate, HopfLikeIsCfgA) {
  EXPECT_EQ(hopf_like(4), parse_config(kCfgA));
  EXPECT_EQ(generate(Family::hopf_like, {.n = 4}), parse_config(kCfgA));
}

TEST(Generate, FamilyNames) {
  EXPECT_EQ(family_from_string("torus_free"), Family::torus_free);
  EXPECT_EQ(to_string(Family::random), "random");
  EXPECT_THROW(family_from_string("hopf"), Error);
}

TEST(Generate, RandomExamples) {
  const LVMBConfig affine = random_config(6, 2, 3, 7);
  EXPECT_EQ(k_count(affine), 3u);
  EXPECT_EQ(affine.m, 2u);
  const NvpDecision d = decide_nvp(affine);
  EXPECT_TRUE(d.holds);
  EXPECT_TRUE(d.affine_flag);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LVMBConfig over = random_config(6, 2, 5, seed);
    EXPECT_EQ(k_count(over), 5u);
    EXPECT_FALSE(decide_nvp(over).holds);
  }
}

TEST(Generate, Deterministic) { EXPECT_EQ(random_config(9, 3, 2, 42), random_config(9, 3, 2, 42)); }

TEST(Generate, OutOfRange) {
  auto code = [](GenParams p) {
    try {
      generate(Family::random, p);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::syntax;
  };
  EXPECT_EQ(code({.n = 17, .m = 1}), ErrorCode::params_out_of_range);
  EXPECT_EQ(code({.n = 10, .m = 5}), ErrorCode::params_out_of_range);
  EXPECT_EQ(code({.n = 4, .m = 2}), ErrorCode::params_out_of_range);
  EXPECT_EQ(code({.n = 5, .m = 1, .k = 6}), ErrorCode::params_out_of_range);
}

TEST(Generate, EveryOutputValidates) {
  TempDir dir;
  std::size_t count = 0;
  for (std::size_t m = 1; m <= kMaxGenM; ++m)
    for (std::size_t n = 2 * m + 1; n <= kMaxGenN; n += 2)
      for (std::size_t k = 0; k <= n; k += 2)
        for (Family f : {Family::hopf_like, Family::torus_free, Family::random}) {
          std::ostringstream gen_out;
          std::ostringstream sink;
          const GenParams params{.n = n, .m = m, .k = k, .seed = n * 31 + k};
          ASSERT_EQ(cmd_gen(f, params, gen_out, sink), kExitOk);
          const fs::path file = dir.write("gen.json", gen_out.str());
          std::ostringstream out;
          EXPECT_EQ(cmd_validate(file, out, sink), kExitOk) << to_string(f) << " n=" << n << " m=" << m << " k=" << k;
          ++count;
        }
  EXPECT_GT(count, 100u);
}

TEST(Report, RoundTrip) {
  for (const LVMBConfig& cfg : {hopf_like(4), random_config(7, 2, 2, 3), random_config(6, 2, 5, 1)}) {
    const AnalysisReport r = analyze(cfg, {.samples = 12, .seed = 5});
    const json j = report_to_json(r);
    const json again = report_to_json(report_from_json(j));
    EXPECT_EQ(j, again);
    EXPECT_FALSE(has_float(j["config"]));
    EXPECT_FALSE(has_float(j["nvp"]));
    EXPECT_FALSE(has_float(j["lattice"]));
  }
}

TEST(Report, CfgAContents) {
  const AnalysisReport r = analyze(hopf_like(4), {});
  EXPECT_TRUE(r.validation.passed);
  EXPECT_EQ(r.k, 1u);
  EXPECT_EQ(r.nu, 2u);
  ASSERT_TRUE(r.nvp.has_value());
  EXPECT_TRUE(r.nvp->holds);
  EXPECT_EQ(std::get<BasisCertificate>(r.nvp->evidence).indices, (std::vector<std::size_t>{0, 1}));
  ASSERT_TRUE(r.lattice.has_value());
  EXPECT_EQ(r.lattice->quotient_generators, (ExactMatrix{{1, 0, 2}, {0, 1, -1}}));
  EXPECT_FALSE(r.action.has_value());
}

TEST(Report, NormalizesColumnOrder) {
  LVMBConfig cfg = hopf_like(4);
  cfg.lambda = ExactMatrix{{1, 1, 2, 0}};
  const AnalysisReport r = analyze(cfg, {});
  EXPECT_TRUE(r.validation.passed);
  ASSERT_TRUE(r.config.permutation.has_value());
  EXPECT_TRUE(r.lattice.has_value());
}

TEST(ParsePoint, Syntax) {
  const SamplePoint p = parse_point("1:2,-0.5,0:1e-3");
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p[0], Complex(1.0, 2.0));
  EXPECT_EQ(p[1], Complex(-0.5, 0.0));
  EXPECT_EQ(p[2], Complex(0.0, 1e-3));
  EXPECT_THROW(parse_point("1:x"), Error);
  EXPECT_THROW(parse_point(""), Error);
}

TEST(Commands, ExitCodes) {
  TempDir dir;
  const fs::path a = dir.write("a.json", kCfgA);
  const fs::path b = dir.write("b.json", kCfgB);
  const fs::path bad_shape = dir.write("c.json", kN4M2);
  const fs::path malformed = dir.write("d.json", "{\"n\": 4, ");
  const fs::path missing = dir.path() / "missing.json";
  std::ostringstream out;
  std::ostringstream err;

  EXPECT_EQ(cmd_validate(a, out, err), kExitOk);
  EXPECT_EQ(cmd_validate(b, out, err), kExitOk);
  EXPECT_EQ(cmd_validate(malformed, out, err), kExitInputError);
  EXPECT_EQ(cmd_validate(missing, out, err), kExitInputError);

  out.str("");
  EXPECT_EQ(cmd_validate(bad_shape, out, err), kExitSemanticFailure);
  const json v = json::parse(out.str());
  bool n_check_failed = false;
  for (const auto& c : v["checks"])
    if (c["name"] == "n>2m") n_check_failed = c["verdict"] == "fail";
  EXPECT_TRUE(n_check_failed);

  EXPECT_EQ(cmd_analyze(a, {}, out, err), kExitOk);
  EXPECT_EQ(cmd_certify(a, out, err), kExitOk);
  EXPECT_EQ(cmd_certify(b, out, err), kExitSemanticFailure);
  EXPECT_EQ(cmd_certify(malformed, out, err), kExitInputError);
  EXPECT_EQ(cmd_orbit(a, {.samples = 10}, out, err), kExitOk);
  EXPECT_EQ(cmd_orbit(bad_shape, {.samples = 10}, out, err), kExitSemanticFailure);
  EXPECT_EQ(cmd_gen(Family::random, {.n = 40}, out, err), kExitInputError);
}

TEST(Commands, AnalyzeReportsDeficiency) {
  TempDir dir;
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_analyze(dir.write("b.json", kCfgB), {}, out, err), kExitOk);
  const json j = json::parse(out.str());
  EXPECT_EQ(j["nvp"]["holds"], false);
  EXPECT_EQ(j["nvp"]["evidence"]["kind"], "deficiency");
  EXPECT_EQ(j["nvp"]["evidence"]["capable"], json::array({4}));
}

TEST(Commands, AnalyzeWithSamples) {
  TempDir dir;
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(cmd_analyze(dir.write("a.json", kCfgA), {.samples = 25, .seed = 3}, out, err), kExitOk);
  const json j = json::parse(out.str());
  ASSERT_TRUE(j.contains("action_checks"));
  EXPECT_LT(j["action_checks"]["max_group_law_residual"].get<double>(), 1e-9);
  EXPECT_EQ(j["action_checks"]["min_freeness_rank"], 1);
}

TEST(Commands, OrbitInlinePoint) {
  TempDir dir;
  std::ostringstream out;
  std::ostringstream err;
  OrbitOptions opts{.samples = 1};
  opts.points.push_back(parse_point("1,2,0,1"));
  ASSERT_EQ(cmd_orbit(dir.write("a.json", kCfgA), opts, out, err), kExitOk);
  opts.points.push_back(parse_point("1,2"));
  EXPECT_EQ(cmd_orbit(dir.write("a.json", kCfgA), opts, out, err), kExitInputError);
}

TEST(Commands, Batch) {
  TempDir dir;
  dir.write("a.json", kCfgA);
  dir.write("b.json", kCfgB);
  dir.write("c.json", kN4M2);
  dir.write("ignored.txt", "not json");
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_analyze_batch(dir.path(), {}, out, err), kExitSemanticFailure);
  const json j = json::parse(out.str());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["file"], "a.json");
  EXPECT_EQ(j[0]["exit_code"], 0);
  EXPECT_EQ(j[2]["exit_code"], 1);

  dir.write("d.json", "[");
  out.str("");
  EXPECT_EQ(cmd_analyze_batch(dir.path(), {}, out, err), kExitInputError);
}

}  // namespace
}  // namespace lvmb::cli
