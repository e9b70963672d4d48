#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "lvmb/cli/commands.hpp"
#include "lvmb/error.hpp"

namespace {

using namespace lvmb::cli;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lvmb: exact analysis of LVMB configuration data"};
  app.set_version_flag("--version", toolkit_version());
  app.require_subcommand(1);

  std::string file;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double rank_tol = 1e-8;
  std::string reading = "extended";
  std::string batch_dir;
  std::vector<std::string> points;

  auto* validate = app.add_subcommand("validate", "Check the defining conditions of a configuration");
  validate->add_option("file", file, "Configuration document (JSON)")->required();

  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  analyze->add_option("file", file, "Configuration document (JSON)");
  analyze->add_option("--batch", batch_dir, "Analyze every .json file in a directory");
  analyze->add_option("--samples", samples, "Number of numeric action spot-checks");
  analyze->add_option("--seed", seed, "Seed for the spot-checks");
  analyze->add_option("--tol", tol, "Relative residual tolerance");
  analyze->add_option("--rank-tol", rank_tol, "Relative singular-value threshold");
  analyze->add_option("--reading", reading, "B matrix range")->check(CLI::IsMember({"literal", "extended"}));

  auto* certify = app.add_subcommand("certify", "Emit the vanishing-property certificate or witness");
  certify->add_option("file", file, "Configuration document (JSON)")->required();

  auto* orbit = app.add_subcommand("orbit", "Numeric checks of the C^m action");
  orbit->add_option("file", file, "Configuration document (JSON)")->required();
  orbit->add_option("--samples", samples, "Number of sample points")->required();
  orbit->add_option("--seed", seed, "Seed for random samples");
  orbit->add_option("--tol", tol, "Relative residual tolerance");
  orbit->add_option("--rank-tol", rank_tol, "Relative singular-value threshold");
  orbit->add_option("--point", points, "Inline point as re:im,re:im,... (repeatable)");

  std::string family;
  std::vector<std::uint64_t> positional;
  std::optional<std::size_t> gen_n, gen_m, gen_k;
  std::optional<std::uint64_t> gen_seed;
  auto* gen = app.add_subcommand("gen", "Generate an example configuration");
  gen->add_option("family", family, "hopf_like | torus_free | random")->required();
  gen->add_option("params", positional, "hopf_like n | torus_free n m seed | random n m k seed");
  gen->add_option("--n", gen_n, "Number of homogeneous coordinates");
  gen->add_option("--m", gen_m, "Number of commuting fields");
  gen->add_option("--k", gen_k, "Number of coordinate hyperplanes in E");
  gen->add_option("--seed", gen_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  const lvmb::Tolerances tolerances{tol, rank_tol};
  try {
    if (validate->parsed()) return cmd_validate(file, std::cout, std::cerr);
    if (analyze->parsed()) {
      AnalyzeOptions opts{samples, seed, tolerances, lvmb::reading_from_string(reading)};
      if (!batch_dir.empty()) return cmd_analyze_batch(batch_dir, opts, std::cout, std::cerr);
      if (file.empty()) {
        std::cerr << "analyze: a file or --batch directory is required\n";
        return kExitInputError;
      }
      return cmd_analyze(file, opts, std::cout, std::cerr);
    }
    if (certify->parsed()) return cmd_certify(file, std::cout, std::cerr);
    if (orbit->parsed()) {
      OrbitOptions opts{samples, seed, tolerances, {}};
      for (const auto& p : points) opts.points.push_back(parse_point(p));
      return cmd_orbit(file, opts, std::cout, std::cerr);
    }
    if (gen->parsed()) {
      const Family f = family_from_string(family);
      GenParams params;
      // Positional parameters follow each family's signature.
      std::vector<std::uint64_t*> slots;
      std::uint64_t n = params.n, m = params.m, k = params.k, s = params.seed;
      switch (f) {
        case Family::hopf_like: slots = {&n}; break;
        case Family::torus_free: slots = {&n, &m, &s}; break;
        case Family::random: slots = {&n, &m, &k, &s}; break;
      }
      if (positional.size() > slots.size()) {
        std::cerr << "gen: too many parameters for " << family << '\n';
        return kExitInputError;
      }
      for (std::size_t i = 0; i < positional.size(); ++i) *slots[i] = positional[i];
      params.n = gen_n.value_or(n);
      params.m = gen_m.value_or(m);
      params.k = gen_k.value_or(k);
      params.seed = gen_seed.value_or(s);
      return cmd_gen(f, params, std::cout, std::cerr);
    }
  } catch (const lvmb::Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == lvmb::ErrorCode::syntax || e.code() == lvmb::ErrorCode::domain ||
                   e.code() == lvmb::ErrorCode::params_out_of_range
               ? kExitInputError
               : kExitSemanticFailure;
  }
  return kExitInputError;
}
