#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lvmb/action.hpp"
#include "lvmb/cli/generate.hpp"
#include "lvmb/cli/report.hpp"

namespace lvmb::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitSemanticFailure = 1,
  kExitInputError = 2,
};

/// Parses "re:im,re:im,..." (a bare "re" means zero imaginary part). Throws SyntaxError.
SamplePoint parse_point(const std::string& text);

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err);
int cmd_analyze(const std::filesystem::path& path, const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
/// Analyzes every *.json file in dir concurrently; emits one JSON array, exit code is the worst.
int cmd_analyze_batch(const std::filesystem::path& dir, const AnalyzeOptions& opts, std::ostream& out,
                      std::ostream& err);
int cmd_certify(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

struct OrbitOptions {
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  std::vector<SamplePoint> points;
};

int cmd_orbit(const std::filesystem::path& path, const OrbitOptions& opts, std::ostream& out, std::ostream& err);
int cmd_gen(Family family, const GenParams& params, std::ostream& out, std::ostream& err);

}  // namespace lvmb::cli
