#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lvmb/action.hpp"
#include "lvmb/config.hpp"
#include "lvmb/lattice.hpp"
#include "lvmb/nvp.hpp"

namespace lvmb::cli {

inline constexpr const char* kToolkitName = "lvmb-kit";
std::string toolkit_version();

struct AnalyzeOptions {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  Reading reading = Reading::extended;
};

struct AnalysisReport {
  LVMBConfig config;
  ValidationReport validation;
  std::size_t k = 0;
  std::size_t nu = 0;
  std::optional<NvpDecision> nvp;
  std::optional<LatticePresentation> lattice;
  bool lattice_rank_ok = false;
  std::optional<ActionSummary> action;
  std::string version;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

/// Validates, normalizes the column order when needed, then decides the vanishing
/// property and computes the lattice presentation. Stops after validation on failure.
AnalysisReport analyze(const LVMBConfig& cfg, const AnalyzeOptions& opts);

nlohmann::json validation_to_json(const ValidationReport& v);
ValidationReport validation_from_json(const nlohmann::json& j);

nlohmann::json nvp_to_json(const NvpDecision& d);
NvpDecision nvp_from_json(const nlohmann::json& j, std::size_t n);

nlohmann::json lattice_to_json(const LatticePresentation& p, bool rank_ok);
LatticePresentation lattice_from_json(const nlohmann::json& j, std::size_t m);

nlohmann::json action_to_json(const ActionSummary& s, std::size_t m, std::size_t k);
ActionSummary action_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

}  // namespace lvmb::cli
