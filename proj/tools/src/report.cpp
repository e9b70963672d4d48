#include "lvmb/cli/report.hpp"

#include "lvmb/arrangement.hpp"
#include "lvmb/config_io.hpp"
#include "lvmb/error.hpp"

#ifndef LVMB_VERSION
#define LVMB_VERSION "0.0.0"
#endif

namespace lvmb::cli {

using nlohmann::json;

std::string toolkit_version() { return LVMB_VERSION; }

namespace {

constexpr const char* kAdmissibilityLabel = "combinatorially valid, geometric admissibility assumed";

json indices_to_json(const std::vector<std::size_t>& zero_based) {
  json a = json::array();
  for (std::size_t i : zero_based) a.push_back(i + 1);
  return a;
}

std::vector<std::size_t> indices_from_json(const json& j) {
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(v.get<std::size_t>() - 1);
  return out;
}

}  // namespace

AnalysisReport analyze(const LVMBConfig& input, const AnalyzeOptions& opts) {
  AnalysisReport r;
  r.version = toolkit_version();
  r.seed = opts.seed;
  r.config = input;
  r.validation = validate(input);
  r.k = r.validation.k;
  r.nu = r.validation.nu;
  r.notes.emplace_back(kAdmissibilityLabel);
  if (!r.validation.passed) return r;

  if (!rank_condition_holds(r.config) && !r.config.permutation) {
    r.config = with_permutation(r.config, find_admissible_permutation(r.config));
    r.notes.emplace_back("columns reordered by an admissible permutation before computing A and B");
  }
  r.nvp = decide_nvp(r.config);
  r.lattice = lattice_presentation(r.config, opts.reading);
  r.lattice_rank_ok = lattice_rank_check(*r.lattice);
  if (opts.samples > 0) r.action = run_action_checks(r.config, opts.samples, opts.seed, opts.tolerances);
  return r;
}

json validation_to_json(const ValidationReport& v) {
  json checks = json::array();
  for (const auto& c : v.checks) {
    checks.push_back({{"name", c.name}, {"verdict", c.verdict == Verdict::pass ? "pass" : "fail"}, {"detail", c.detail}});
  }
  return {{"passed", v.passed},
          {"checks", std::move(checks)},
          {"assumptions", v.assumptions},
          {"counts", {{"k", v.k}, {"nu", v.nu}, {"capable", v.capable}}}};
}

ValidationReport validation_from_json(const json& j) {
  ValidationReport v;
  v.passed = j.at("passed").get<bool>();
  for (const auto& c : j.at("checks")) {
    v.checks.push_back({c.at("name").get<std::string>(),
                        c.at("verdict").get<std::string>() == "pass" ? Verdict::pass : Verdict::fail,
                        c.at("detail").get<std::string>()});
  }
  v.assumptions = j.at("assumptions").get<std::vector<std::string>>();
  const auto& counts = j.at("counts");
  v.k = counts.at("k").get<std::size_t>();
  v.nu = counts.at("nu").get<std::size_t>();
  v.capable = counts.at("capable").get<std::size_t>();
  return v;
}

json nvp_to_json(const NvpDecision& d) {
  json evidence;
  if (const auto* cert = std::get_if<BasisCertificate>(&d.evidence)) {
    evidence = {{"kind", "certificate"}, {"indices", indices_to_json(cert->indices)}};
  } else {
    const auto& w = std::get<DeficiencyWitness>(d.evidence);
    evidence = {{"kind", "deficiency"},
                {"capable", w.capable.one_based()},
                {"capable_count", w.capable_count()},
                {"required", w.required}};
  }
  return {{"holds", d.holds}, {"affine_flag", d.affine_flag}, {"evidence", std::move(evidence)}};
}

NvpDecision nvp_from_json(const json& j, std::size_t n) {
  NvpDecision d;
  d.holds = j.at("holds").get<bool>();
  d.affine_flag = j.at("affine_flag").get<bool>();
  const auto& e = j.at("evidence");
  if (e.at("kind").get<std::string>() == "certificate") {
    d.evidence = BasisCertificate{indices_from_json(e.at("indices"))};
  } else {
    const auto capable = IndexSet::from_one_based(e.at("capable").get<std::vector<std::size_t>>());
    if (!capable.is_subset_of(IndexSet::full(n))) throw Error(ErrorCode::domain, "witness index exceeds n");
    d.evidence = DeficiencyWitness{capable, e.at("required").get<std::size_t>()};
  }
  return d;
}

json lattice_to_json(const LatticePresentation& p, bool rank_ok) {
  return {{"reading", to_string(p.reading)},
          {"nu", p.nu},
          {"a_matrix", matrix_to_json(p.a_matrix)},
          {"b_literal", matrix_to_json(p.b_literal)},
          {"b_extended", matrix_to_json(p.b_extended)},
          {"product_literal", matrix_to_json(p.product_literal)},
          {"product_extended", matrix_to_json(p.product_extended)},
          {"quotient_generators", matrix_to_json(p.quotient_generators)},
          {"generators_are_columns", true},
          {"generator_count", p.generator_count()},
          {"literal_row_count", p.b_literal.rows()},
          {"lattice_rank_check", rank_ok}};
}

LatticePresentation lattice_from_json(const json& j, std::size_t m) {
  LatticePresentation p;
  p.reading = reading_from_string(j.at("reading").get<std::string>());
  p.nu = j.at("nu").get<std::size_t>();
  p.a_matrix = matrix_from_json(j.at("a_matrix"), m);
  p.b_literal = matrix_from_json(j.at("b_literal"), m);
  p.b_extended = matrix_from_json(j.at("b_extended"), m);
  p.product_literal = matrix_from_json(j.at("product_literal"), m);
  p.product_extended = matrix_from_json(j.at("product_extended"), m);
  p.quotient_generators = matrix_from_json(j.at("quotient_generators"), p.nu + m);
  return p;
}

json action_to_json(const ActionSummary& s, std::size_t m, std::size_t k) {
  return {{"samples", s.samples},
          {"seed", s.seed},
          {"tolerances", {{"residual", s.tolerances.residual}, {"rank", s.tolerances.rank}}},
          {"max_group_law_residual", s.max_group_law_residual},
          {"max_identity_residual", s.max_identity_residual},
          {"max_inverse_residual", s.max_inverse_residual},
          {"group_law_ok", s.group_law_ok()},
          {"zero_pattern_preserved", s.zero_pattern_preserved},
          {"v_membership_preserved", s.v_membership_preserved},
          {"freeness_full_rank", s.freeness_full_rank},
          {"min_freeness_rank", s.min_freeness_rank},
          {"normal_form_solved", s.normal_form_solved},
          {"normal_form_inconsistent", s.normal_form_inconsistent},
          {"max_normal_form_error", s.max_normal_form_error},
          {"overflows", s.overflows},
          {"solution_space_dims", s.solution_space_dims},
          {"subgroup_dim_formula", static_cast<long long>(m) - static_cast<long long>(k) - 1},
          {"subgroup_dim_note",
           "the count m-k-1 can be negative; solution_space_dims are measured kernel dimensions"}};
}

ActionSummary action_from_json(const json& j) {
  ActionSummary s;
  s.samples = j.at("samples").get<std::size_t>();
  s.seed = j.at("seed").get<std::uint64_t>();
  s.tolerances.residual = j.at("tolerances").at("residual").get<double>();
  s.tolerances.rank = j.at("tolerances").at("rank").get<double>();
  s.max_group_law_residual = j.at("max_group_law_residual").get<double>();
  s.max_identity_residual = j.at("max_identity_residual").get<double>();
  s.max_inverse_residual = j.at("max_inverse_residual").get<double>();
  s.zero_pattern_preserved = j.at("zero_pattern_preserved").get<std::size_t>();
  s.v_membership_preserved = j.at("v_membership_preserved").get<std::size_t>();
  s.freeness_full_rank = j.at("freeness_full_rank").get<std::size_t>();
  s.min_freeness_rank = j.at("min_freeness_rank").get<std::size_t>();
  s.normal_form_solved = j.at("normal_form_solved").get<std::size_t>();
  s.normal_form_inconsistent = j.at("normal_form_inconsistent").get<std::size_t>();
  s.max_normal_form_error = j.at("max_normal_form_error").get<double>();
  s.overflows = j.at("overflows").get<std::size_t>();
  s.solution_space_dims = j.at("solution_space_dims").get<std::vector<std::size_t>>();
  return s;
}

json report_to_json(const AnalysisReport& r) {
  json j;
  j["toolkit"] = kToolkitName;
  j["version"] = r.version;
  j["seed"] = r.seed;
  j["config"] = config_to_json(r.config);
  j["validation"] = validation_to_json(r.validation);
  j["k"] = r.k;
  j["nu"] = r.nu;
  j["notes"] = r.notes;
  if (r.nvp) j["nvp"] = nvp_to_json(*r.nvp);
  if (r.lattice) j["lattice"] = lattice_to_json(*r.lattice, r.lattice_rank_ok);
  if (r.action) j["action_checks"] = action_to_json(*r.action, r.config.m, r.k);
  return j;
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  r.version = j.at("version").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.config = config_from_json(j.at("config"), ParseMode::lenient);
  r.validation = validation_from_json(j.at("validation"));
  r.k = j.at("k").get<std::size_t>();
  r.nu = j.at("nu").get<std::size_t>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("nvp")) r.nvp = nvp_from_json(j.at("nvp"), r.config.n);
  if (j.contains("lattice")) {
    r.lattice = lattice_from_json(j.at("lattice"), r.config.m);
    r.lattice_rank_ok = j.at("lattice").at("lattice_rank_check").get<bool>();
  }
  if (j.contains("action_checks")) r.action = action_from_json(j.at("action_checks"));
  return r;
}

}  // namespace lvmb::cli
