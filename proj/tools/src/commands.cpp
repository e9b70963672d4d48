#include "lvmb/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "lvmb/arrangement.hpp"
#include "lvmb/config_io.hpp"
#include "lvmb/error.hpp"

namespace lvmb::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::syntax, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json error_json(const Error& e) { return {{"error", {{"kind", to_string(e.code())}, {"message", e.what()}}}}; }

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::syntax:
    case ErrorCode::domain:
    case ErrorCode::params_out_of_range: return kExitInputError;
    default: return kExitSemanticFailure;
  }
}

// Parse failures are input errors; everything downstream is semantic.
int report_error(const Error& e, std::ostream& out, std::ostream& err) {
  out << error_json(e).dump(2) << '\n';
  err << e.what() << '\n';
  return exit_code_for(e);
}

LVMBConfig load(const std::filesystem::path& path) { return parse_config(read_file(path), ParseMode::lenient); }

json analyze_file(const std::filesystem::path& path, const AnalyzeOptions& opts, int& code) {
  try {
    const AnalysisReport r = analyze(load(path), opts);
    code = r.validation.passed ? kExitOk : kExitSemanticFailure;
    return report_to_json(r);
  } catch (const Error& e) {
    code = exit_code_for(e);
    return error_json(e);
  }
}

}  // namespace

SamplePoint parse_point(const std::string& text) {
  SamplePoint p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      std::size_t used = 0;
      const std::string re_text = item.substr(0, colon);
      const double re = std::stod(re_text, &used);
      if (used != re_text.size()) throw std::invalid_argument(item);
      double im = 0.0;
      if (colon != std::string::npos) {
        const std::string im_text = item.substr(colon + 1);
        im = std::stod(im_text, &used);
        if (used != im_text.size()) throw std::invalid_argument(item);
      }
      p.emplace_back(re, im);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::syntax, "bad coordinate '" + item + "' (expected re or re:im)");
    }
  }
  if (p.empty()) throw Error(ErrorCode::syntax, "empty point");
  return p;
}

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  try {
    const ValidationReport v = validate(load(path));
    out << validation_to_json(v).dump(2) << '\n';
    return v.passed ? kExitOk : kExitSemanticFailure;
  } catch (const Error& e) {
    return report_error(e, out, err);
  }
}

int cmd_analyze(const std::filesystem::path& path, const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  int code = kExitOk;
  const json j = analyze_file(path, opts, code);
  out << j.dump(2) << '\n';
  if (j.contains("error")) err << j["error"]["message"].get<std::string>() << '\n';
  return code;
}

int cmd_analyze_batch(const std::filesystem::path& dir, const AnalyzeOptions& opts, std::ostream& out,
                      std::ostream& err) {
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  if (ec) {
    return report_error(Error(ErrorCode::syntax, "cannot list " + dir.string() + ": " + ec.message()), out, err);
  }
  std::sort(files.begin(), files.end());

  struct Outcome {
    json body;
    int code = kExitOk;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, [f, &opts] {
      Outcome o;
      o.body = analyze_file(f, opts, o.code);
      return o;
    }));
  }

  json results = json::array();
  int worst = kExitOk;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Outcome o = jobs[i].get();
    worst = std::max(worst, o.code);
    results.push_back({{"file", files[i].filename().string()}, {"exit_code", o.code}, {"result", std::move(o.body)}});
  }
  out << results.dump(2) << '\n';
  return worst;
}

int cmd_certify(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  try {
    LVMBConfig cfg = load(path);
    const NvpDecision d = decide_nvp(cfg);
    json j = nvp_to_json(d);
    bool verified = false;
    if (const auto* cert = std::get_if<BasisCertificate>(&d.evidence)) verified = verify_certificate(cfg, *cert);
    j["verified"] = verified;
    j["k"] = k_count(cfg);
    j["nu"] = cfg.nu();
    j["m"] = cfg.m;
    out << j.dump(2) << '\n';
    return d.holds && verified ? kExitOk : kExitSemanticFailure;
  } catch (const Error& e) {
    return report_error(e, out, err);
  }
}

int cmd_orbit(const std::filesystem::path& path, const OrbitOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    LVMBConfig cfg = load(path);
    const ValidationReport v = validate(cfg);
    if (!v.passed) {
      out << json{{"validation", validation_to_json(v)}}.dump(2) << '\n';
      return kExitSemanticFailure;
    }
    for (const auto& p : opts.points)
      if (p.size() != cfg.n) throw Error(ErrorCode::syntax, "inline point must have n coordinates");
    cfg.samples.insert(cfg.samples.begin(), opts.points.begin(), opts.points.end());
    const std::size_t count = std::max(opts.samples, cfg.samples.size());
    const ActionSummary s = run_action_checks(cfg, count, opts.seed, opts.tolerances);
    json j = action_to_json(s, cfg.m, k_count(cfg));
    j["toolkit"] = kToolkitName;
    j["version"] = toolkit_version();
    out << j.dump(2) << '\n';
    const bool ok = s.group_law_ok() && s.max_identity_residual < s.tolerances.residual &&
                    s.zero_pattern_preserved == s.samples && s.v_membership_preserved == s.samples && s.overflows == 0;
    return ok ? kExitOk : kExitSemanticFailure;
  } catch (const Error& e) {
    return report_error(e, out, err);
  }
}

int cmd_gen(Family family, const GenParams& params, std::ostream& out, std::ostream& err) {
  try {
    const LVMBConfig cfg = generate(family, params);
    json j = config_to_json(cfg);
    j["note"] = "combinatorially valid, geometric admissibility assumed";
    j["family"] = to_string(family);
    out << j.dump(2) << '\n';
    return kExitOk;
  } catch (const Error& e) {
    return report_error(e, out, err);
  }
}

}  // namespace lvmb::cli
