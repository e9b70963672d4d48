#include "lvmb/nvp.hpp"

#include <algorithm>

#include "lvmb/error.hpp"

namespace lvmb {

ExactMatrix relation_space(const LVMBConfig& cfg) {
  ExactMatrix w(0, cfg.n);
  w.append_row(ExactVector(cfg.n, GaussianRational(1)));
  return w.stacked(cfg.lambda);
}

namespace {

std::size_t relation_rank_or_throw(const LVMBConfig& cfg, const ExactMatrix& w) {
  const std::size_t r = rank(w);
  if (r < cfg.m + 1) {
    throw Error(ErrorCode::relation_rank_deficient,
                "relation space has rank " + std::to_string(r) + " < m+1=" + std::to_string(cfg.m + 1));
  }
  return r;
}

}  // namespace

std::size_t rank_mod_relations(const LVMBConfig& cfg, std::span<const std::size_t> indices) {
  ExactMatrix w = relation_space(cfg);
  const std::size_t base = relation_rank_or_throw(cfg, w);
  IndexSet seen;
  for (std::size_t i : indices) {
    if (i >= cfg.n) throw Error(ErrorCode::domain, "index " + std::to_string(i + 1) + " exceeds n");
    if (seen.contains(i)) throw Error(ErrorCode::domain, "duplicate index " + std::to_string(i + 1));
    seen.insert(i);
    ExactVector e(cfg.n);
    e[i] = 1;
    w.append_row(e);
  }
  return rank(w) - base;
}

std::size_t rank_mod_relations(const LVMBConfig& cfg, std::span<const FundamentalField> fields) {
  ExactMatrix w = relation_space(cfg);
  const std::size_t base = relation_rank_or_throw(cfg, w);
  for (const auto& f : fields) {
    if (f.alpha.size() != cfg.n) throw Error(ErrorCode::domain, "field has wrong length");
    w.append_row(f.alpha);
  }
  return rank(w) - base;
}

BasisCertificate construct_certificate(const LVMBConfig& cfg) {
  const std::size_t nu = cfg.nu();
  BasisCertificate cert;
  std::size_t current = 0;
  for (std::size_t i : capable_indices(cfg).elements()) {
    if (current == nu) break;
    cert.indices.push_back(i);
    const std::size_t r = rank_mod_relations(cfg, cert.indices);
    if (r > current) {
      current = r;
    } else {
      cert.indices.pop_back();
    }
  }
  if (current < nu) {
    throw Error(ErrorCode::certificate_impossible,
                "greedy selection stalled at " + std::to_string(current) + " of nu=" + std::to_string(nu) +
                    " (k=" + std::to_string(k_count(cfg)) + ", m=" + std::to_string(cfg.m) + ")");
  }
  return cert;
}

bool verify_field_basis(const LVMBConfig& cfg, std::span<const FundamentalField> fields) {
  try {
    if (cfg.n <= cfg.m + 1 || fields.size() != cfg.nu()) return false;
    for (const auto& f : fields) {
      if (f.alpha.size() != cfg.n || !vanishing_nonempty(cfg, f)) return false;
    }
    return rank_mod_relations(cfg, fields) == cfg.nu();
  } catch (const Error&) {
    return false;
  }
}

bool verify_certificate(const LVMBConfig& cfg, const BasisCertificate& cert) {
  std::vector<std::size_t> sorted = cert.indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::vector<FundamentalField> fields;
  for (std::size_t i : cert.indices) {
    if (i >= cfg.n) return false;
    fields.push_back(FundamentalField::coordinate(cfg.n, i));
  }
  return verify_field_basis(cfg, fields);
}

NvpDecision decide_nvp(const LVMBConfig& cfg) {
  const ValidationReport report = validate(cfg);
  if (!report.passed) {
    std::string failed;
    for (const auto& c : report.checks)
      if (c.verdict == Verdict::fail) failed += (failed.empty() ? "" : ", ") + c.name;
    throw Error(ErrorCode::validation_failed, "failed checks: " + failed);
  }

  const std::size_t k = k_count(cfg);
  NvpDecision d;
  d.holds = k <= cfg.m + 1;
  d.affine_flag = k == cfg.m + 1;
  if (d.holds) {
    d.evidence = construct_certificate(cfg);
  } else {
    d.evidence = DeficiencyWitness{capable_indices(cfg), cfg.nu()};
  }
  return d;
}

}  // namespace lvmb
