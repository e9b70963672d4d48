#include "lvmb/config.hpp"

#include <algorithm>
#include <numeric>

#include "lvmb/arrangement.hpp"
#include "lvmb/error.hpp"

namespace lvmb {

bool is_antichain(const std::vector<IndexSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return false;
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].is_subset_of(sets[j])) return false;
  }
  return true;
}

SubspaceFamily SubspaceFamily::canonical(std::vector<IndexSet> generators) {
  if (std::any_of(generators.begin(), generators.end(), [](IndexSet g) { return g.empty(); })) {
    throw Error(ErrorCode::domain, "excluded family contains an empty generator");
  }
  std::sort(generators.begin(), generators.end(),
            [](IndexSet a, IndexSet b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  SubspaceFamily family;
  for (IndexSet g : generators) {
    const bool redundant = std::any_of(family.generators_.begin(), family.generators_.end(),
                                       [g](IndexSet kept) { return kept.is_subset_of(g); });
    if (!redundant) family.generators_.push_back(g);
  }
  std::sort(family.generators_.begin(), family.generators_.end());
  return family;
}

IndexSet SubspaceFamily::support() const {
  IndexSet s;
  for (IndexSet g : generators_) s = s | g;
  return s;
}

bool is_permutation_of(const Permutation& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

ExactMatrix LVMBConfig::effective_lambda() const {
  if (!permutation) return lambda;
  return lambda.select_columns(*permutation);
}

ExactMatrix bordered(const ExactMatrix& lambda) {
  ExactMatrix b = lambda;
  b.append_row(ExactVector(lambda.cols(), GaussianRational(1)));
  return b;
}

bool rank_condition_holds(const LVMBConfig& cfg) {
  const std::size_t size = cfg.m + 1;
  if (cfg.lambda.cols() < size) return false;
  std::vector<std::size_t> head(size);
  std::iota(head.begin(), head.end(), std::size_t{0});
  const ExactMatrix b = bordered(cfg.effective_lambda()).select_columns(head);
  return rank(b) == size;
}

bool full_rank_check(const LVMBConfig& cfg) { return rank(bordered(cfg.lambda)) == cfg.m + 1; }

Permutation find_admissible_permutation(const LVMBConfig& cfg) {
  const std::size_t n = cfg.lambda.cols();
  const std::size_t size = cfg.m + 1;
  if (size > n || !full_rank_check(cfg)) {
    throw Error(ErrorCode::no_admissible_permutation, "bordered matrix has rank below m+1");
  }
  const ExactMatrix b = bordered(cfg.lambda);

  // Lexicographic walk over (m+1)-subsets of {0..n-1}.
  std::vector<std::size_t> subset(size);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  while (true) {
    if (rank(b.select_columns(subset)) == size) {
      Permutation p = subset;
      for (std::size_t c = 0; c < n; ++c)
        if (std::find(subset.begin(), subset.end(), c) == subset.end()) p.push_back(c);
      return p;
    }
    std::size_t i = size;
    while (i > 0 && subset[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
  }
  // Unreachable when the full bordered matrix has rank m+1.
  throw Error(ErrorCode::no_admissible_permutation, "no admissible column subset found");
}

LVMBConfig with_permutation(LVMBConfig cfg, Permutation p) {
  if (!is_permutation_of(p, cfg.n)) throw Error(ErrorCode::domain, "not a permutation of the columns");
  cfg.permutation = std::move(p);
  return cfg;
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string perm_to_string(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i] + 1);
  return s + "]";
}

}  // namespace

ValidationReport validate(const LVMBConfig& cfg) {
  ValidationReport report;
  auto record = [&report](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok ? Verdict::pass : Verdict::fail, std::move(detail)});
    return ok;
  };

  record("n>2m", cfg.n > 2 * cfg.m,
         "n=" + std::to_string(cfg.n) + ", m=" + std::to_string(cfg.m));
  const bool shape_ok =
      record("lambda_shape",
             cfg.m >= 1 && cfg.n <= IndexSet::kMaxIndices && cfg.lambda.rows() == cfg.m &&
                 cfg.lambda.cols() == cfg.n,
             "lambda is " + std::to_string(cfg.lambda.rows()) + "x" + std::to_string(cfg.lambda.cols()) +
                 ", expected m x n with m >= 1");
  const bool indices_ok = cfg.n <= IndexSet::kMaxIndices &&
                          cfg.excluded.support().is_subset_of(IndexSet::full(std::min(cfg.n, IndexSet::kMaxIndices)));
  record("indices_in_range", indices_ok, "excluded generators use indices in 1..n");
  record("antichain", is_antichain(cfg.excluded.generators()),
         std::to_string(cfg.excluded.generators().size()) + " minimal generators");
  const bool perm_ok = !cfg.permutation || is_permutation_of(*cfg.permutation, cfg.n);
  record("permutation", perm_ok,
         cfg.permutation ? "stored " + perm_to_string(*cfg.permutation) : "none stored");

  if (!shape_ok || !perm_ok) {
    record("full_rank", false, "not evaluated: malformed lambda or permutation");
    record("rank_condition", false, "not evaluated: malformed lambda or permutation");
    record("hyperplane_columns", false, "not evaluated: malformed lambda or permutation");
  } else {
    const std::size_t full = rank(bordered(cfg.lambda));
    const bool full_ok = record("full_rank", full == cfg.m + 1,
                                "rank of bordered m+1 x n matrix is " + std::to_string(full));
    if (rank_condition_holds(cfg)) {
      record("rank_condition", true,
             cfg.permutation ? "holds on the first m+1 permuted columns" : "holds on columns 1..m+1");
    } else if (!cfg.permutation && full_ok) {
      const Permutation p = find_admissible_permutation(cfg);
      record("rank_condition", true, "holds after admissible permutation " + perm_to_string(p));
    } else {
      record("rank_condition", false, "bordered matrix on the first m+1 columns is singular");
    }

    if (indices_ok) {
      // With k <= m+1 the hyperplane coordinates must be normalizable to 1 by the action,
      // which needs their bordered columns to be independent.
      const IndexSet hyper = hyperplane_indices(cfg);
      if (hyper.size() <= cfg.m + 1) {
        const auto cols = hyper.elements();
        const std::size_t r = rank(bordered(cfg.lambda).select_columns(cols));
        record("hyperplane_columns", r == hyper.size(),
               "rank " + std::to_string(r) + " of bordered columns at hyperplane indices " + hyper.to_string());
      } else {
        record("hyperplane_columns", true, "not applicable: k > m+1");
      }
    } else {
      record("hyperplane_columns", false, "not evaluated: index out of range");
    }
  }

  if (indices_ok) {
    report.k = k_count(cfg);
    report.capable = cfg.n - report.k;
  }
  report.nu = cfg.nu();
  report.assumptions = {
      "free and proper holomorphic action of C^m on V (not verified)",
      "geometric admissibility of the excluded family E (not verified)",
  };
  report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const ValidationCheck& c) { return c.verdict == Verdict::pass; });
  return report;
}

}  // namespace lvmb
