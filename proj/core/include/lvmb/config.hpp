#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lvmb/exact.hpp"
#include "lvmb/index_set.hpp"

namespace lvmb {

/// Minimal antichain of coordinate index sets whose coordinate subspaces make up E.
/// Generators are kept sorted lexicographically; no generator contains another.
class SubspaceFamily {
 public:
  SubspaceFamily() = default;

  /// Drops duplicates and non-minimal members. Throws DomainError on an empty generator.
  static SubspaceFamily canonical(std::vector<IndexSet> generators);

  const std::vector<IndexSet>& generators() const { return generators_; }
  bool empty() const { return generators_.empty(); }
  /// Union of all generators.
  IndexSet support() const;

  friend bool operator==(const SubspaceFamily&, const SubspaceFamily&) = default;

 private:
  std::vector<IndexSet> generators_;
};

/// True when no member is empty, none repeats and none contains another.
bool is_antichain(const std::vector<IndexSet>& sets);

/// Column reordering: position j of the reordered data holds original column order[j] (0-based).
using Permutation = std::vector<std::size_t>;

bool is_permutation_of(const Permutation& p, std::size_t n);

using SamplePoint = std::vector<std::complex<double>>;

struct LVMBConfig {
  std::size_t n = 0;
  std::size_t m = 0;
  /// m x n; column i is Lambda_i.
  ExactMatrix lambda;
  SubspaceFamily excluded;
  std::optional<Permutation> permutation;
  /// Optional numeric sample points carried by the config document.
  std::vector<SamplePoint> samples;

  /// n - m - 1, the complex dimension of the quotient; 0 when n <= m + 1.
  std::size_t nu() const { return n > m + 1 ? n - m - 1 : 0; }

  /// Lambda with columns reordered by the stored permutation (identity if none).
  ExactMatrix effective_lambda() const;

  friend bool operator==(const LVMBConfig&, const LVMBConfig&) = default;
};

/// Lambda rows stacked over a row of ones: (m+1) x cols(lambda).
ExactMatrix bordered(const ExactMatrix& lambda);

/// Rank m+1 of the bordered matrix on the first m+1 columns after the stored permutation.
bool rank_condition_holds(const LVMBConfig& cfg);

/// Rank m+1 of the full bordered matrix.
bool full_rank_check(const LVMBConfig& cfg);

/// Lexicographically least admissible (m+1)-subset first, remaining columns in order.
/// Throws NoAdmissiblePermutation when full_rank_check fails.
Permutation find_admissible_permutation(const LVMBConfig& cfg);

/// Copy of cfg with the given permutation stored.
LVMBConfig with_permutation(LVMBConfig cfg, Permutation p);

enum class Verdict { pass, fail };

struct ValidationCheck {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string detail;
};

struct ValidationReport {
  bool passed = false;
  std::vector<ValidationCheck> checks;
  /// Geometric hypotheses taken on trust; never affect `passed`.
  std::vector<std::string> assumptions;
  std::size_t k = 0;
  std::size_t nu = 0;
  std::size_t capable = 0;

  const ValidationCheck* find(std::string_view name) const;
};

/// Runs every structural and rank check. Semantic failures are recorded, never thrown.
ValidationReport validate(const LVMBConfig& cfg);

}  // namespace lvmb
