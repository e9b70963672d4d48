#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lvmb/config.hpp"
#include "lvmb/index_set.hpp"

namespace lvmb {

using Complex = std::complex<double>;

/// Homogeneous coordinates with an exact, declared zero pattern. Numeric underflow never
/// changes zero_support; only coordinates declared zero are zero.
class ProjectivePoint {
 public:
  /// Coordinates that compare equal to 0 become the declared zeros.
  static ProjectivePoint from_coordinates(std::vector<Complex> coords);

  /// Throws AllCoordinatesZero if every coordinate is declared zero,
  /// DomainError if a declared zero is not exactly 0.
  ProjectivePoint(std::vector<Complex> coords, IndexSet zero_support);

  const std::vector<Complex>& coords() const { return coords_; }
  IndexSet zero_support() const { return zero_support_; }
  std::size_t size() const { return coords_.size(); }

 private:
  std::vector<Complex> coords_;
  IndexSet zero_support_;
};

struct GroupElement {
  std::vector<Complex> t;

  static GroupElement zero(std::size_t m) { return {std::vector<Complex>(m)}; }
};

struct Tolerances {
  double residual = 1e-9;
  double rank = 1e-8;
};

/// T . [z] = [z_i exp(<Lambda_i, T>)]. Throws Overflow when |Re <Lambda_i, T>| exceeds
/// the double exponent range.
ProjectivePoint act(const LVMBConfig& cfg, const GroupElement& t, const ProjectivePoint& p);

/// Fubini-Study chordal distance |u ^ v| / (|u| |v|), computed from 2x2 minors so that
/// nearby points keep full relative precision.
double chordal_distance(const ProjectivePoint& a, const ProjectivePoint& b);

/// Distance between (t1 + t2) . p and t1 . (t2 . p).
double group_law_residual(const LVMBConfig& cfg, const GroupElement& t1, const GroupElement& t2,
                          const ProjectivePoint& p);

/// Numerical rank of the m x (n-1) matrix of xi_1..xi_m at p in an affine chart.
/// Throws PointNotInV.
std::size_t local_freeness_check(const LVMBConfig& cfg, const ProjectivePoint& p, double rank_tol = 1e-8);

struct NormalFormResult {
  GroupElement t;
  ProjectivePoint normalized;
  /// m minus the numerical rank of the solved system.
  std::size_t solution_space_dim = 0;
  double residual = 0.0;
};

/// Least-squares T with <Lambda_i - Lambda_ref, T> = log(z_ref / z_i) for i in targets,
/// principal branch. The normalized point is T . p rescaled so z_ref = 1.
/// reference defaults to the largest target. Throws TargetAtZero, Inconsistent.
NormalFormResult normal_form(const LVMBConfig& cfg, const ProjectivePoint& p, IndexSet targets,
                             std::optional<std::size_t> reference = std::nullopt, Tolerances tol = {});

/// Largest relative deviation |a_i - b_i| / |b_i| over the coordinates nonzero in b.
double max_relative_deviation(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// Aggregate of randomized spot checks over sample points.
struct ActionSummary {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  double max_group_law_residual = 0.0;
  double max_identity_residual = 0.0;
  double max_inverse_residual = 0.0;
  std::size_t zero_pattern_preserved = 0;
  std::size_t v_membership_preserved = 0;
  std::size_t freeness_full_rank = 0;
  std::size_t min_freeness_rank = 0;
  std::size_t normal_form_solved = 0;
  std::size_t normal_form_inconsistent = 0;
  double max_normal_form_error = 0.0;
  std::size_t overflows = 0;
  /// Distinct solution_space_dim values seen by normal_form.
  std::vector<std::size_t> solution_space_dims;

  bool group_law_ok() const { return max_group_law_residual < tolerances.residual; }
};

/// Runs `samples` trials; trial i draws from its own generator seeded with (seed, i), so
/// trials are reproducible and independent of evaluation order. Config samples are used
/// first, then random torus points and points with random zero patterns inside V.
ActionSummary run_action_checks(const LVMBConfig& cfg, std::size_t samples, std::uint64_t seed,
                                Tolerances tol = {});

}  // namespace lvmb
