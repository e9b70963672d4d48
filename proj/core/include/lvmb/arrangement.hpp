#pragma once

#include <cstddef>

#include "lvmb/config.hpp"
#include "lvmb/exact.hpp"
#include "lvmb/index_set.hpp"

namespace lvmb {

/// Coefficients of sum alpha_i z_i d/dz_i.
struct FundamentalField {
  ExactVector alpha;

  IndexSet support() const;

  static FundamentalField coordinate(std::size_t n, std::size_t i, const GaussianRational& scale = 1);
};

/// Indices i whose hyperplane {z_i = 0} lies in E, i.e. the singleton generators.
IndexSet hyperplane_indices(const LVMBConfig& cfg);

/// Complement of hyperplane_indices in {0..n-1}: coordinates whose field z_i d/dz_i vanishes somewhere in V.
IndexSet capable_indices(const LVMBConfig& cfg);

/// Number of coordinate hyperplanes contained in E.
std::size_t k_count(const LVMBConfig& cfg);

/// Whether the coordinate subspace {z_i = 0 : i in s} lies inside E.
/// Throws EmptySubset for s empty, DomainError for indices >= n.
bool subspace_contained_in_E(const LVMBConfig& cfg, IndexSet s);

/// Membership in V of a point with the given zero coordinates.
/// Throws AllCoordinatesZero when zero_support covers every coordinate.
bool point_in_V(const LVMBConfig& cfg, IndexSet zero_support);

/// Whether the field's vanishing locus V ∩ {z_i = 0 : alpha_i != 0} is nonempty.
/// A full-support field never vanishes on projective space. Throws ZeroField for alpha = 0.
bool vanishing_nonempty(const LVMBConfig& cfg, const FundamentalField& f);

}  // namespace lvmb
