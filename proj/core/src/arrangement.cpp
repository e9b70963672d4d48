#include "lvmb/arrangement.hpp"

#include <algorithm>

#include "lvmb/error.hpp"

namespace lvmb {

IndexSet FundamentalField::support() const {
  IndexSet s;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (!alpha[i].is_zero()) s.insert(i);
  return s;
}

FundamentalField FundamentalField::coordinate(std::size_t n, std::size_t i, const GaussianRational& scale) {
  FundamentalField f{ExactVector(n)};
  f.alpha.at(i) = scale;
  return f;
}

IndexSet hyperplane_indices(const LVMBConfig& cfg) {
  IndexSet s;
  for (IndexSet g : cfg.excluded.generators())
    if (g.size() == 1) s = s | g;
  return s & IndexSet::full(cfg.n);
}

IndexSet capable_indices(const LVMBConfig& cfg) {
  return IndexSet(IndexSet::full(cfg.n).bits() & ~hyperplane_indices(cfg).bits());
}

std::size_t k_count(const LVMBConfig& cfg) { return hyperplane_indices(cfg).size(); }

bool subspace_contained_in_E(const LVMBConfig& cfg, IndexSet s) {
  if (s.empty()) throw Error(ErrorCode::empty_subset, "coordinate subset is empty");
  if (!s.is_subset_of(IndexSet::full(cfg.n))) {
    throw Error(ErrorCode::domain, "subset " + s.to_string() + " exceeds n=" + std::to_string(cfg.n));
  }
  // A coordinate subspace is irreducible, so it lies in the finite union E iff it lies in one member.
  const auto& gens = cfg.excluded.generators();
  return std::any_of(gens.begin(), gens.end(), [s](IndexSet g) { return g.is_subset_of(s); });
}

bool point_in_V(const LVMBConfig& cfg, IndexSet zero_support) {
  if (IndexSet::full(cfg.n).is_subset_of(zero_support)) {
    throw Error(ErrorCode::all_coordinates_zero, "projective point needs a nonzero coordinate");
  }
  if (zero_support.empty()) return true;
  return !subspace_contained_in_E(cfg, zero_support);
}

bool vanishing_nonempty(const LVMBConfig& cfg, const FundamentalField& f) {
  const IndexSet s = f.support();
  if (s.empty()) throw Error(ErrorCode::zero_field, "field has no nonzero coefficient");
  if (IndexSet::full(cfg.n).is_subset_of(s)) return false;
  return !subspace_contained_in_E(cfg, s);
}

}  // namespace lvmb
