#pragma once

// Independent reference computations for the test suites. Nothing here calls the
// elimination routines or the subset logic under test.

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "lvmb/config.hpp"
#include "lvmb/exact.hpp"
#include "lvmb/index_set.hpp"

namespace lvmb::testing {

/// Laplace expansion along the first row.
inline GaussianRational cofactor_determinant(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  GaussianRational det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    ExactMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    const GaussianRational term = m(0, c) * cofactor_determinant(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

inline void for_each_subset(std::size_t n, std::size_t size, const std::function<bool(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> s;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) {
    if (s.size() == size) return f(s);
    for (std::size_t i = start; i < n; ++i) {
      s.push_back(i);
      if (!rec(i + 1)) return false;
      s.pop_back();
    }
    return true;
  };
  rec(0);
}

/// Largest r with a nonzero r x r minor.
inline std::size_t brute_force_rank(const ExactMatrix& m) {
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r) {
    bool found = false;
    for_each_subset(m.rows(), r, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), r, [&](const std::vector<std::size_t>& cols) {
        ExactMatrix sub(r, r);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(rows[i], cols[j]);
        found = !cofactor_determinant(sub).is_zero();
        return !found;
      });
      return !found;
    });
    if (found) return r;
  }
  return 0;
}

/// Entries drawn from a small range so that degenerate matrices are common.
inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long range = 2,
                                 bool complex = true) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 3);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Rational re = make_rational(num(rng), den(rng));
      Rational im = complex ? make_rational(num(rng), den(rng)) : Rational(0);
      m(r, c) = GaussianRational(re, im);
    }
  return m;
}

/// Builds a config from 1-based generator lists without canonicalizing.
inline LVMBConfig make_config(std::size_t n, std::size_t m, ExactMatrix lambda,
                              const std::vector<std::vector<std::size_t>>& generators) {
  LVMBConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.lambda = std::move(lambda);
  std::vector<IndexSet> gens;
  for (const auto& g : generators) gens.push_back(IndexSet::from_one_based(g));
  cfg.excluded = SubspaceFamily::canonical(std::move(gens));
  return cfg;
}

/// Point-sampling oracle for "the subspace {z_i = 0 : i in zeros} meets V": draws a point
/// whose zero coordinates are exactly `zeros` and tests it against each generator directly.
inline bool sampled_point_in_V(const LVMBConfig& cfg, const std::vector<std::size_t>& zeros_one_based,
                               std::mt19937_64& rng) {
  std::vector<long> z(cfg.n + 1, 0);
  std::uniform_int_distribution<long> coord(1, 1000);
  for (std::size_t i = 1; i <= cfg.n; ++i) z[i] = coord(rng) * (coord(rng) % 2 == 0 ? 1 : -1);
  for (std::size_t i : zeros_one_based) z[i] = 0;
  bool all_zero = true;
  for (std::size_t i = 1; i <= cfg.n; ++i) all_zero = all_zero && z[i] == 0;
  if (all_zero) return false;  // not a projective point
  for (IndexSet g : cfg.excluded.generators()) {
    bool inside = true;
    for (std::size_t i : g.one_based()) inside = inside && z[i] == 0;
    if (inside) return false;
  }
  return true;
}

/// All antichains of nonempty subsets of {0..n-1} (the empty family included).
inline std::vector<std::vector<IndexSet>> all_antichains(std::size_t n) {
  std::vector<IndexSet> subsets;
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) subsets.emplace_back(b);
  std::vector<std::vector<IndexSet>> out;
  std::vector<IndexSet> current;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == subsets.size()) {
      out.push_back(current);
      return;
    }
    rec(idx + 1);
    const IndexSet s = subsets[idx];
    for (IndexSet c : current)
      if (c.is_subset_of(s) || s.is_subset_of(c)) return;
    current.push_back(s);
    rec(idx + 1);
    current.pop_back();
  };
  rec(0);
  return out;
}

}  // namespace lvmb::testing
