#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "lvmb/config.hpp"

namespace lvmb::cli {

enum class Family { hopf_like, torus_free, random };

Family family_from_string(std::string_view name);
std::string_view to_string(Family f);

struct GenParams {
  std::size_t n = 4;
  std::size_t m = 1;
  std::size_t k = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxGenN = 16;
inline constexpr std::size_t kMaxGenM = 4;

/// m = 1, Lambda = (1, 2, ..., n-1, 0), E generated by {n} and {1, ..., n-1}.
LVMBConfig hopf_like(std::size_t n);

/// Random Gaussian-rational Lambda in general position (every (m+1)-subset of bordered
/// columns independent), exactly k singleton generators and a few random higher
/// generators on the remaining coordinates. Deterministic in seed.
LVMBConfig random_config(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed);

/// random_config with k = 0: E contains no coordinate hyperplane.
LVMBConfig torus_free(std::size_t n, std::size_t m, std::uint64_t seed);

/// Throws ParamsOutOfRange unless 1 <= m <= 4, 2m < n <= 16, k <= n.
LVMBConfig generate(Family family, const GenParams& params);

/// m x n Gaussian-rational matrix whose bordered matrix has every (m+1)-column minor nonzero.
ExactMatrix random_general_lambda(std::size_t n, std::size_t m, std::mt19937_64& rng);

/// True when every (m+1)-subset of bordered columns is independent.
bool in_general_position(const ExactMatrix& lambda);

}  // namespace lvmb::cli
