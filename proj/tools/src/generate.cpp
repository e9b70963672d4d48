#include "lvmb/cli/generate.hpp"

#include <algorithm>
#include <numeric>

#include "lvmb/error.hpp"

namespace lvmb::cli {

Family family_from_string(std::string_view name) {
  if (name == "hopf_like") return Family::hopf_like;
  if (name == "torus_free") return Family::torus_free;
  if (name == "random") return Family::random;
  throw Error(ErrorCode::params_out_of_range, "unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::hopf_like: return "hopf_like";
    case Family::torus_free: return "torus_free";
    case Family::random: return "random";
  }
  return "unknown";
}

namespace {

void check_range(std::size_t n, std::size_t m, std::size_t k) {
  if (m < 1 || m > kMaxGenM || n > kMaxGenN || n <= 2 * m || k > n) {
    throw Error(ErrorCode::params_out_of_range,
                "need 1 <= m <= 4, 2m < n <= 16, k <= n (got n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                    ", k=" + std::to_string(k) + ")");
  }
}

GaussianRational random_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

}  // namespace

bool in_general_position(const ExactMatrix& lambda) {
  const std::size_t n = lambda.cols();
  const std::size_t size = lambda.rows() + 1;
  if (size > n) return false;
  const ExactMatrix b = bordered(lambda);
  std::vector<std::size_t> subset(size);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  while (true) {
    if (rank(b.select_columns(subset)) < size) return false;
    std::size_t i = size;
    while (i > 0 && subset[i - 1] == n - size + (i - 1)) --i;
    if (i == 0) return true;
    ++subset[i - 1];
    for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
  }
}

ExactMatrix random_general_lambda(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  while (true) {
    ExactMatrix l(m, n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) l(r, c) = random_entry(rng);
    if (in_general_position(l)) return l;
  }
}

LVMBConfig hopf_like(std::size_t n) {
  check_range(n, 1, 0);
  LVMBConfig cfg;
  cfg.n = n;
  cfg.m = 1;
  cfg.lambda = ExactMatrix(1, n);
  for (std::size_t i = 0; i + 1 < n; ++i) cfg.lambda(0, i) = static_cast<long>(i + 1);
  IndexSet head = IndexSet::full(n - 1);
  cfg.excluded = SubspaceFamily::canonical({IndexSet{n - 1}, head});
  return cfg;
}

LVMBConfig random_config(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed) {
  check_range(n, m, k);
  std::mt19937_64 rng(seed);
  LVMBConfig cfg;
  cfg.n = n;
  cfg.m = m;
  cfg.lambda = random_general_lambda(n, m, rng);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<IndexSet> gens;
  for (std::size_t i = 0; i < k; ++i) gens.push_back(IndexSet{order[i]});

  const std::vector<std::size_t> rest(order.begin() + static_cast<std::ptrdiff_t>(k), order.end());
  if (rest.size() >= 2) {
    const auto extra = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    for (std::size_t e = 0; e < extra; ++e) {
      IndexSet g;
      for (std::size_t i : rest)
        if (std::bernoulli_distribution(0.5)(rng)) g.insert(i);
      while (g.size() < 2) g.insert(rest[std::uniform_int_distribution<std::size_t>(0, rest.size() - 1)(rng)]);
      gens.push_back(g);
    }
  }
  cfg.excluded = SubspaceFamily::canonical(std::move(gens));
  return cfg;
}

LVMBConfig torus_free(std::size_t n, std::size_t m, std::uint64_t seed) { return random_config(n, m, 0, seed); }

LVMBConfig generate(Family family, const GenParams& params) {
  switch (family) {
    case Family::hopf_like: return hopf_like(params.n);
    case Family::torus_free: return torus_free(params.n, params.m, params.seed);
    case Family::random: return random_config(params.n, params.m, params.k, params.seed);
  }
  throw Error(ErrorCode::params_out_of_range, "unknown family");
}

}  // namespace lvmb::cli
