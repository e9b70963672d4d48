#include "lvmb/action.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "lvmb/arrangement.hpp"
#include "lvmb/error.hpp"

namespace lvmb {

namespace {

// Largest |Re exponent| for which exp() stays comfortably inside double range.
constexpr double kMaxExponent = 700.0;

Eigen::MatrixXcd numeric_lambda(const LVMBConfig& cfg) {
  Eigen::MatrixXcd l(cfg.lambda.rows(), cfg.lambda.cols());
  for (std::size_t r = 0; r < cfg.lambda.rows(); ++r)
    for (std::size_t c = 0; c < cfg.lambda.cols(); ++c) {
      const auto& z = cfg.lambda(r, c);
      l(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = Complex(z.re().get_d(), z.im().get_d());
    }
  return l;
}

void check_dims(const LVMBConfig& cfg, const GroupElement& t, const ProjectivePoint& p) {
  if (t.t.size() != cfg.m) throw Error(ErrorCode::domain, "group element must have m entries");
  if (p.size() != cfg.n) throw Error(ErrorCode::domain, "point must have n coordinates");
}

std::size_t numerical_rank(const Eigen::MatrixXcd& a, double rank_tol) {
  if (a.size() == 0) return 0;
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& s = svd.singularValues();
  const double largest = s.size() > 0 ? s(0) : 0.0;
  if (largest == 0.0) return 0;
  std::size_t r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rank_tol * largest) ++r;
  return r;
}

}  // namespace

ProjectivePoint ProjectivePoint::from_coordinates(std::vector<Complex> coords) {
  IndexSet zeros;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == Complex(0.0, 0.0)) zeros.insert(i);
  return {std::move(coords), zeros};
}

ProjectivePoint::ProjectivePoint(std::vector<Complex> coords, IndexSet zero_support)
    : coords_(std::move(coords)), zero_support_(zero_support) {
  if (coords_.empty() || IndexSet::full(coords_.size()).is_subset_of(zero_support_)) {
    throw Error(ErrorCode::all_coordinates_zero, "projective point needs a nonzero coordinate");
  }
  for (std::size_t i : zero_support_.elements()) {
    if (i >= coords_.size() || coords_[i] != Complex(0.0, 0.0)) {
      throw Error(ErrorCode::domain, "declared zero coordinate is not zero");
    }
  }
}

ProjectivePoint act(const LVMBConfig& cfg, const GroupElement& t, const ProjectivePoint& p) {
  check_dims(cfg, t, p);
  const Eigen::MatrixXcd l = numeric_lambda(cfg);
  std::vector<Complex> out(cfg.n);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    if (p.zero_support().contains(i)) continue;
    Complex exponent = 0.0;
    for (std::size_t j = 0; j < cfg.m; ++j)
      exponent += l(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) * t.t[j];
    if (!std::isfinite(exponent.real()) || !std::isfinite(exponent.imag()) ||
        std::abs(exponent.real()) > kMaxExponent) {
      throw Error(ErrorCode::overflow, "exponent " + std::to_string(exponent.real()) + " at coordinate " +
                                           std::to_string(i + 1) + " is beyond double range");
    }
    out[i] = p.coords()[i] * std::exp(exponent);
  }
  return {std::move(out), p.zero_support()};
}

double chordal_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::domain, "points of different dimension");
  const auto& u = a.coords();
  const auto& v = b.coords();
  double wedge = 0.0;
  double nu = 0.0;
  double nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    nu += std::norm(u[i]);
    nv += std::norm(v[i]);
    for (std::size_t j = i + 1; j < u.size(); ++j) wedge += std::norm(u[i] * v[j] - u[j] * v[i]);
  }
  return std::sqrt(wedge / (nu * nv));
}

double group_law_residual(const LVMBConfig& cfg, const GroupElement& t1, const GroupElement& t2,
                          const ProjectivePoint& p) {
  check_dims(cfg, t1, p);
  check_dims(cfg, t2, p);
  GroupElement sum = t1;
  for (std::size_t j = 0; j < cfg.m; ++j) sum.t[j] += t2.t[j];
  return chordal_distance(act(cfg, sum, p), act(cfg, t1, act(cfg, t2, p)));
}

std::size_t local_freeness_check(const LVMBConfig& cfg, const ProjectivePoint& p, double rank_tol) {
  if (p.size() != cfg.n) throw Error(ErrorCode::domain, "point must have n coordinates");
  if (!point_in_V(cfg, p.zero_support())) {
    throw Error(ErrorCode::point_not_in_v, "zero pattern " + p.zero_support().to_string() + " lies in E");
  }
  const auto& z = p.coords();
  // Chart: the nonzero coordinate of largest modulus is set to 1.
  std::size_t chart = 0;
  for (std::size_t i = 0; i < cfg.n; ++i)
    if (!p.zero_support().contains(i) && std::abs(z[i]) > std::abs(z[chart])) chart = i;
  if (p.zero_support().contains(chart)) {
    for (std::size_t i = 0; i < cfg.n; ++i)
      if (!p.zero_support().contains(i)) chart = i;
  }

  const Eigen::MatrixXcd l = numeric_lambda(cfg);
  Eigen::MatrixXcd fields(static_cast<Eigen::Index>(cfg.m), static_cast<Eigen::Index>(cfg.n - 1));
  const auto ci = static_cast<Eigen::Index>(chart);
  for (Eigen::Index j = 0; j < fields.rows(); ++j) {
    Eigen::Index col = 0;
    for (std::size_t i = 0; i < cfg.n; ++i) {
      if (i == chart) continue;
      const auto ii = static_cast<Eigen::Index>(i);
      fields(j, col++) = (l(j, ii) - l(j, ci)) * (z[i] / z[chart]);
    }
  }
  return numerical_rank(fields, rank_tol);
}

NormalFormResult normal_form(const LVMBConfig& cfg, const ProjectivePoint& p, IndexSet targets,
                             std::optional<std::size_t> reference, Tolerances tol) {
  if (p.size() != cfg.n) throw Error(ErrorCode::domain, "point must have n coordinates");
  if (targets.empty()) throw Error(ErrorCode::domain, "normal form needs at least one target");
  if (!targets.is_subset_of(IndexSet::full(cfg.n))) throw Error(ErrorCode::domain, "target index exceeds n");
  if (!(targets & p.zero_support()).empty()) {
    throw Error(ErrorCode::target_at_zero, "targets " + (targets & p.zero_support()).to_string() + " are zero");
  }
  const std::size_t ref = reference.value_or(targets.extent() - 1);
  if (!targets.contains(ref)) throw Error(ErrorCode::domain, "reference must be one of the targets");

  std::vector<std::size_t> rows;
  for (std::size_t i : targets.elements())
    if (i != ref) rows.push_back(i);

  const Eigen::MatrixXcd l = numeric_lambda(cfg);
  const auto m = static_cast<Eigen::Index>(cfg.m);
  Eigen::MatrixXcd system(static_cast<Eigen::Index>(rows.size()), m);
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(rows.size()));
  const auto& z = p.coords();
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto r = static_cast<Eigen::Index>(k);
    system.row(r) = (l.col(static_cast<Eigen::Index>(rows[k])) - l.col(static_cast<Eigen::Index>(ref))).transpose();
    rhs(r) = std::log(z[ref] / z[rows[k]]);
  }

  Eigen::VectorXcd t = Eigen::VectorXcd::Zero(m);
  double residual = 0.0;
  std::size_t system_rank = 0;
  if (!rows.empty()) {
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeThinU | Eigen::ComputeThinV);
    t = svd.solve(rhs);
    residual = (system * t - rhs).norm() / std::max(1.0, rhs.norm());
    system_rank = numerical_rank(system, tol.rank);
  }
  if (residual > tol.residual) {
    throw Error(ErrorCode::inconsistent, "least-squares residual " + std::to_string(residual) + " above tolerance");
  }

  GroupElement g{std::vector<Complex>(t.data(), t.data() + t.size())};
  const ProjectivePoint moved = act(cfg, g, p);
  std::vector<Complex> scaled = moved.coords();
  const Complex pivot = scaled[ref];
  for (auto& c : scaled) c /= pivot;
  return {std::move(g), ProjectivePoint(std::move(scaled), p.zero_support()), cfg.m - system_rank, residual};
}

double max_relative_deviation(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (b[i] == Complex(0.0, 0.0)) continue;
    worst = std::max(worst, std::abs(a[i] - b[i]) / std::abs(b[i]));
  }
  return worst;
}

ActionSummary run_action_checks(const LVMBConfig& cfg, std::size_t samples, std::uint64_t seed, Tolerances tol) {
  ActionSummary s;
  s.samples = samples;
  s.seed = seed;
  s.tolerances = tol;
  s.min_freeness_rank = cfg.m;

  for (std::size_t trial = 0; trial < samples; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> phase(-M_PI, M_PI);
    auto random_group = [&] {
      GroupElement g = GroupElement::zero(cfg.m);
      for (auto& c : g.t) c = Complex(unit(rng), unit(rng));
      return g;
    };

    std::vector<Complex> coords(cfg.n);
    IndexSet zeros;
    if (trial < cfg.samples.size()) {
      coords = cfg.samples[trial];
      zeros = ProjectivePoint::from_coordinates(coords).zero_support();
    } else {
      for (auto& c : coords) c = std::polar(std::exp(unit(rng)), phase(rng));
      if (cfg.n > 1 && std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
        IndexSet candidate;
        for (std::size_t i = 0; i < cfg.n; ++i)
          if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) candidate.insert(i);
        if (!candidate.empty() && candidate != IndexSet::full(cfg.n) && point_in_V(cfg, candidate)) zeros = candidate;
      }
      for (std::size_t i : zeros.elements()) coords[i] = 0.0;
    }
    const ProjectivePoint p(coords, zeros);
    const GroupElement t1 = random_group();
    const GroupElement t2 = random_group();

    try {
      s.max_group_law_residual = std::max(s.max_group_law_residual, group_law_residual(cfg, t1, t2, p));
      s.max_identity_residual =
          std::max(s.max_identity_residual, chordal_distance(act(cfg, GroupElement::zero(cfg.m), p), p));
      GroupElement neg = t1;
      for (auto& c : neg.t) c = -c;
      s.max_inverse_residual =
          std::max(s.max_inverse_residual, chordal_distance(act(cfg, neg, act(cfg, t1, p)), p));

      const ProjectivePoint moved = act(cfg, t1, p);
      bool pattern = moved.zero_support() == p.zero_support();
      for (std::size_t i = 0; i < cfg.n; ++i)
        pattern = pattern && ((moved.coords()[i] == Complex(0.0, 0.0)) == p.zero_support().contains(i));
      if (pattern) ++s.zero_pattern_preserved;
      if (point_in_V(cfg, moved.zero_support()) == point_in_V(cfg, p.zero_support())) ++s.v_membership_preserved;

      if (point_in_V(cfg, p.zero_support())) {
        const std::size_t r = local_freeness_check(cfg, p, tol.rank);
        if (r == cfg.m) ++s.freeness_full_rank;
        s.min_freeness_rank = std::min(s.min_freeness_rank, r);
      }

      const auto nonzero = IndexSet(IndexSet::full(cfg.n).bits() & ~p.zero_support().bits()).elements();
      const std::size_t ref = nonzero.back();
      IndexSet targets{ref};
      for (std::size_t k = 0; k + 1 < nonzero.size() && targets.size() <= cfg.m; ++k) targets.insert(nonzero[k]);
      try {
        const NormalFormResult nf = normal_form(cfg, p, targets, ref, tol);
        ++s.normal_form_solved;
        if (std::find(s.solution_space_dims.begin(), s.solution_space_dims.end(), nf.solution_space_dim) ==
            s.solution_space_dims.end()) {
          s.solution_space_dims.push_back(nf.solution_space_dim);
        }
        std::vector<Complex> replay = act(cfg, nf.t, p).coords();
        const Complex pivot = replay[ref];
        for (auto& c : replay) c /= pivot;
        double err = max_relative_deviation(replay, nf.normalized.coords());
        for (std::size_t i : targets.elements()) err = std::max(err, std::abs(nf.normalized.coords()[i] - 1.0));
        s.max_normal_form_error = std::max(s.max_normal_form_error, err);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::inconsistent) throw;
        ++s.normal_form_inconsistent;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::overflow) throw;
      ++s.overflows;
    }
  }
  std::sort(s.solution_space_dims.begin(), s.solution_space_dims.end());
  return s;
}

}  // namespace lvmb
