#include "lvmb/lattice.hpp"

#include <algorithm>

#include "lvmb/error.hpp"

namespace lvmb {

std::string_view to_string(Reading r) { return r == Reading::literal ? "literal" : "extended"; }

Reading reading_from_string(std::string_view s) {
  if (s == "literal") return Reading::literal;
  if (s == "extended") return Reading::extended;
  throw Error(ErrorCode::domain, "unknown reading '" + std::string(s) + "'");
}

namespace {

// Rows Lambda_c - Lambda_1 for c in [first, last) (0-based columns of the effective Lambda).
ExactMatrix difference_rows(const ExactMatrix& lambda, std::size_t first, std::size_t last) {
  ExactMatrix out(0, lambda.rows());
  for (std::size_t c = first; c < last; ++c) {
    ExactVector row(lambda.rows());
    for (std::size_t r = 0; r < lambda.rows(); ++r) row[r] = lambda(r, c) - lambda(r, 0);
    out.append_row(row);
  }
  return out;
}

}  // namespace

ExactMatrix compute_a(const LVMBConfig& cfg) {
  if (cfg.n < cfg.m + 1) throw Error(ErrorCode::domain, "need at least m+1 columns");
  ExactMatrix a = difference_rows(cfg.effective_lambda(), 1, cfg.m + 1);
  if (rank(a) < cfg.m) throw Error(ErrorCode::singular_a, "A = (Lambda_2 - Lambda_1, ...) is singular");
  return a;
}

ExactMatrix compute_b(const LVMBConfig& cfg, Reading reading) {
  const std::size_t last = reading == Reading::literal ? cfg.n - 1 : cfg.n;
  const std::size_t first = cfg.m + 1;
  return difference_rows(cfg.effective_lambda(), first, std::max(first, last));
}

LatticePresentation lattice_presentation(const LVMBConfig& cfg, Reading reading) {
  LatticePresentation p;
  p.nu = cfg.nu();
  p.reading = reading;
  p.a_matrix = compute_a(cfg);
  const ExactMatrix a_inv = inverse(p.a_matrix);
  p.b_literal = compute_b(cfg, Reading::literal);
  p.b_extended = compute_b(cfg, Reading::extended);
  p.product_literal = p.b_literal.rows() == 0 ? ExactMatrix(0, cfg.m) : p.b_literal * a_inv;
  p.product_extended = p.b_extended * a_inv;

  p.quotient_generators = ExactMatrix(p.nu, p.nu + cfg.m);
  for (std::size_t r = 0; r < p.nu; ++r) {
    p.quotient_generators(r, r) = 1;
    for (std::size_t c = 0; c < cfg.m; ++c) p.quotient_generators(r, p.nu + c) = p.product_extended(r, c);
  }
  return p;
}

ExactMatrix realified_generators(const LatticePresentation& p) {
  const ExactMatrix& g = p.quotient_generators;
  ExactMatrix real(2 * g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) {
      real(r, c) = GaussianRational(g(r, c).re());
      real(g.rows() + r, c) = GaussianRational(g(r, c).im());
    }
  return real;
}

bool lattice_rank_check(const LatticePresentation& p) {
  return rank(realified_generators(p)) == p.generator_count();
}

}  // namespace lvmb
