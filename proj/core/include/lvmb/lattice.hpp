#pragma once

#include <cstddef>
#include <string_view>

#include "lvmb/config.hpp"
#include "lvmb/exact.hpp"

namespace lvmb {

/// How far the B matrix ranges. `literal` stops at Lambda_{n-1} (n-m-2 rows); `extended`
/// runs to Lambda_n (nu rows) so that [Id | B A^{-1}] has n-1 columns.
enum class Reading { literal, extended };

std::string_view to_string(Reading r);
/// Throws DomainError on anything other than "literal" / "extended".
Reading reading_from_string(std::string_view s);

/// G as C^nu modulo the subgroup spanned by the columns of quotient_generators.
/// Lambda columns are taken after the stored permutation.
struct LatticePresentation {
  std::size_t nu = 0;
  Reading reading = Reading::extended;
  /// m x m, row j = Lambda_{j+2} - Lambda_1.
  ExactMatrix a_matrix;
  /// (n-m-2) x m.
  ExactMatrix b_literal;
  /// nu x m.
  ExactMatrix b_extended;
  ExactMatrix product_literal;   // b_literal * a^{-1}
  ExactMatrix product_extended;  // b_extended * a^{-1}
  /// nu x (n-1): identity block followed by product_extended; columns are generators.
  ExactMatrix quotient_generators;

  std::size_t generator_count() const { return quotient_generators.cols(); }
};

/// Throws SingularA when the differences are dependent.
ExactMatrix compute_a(const LVMBConfig& cfg);
ExactMatrix compute_b(const LVMBConfig& cfg, Reading reading);

LatticePresentation lattice_presentation(const LVMBConfig& cfg, Reading reading = Reading::extended);

/// Generators as real 2nu-vectors (real parts over imaginary parts) have rational rank n-1.
bool lattice_rank_check(const LatticePresentation& p);

/// 2nu x (n-1) rational matrix used by lattice_rank_check.
ExactMatrix realified_generators(const LatticePresentation& p);

}  // namespace lvmb
