#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "lvmb/arrangement.hpp"
#include "lvmb/config.hpp"
#include "lvmb/exact.hpp"
#include "lvmb/index_set.hpp"

namespace lvmb {

/// (m+1) x n matrix: the all-ones row followed by the rows of Lambda. Its row span W is
/// the kernel of the torus Lie algebra C^n -> Lie(G).
ExactMatrix relation_space(const LVMBConfig& cfg);

/// rank([W; e_i for i in indices]) - (m+1): how many independent directions the
/// coordinate fields z_i d/dz_i contribute modulo W. Indices are 0-based and distinct.
/// Throws RelationRankDeficient when rank(W) < m+1, DomainError on bad indices.
std::size_t rank_mod_relations(const LVMBConfig& cfg, std::span<const std::size_t> indices);

/// Same as rank_mod_relations for arbitrary fields.
std::size_t rank_mod_relations(const LVMBConfig& cfg, std::span<const FundamentalField> fields);

/// nu coordinate fields, each with nonempty vanishing locus, that form a basis modulo W.
struct BasisCertificate {
  std::vector<std::size_t> indices;  // 0-based
};

/// Converse evidence: only |capable| = n - k coordinate fields can vanish, fewer than nu.
struct DeficiencyWitness {
  IndexSet capable;
  std::size_t required = 0;

  std::size_t capable_count() const { return capable.size(); }
};

struct NvpDecision {
  bool holds = false;
  std::variant<BasisCertificate, DeficiencyWitness> evidence;
  /// k == m + 1.
  bool affine_flag = false;
};

/// Greedy scan of the capable indices in increasing order, keeping those that raise
/// rank_mod_relations. Throws CertificateImpossible if fewer than nu are found.
BasisCertificate construct_certificate(const LVMBConfig& cfg);

/// Independent re-check of a certificate; never throws.
bool verify_certificate(const LVMBConfig& cfg, const BasisCertificate& cert);

/// Verifies that `fields` is a basis modulo W made of fields with nonempty vanishing locus.
bool verify_field_basis(const LVMBConfig& cfg, std::span<const FundamentalField> fields);

/// Decides the non-zero vanishing property (k <= m+1) and attaches evidence.
/// Throws ValidationFailed when validate(cfg) does not pass.
NvpDecision decide_nvp(const LVMBConfig& cfg);

}  // namespace lvmb
