#include "lvmb/error.hpp"

namespace lvmb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax: return "SyntaxError";
    case ErrorCode::domain: return "DomainError";
    case ErrorCode::singular: return "Singular";
    case ErrorCode::no_admissible_permutation: return "NoAdmissiblePermutation";
    case ErrorCode::empty_subset: return "EmptySubset";
    case ErrorCode::all_coordinates_zero: return "AllCoordinatesZero";
    case ErrorCode::zero_field: return "ZeroField";
    case ErrorCode::relation_rank_deficient: return "RelationRankDeficient";
    case ErrorCode::certificate_impossible: return "CertificateImpossible";
    case ErrorCode::singular_a: return "SingularA";
    case ErrorCode::overflow: return "Overflow";
    case ErrorCode::point_not_in_v: return "PointNotInV";
    case ErrorCode::inconsistent: return "Inconsistent";
    case ErrorCode::target_at_zero: return "TargetAtZero";
    case ErrorCode::params_out_of_range: return "ParamsOutOfRange";
    case ErrorCode::validation_failed: return "ValidationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace lvmb
