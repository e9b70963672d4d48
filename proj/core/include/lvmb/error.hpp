#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lvmb {

enum class ErrorCode {
  syntax,
  domain,
  singular,
  no_admissible_permutation,
  empty_subset,
  all_coordinates_zero,
  zero_field,
  relation_rank_deficient,
  certificate_impossible,
  singular_a,
  overflow,
  point_not_in_v,
  inconsistent,
  target_at_zero,
  params_out_of_range,
  validation_failed,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the toolkit; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lvmb
