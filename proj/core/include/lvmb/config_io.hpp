#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "lvmb/config.hpp"
#include "lvmb/exact.hpp"

namespace lvmb {

// Exact numbers travel as [num, den] pairs; each integer is a JSON integer when it fits
// in 64 bits and a decimal string otherwise. Complex entries are [[re_num, re_den], [im_num, im_den]].

nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& q);
/// Accepts an integer or a [num, den] pair. Throws SyntaxError / DomainError.
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json gaussian_to_json(const GaussianRational& z);
/// Accepts an integer, a real [num, den] pair, or the full complex form.
GaussianRational gaussian_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ExactMatrix& m);
/// `cols` is needed to type a matrix with zero rows.
ExactMatrix matrix_from_json(const nlohmann::json& j, std::size_t cols);

enum class ParseMode {
  /// Enforces every domain constraint.
  strict,
  /// Skips the n > 2m and m >= 1 constraints so validation can report them.
  lenient,
};

LVMBConfig config_from_json(const nlohmann::json& j, ParseMode mode = ParseMode::strict);
/// Canonical form: lowest-terms rationals, sorted generators, 1-based indices.
nlohmann::json config_to_json(const LVMBConfig& cfg);

/// Throws SyntaxError on malformed text, DomainError on out-of-domain values.
LVMBConfig parse_config(std::string_view text, ParseMode mode = ParseMode::strict);
std::string serialize_config(const LVMBConfig& cfg);

}  // namespace lvmb
