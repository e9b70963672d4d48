#include "lvmb/config_io.hpp"

#include <limits>

#include "lvmb/error.hpp"

namespace lvmb {

using nlohmann::json;

namespace {

[[noreturn]] void syntax(const std::string& what) { throw Error(ErrorCode::syntax, what); }

const json& field(const json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) syntax(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t count_from_json(const json& j, const char* name) {
  if (!j.is_number_integer()) syntax(std::string("'") + name + "' must be an integer");
  if (j.get<long long>() < 0) throw Error(ErrorCode::domain, std::string("'") + name + "' is negative");
  return j.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& j, const char* what) {
  if (!j.is_array()) syntax(std::string(what) + " must be an array of indices");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) syntax(std::string(what) + " entries must be integers");
    if (v.get<long long>() < 1) throw Error(ErrorCode::domain, std::string(what) + " indices are 1-based");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

}  // namespace

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Integer z;
    if (s.empty() || z.set_str(s, 10) != 0) syntax("invalid integer string '" + s + "'");
    return z;
  }
  syntax("expected an integer, got " + j.dump());
}

json rational_to_json(const Rational& q) {
  return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Rational(integer_from_json(j));
  if (!j.is_array() || j.size() != 2) syntax("expected a [num, den] pair, got " + j.dump());
  return make_rational(integer_from_json(j[0]), integer_from_json(j[1]));
}

json gaussian_to_json(const GaussianRational& z) {
  return json::array({rational_to_json(z.re()), rational_to_json(z.im())});
}

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_array()) {
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  }
  return {rational_from_json(j)};
}

json matrix_to_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(gaussian_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j, std::size_t cols) {
  if (!j.is_array()) syntax("matrix must be an array of rows");
  ExactMatrix m(0, cols);
  for (const auto& row : j) {
    if (!row.is_array()) syntax("matrix row must be an array");
    if (row.size() != cols) {
      throw Error(ErrorCode::domain, "matrix row has " + std::to_string(row.size()) + " entries, expected " +
                                         std::to_string(cols));
    }
    ExactVector v;
    v.reserve(cols);
    for (const auto& e : row) v.push_back(gaussian_from_json(e));
    m.append_row(v);
  }
  return m;
}

LVMBConfig config_from_json(const json& j, ParseMode mode) {
  if (!j.is_object()) syntax("configuration document must be a JSON object");
  LVMBConfig cfg;
  cfg.n = count_from_json(field(j, "n"), "n");
  cfg.m = count_from_json(field(j, "m"), "m");
  if (cfg.n == 0 || cfg.n > IndexSet::kMaxIndices) {
    throw Error(ErrorCode::domain, "n must lie in 1.." + std::to_string(IndexSet::kMaxIndices));
  }
  if (mode == ParseMode::strict) {
    if (cfg.m < 1) throw Error(ErrorCode::domain, "m must be at least 1");
    if (cfg.n <= 2 * cfg.m) {
      throw Error(ErrorCode::domain, "n > 2m violated (n=" + std::to_string(cfg.n) + ", m=" + std::to_string(cfg.m) + ")");
    }
  }

  const json& lambda = field(j, "lambda");
  if (!lambda.is_array()) syntax("'lambda' must be an array of rows");
  if (lambda.size() != cfg.m) {
    throw Error(ErrorCode::domain, "'lambda' has " + std::to_string(lambda.size()) + " rows, expected m=" +
                                       std::to_string(cfg.m));
  }
  cfg.lambda = matrix_from_json(lambda, cfg.n);

  const json& excluded = field(j, "excluded");
  if (!excluded.is_array()) syntax("'excluded' must be an array of index arrays");
  std::vector<IndexSet> gens;
  for (const auto& g : excluded) {
    const auto idx = index_list(g, "excluded generator");
    for (std::size_t i : idx)
      if (i > cfg.n) throw Error(ErrorCode::domain, "excluded index " + std::to_string(i) + " exceeds n");
    gens.push_back(IndexSet::from_one_based(idx));
  }
  cfg.excluded = SubspaceFamily::canonical(std::move(gens));

  if (const auto it = j.find("permutation"); it != j.end() && !it->is_null()) {
    auto p = index_list(*it, "permutation");
    for (auto& v : p) --v;
    if (!is_permutation_of(p, cfg.n)) throw Error(ErrorCode::domain, "'permutation' is not a permutation of 1..n");
    cfg.permutation = std::move(p);
  }

  if (const auto it = j.find("samples"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) syntax("'samples' must be an array of points");
    for (const auto& pt : *it) {
      if (!pt.is_array()) syntax("sample point must be an array of [re, im] pairs");
      if (pt.size() != cfg.n) throw Error(ErrorCode::domain, "sample point must have n coordinates");
      SamplePoint p;
      bool any_nonzero = false;
      for (const auto& z : pt) {
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
          syntax("sample coordinate must be a [re, im] pair of numbers");
        }
        p.emplace_back(z[0].get<double>(), z[1].get<double>());
        any_nonzero = any_nonzero || p.back() != 0.0;
      }
      if (!any_nonzero) throw Error(ErrorCode::domain, "sample point has all coordinates zero");
      cfg.samples.push_back(std::move(p));
    }
  }
  return cfg;
}

json config_to_json(const LVMBConfig& cfg) {
  json j;
  j["n"] = cfg.n;
  j["m"] = cfg.m;
  j["lambda"] = matrix_to_json(cfg.lambda);
  json excluded = json::array();
  for (IndexSet g : cfg.excluded.generators()) excluded.push_back(g.one_based());
  j["excluded"] = std::move(excluded);
  if (cfg.permutation) {
    json p = json::array();
    for (std::size_t v : *cfg.permutation) p.push_back(v + 1);
    j["permutation"] = std::move(p);
  }
  if (!cfg.samples.empty()) {
    json samples = json::array();
    for (const auto& pt : cfg.samples) {
      json coords = json::array();
      for (const auto& z : pt) coords.push_back(json::array({z.real(), z.imag()}));
      samples.push_back(std::move(coords));
    }
    j["samples"] = std::move(samples);
  }
  return j;
}

LVMBConfig parse_config(std::string_view text, ParseMode mode) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    syntax(e.what());
  }
  try {
    return config_from_json(j, mode);
  } catch (const json::exception& e) {
    syntax(e.what());
  }
}

std::string serialize_config(const LVMBConfig& cfg) { return config_to_json(cfg).dump(2); }

}  // namespace lvmb
