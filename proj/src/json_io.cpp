#include "sytkit/json_io.hpp"

#include <limits>

#include "sytkit/errors.hpp"

namespace sytkit {

namespace {

bool fits_int64(const Integer& v) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

}  // namespace

json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return v.convert_to<std::int64_t>();
  return v.str();
}

json partition_to_json(const Partition& lam) {
  json arr = json::array();
  for (int part : lam.parts()) arr.push_back(part);
  return arr;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw domain_error("partition JSON must be an array");
  std::vector<int> parts;
  for (const auto& item : j) {
    if (!item.is_number_integer())
      throw domain_error("partition JSON must hold integers");
    parts.push_back(item.get<int>());
  }
  return Partition(std::move(parts));
}

json tableau_to_json(const StandardTableau& t) {
  json rows = json::array();
  for (const auto& row : t.rows()) rows.push_back(row);
  return json{{"shape", partition_to_json(t.shape())}, {"rows", rows}};
}

StandardTableau tableau_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows"))
    throw domain_error("tableau JSON must be an object with rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<int> entries;
    for (const auto& e : row) {
      if (!e.is_number_integer())
        throw domain_error("tableau JSON must hold integer entries");
      entries.push_back(e.get<int>());
    }
    rows.push_back(std::move(entries));
  }
  StandardTableau t = StandardTableau::from_rows(std::move(rows));
  if (j.contains("shape") && partition_from_json(j.at("shape")) != t.shape())
    throw domain_error("tableau JSON shape does not match its rows");
  return t;
}

json qpolynomial_to_json(const QPolynomial& p) {
  bool all_fit = true;
  for (const Integer& c : p.coeffs()) {
    if (!fits_int64(c)) {
      all_fit = false;
      break;
    }
  }
  json coeffs = json::array();
  for (const Integer& c : p.coeffs())
    coeffs.push_back(all_fit ? json(c.convert_to<std::int64_t>())
                             : json(c.str()));
  return json{{"coeffs", coeffs}};
}

json moment_report_to_json(const MomentReport& r) {
  json j{{"shape", partition_to_json(r.shape)},
         {"stat", r.stat},
         {"mode", r.exact ? "exact" : "float"}};
  if (r.exact) {
    j["expectation"] = rational_str(r.expectation);
    j["variance"] = rational_str(r.variance);
    j["sigma1"] = rational_str(r.sigma1);
    j["sigma2"] = rational_str(r.sigma2);
    j["sigma3"] = rational_str(r.sigma3);
  } else {
    j["expectation"] = r.expectation_d;
    j["variance"] = r.variance_d;
    j["sigma1"] = r.sigma1_d;
    j["sigma2"] = r.sigma2_d;
    j["sigma3"] = r.sigma3_d;
  }
  return j;
}

json experiment_report_to_json(const ExperimentReport& r) {
  json j{{"shape", partition_to_json(r.shape)},
         {"stat", r.stat},
         {"samples", r.samples},
         {"seed", r.seed},
         {"stream", r.stream},
         {"delta", r.delta},
         {"epsilon", r.epsilon},
         {"t", r.t},
         {"row_bound_ok", r.row_bound_ok},
         {"growth_ok", r.growth_ok},
         {"mode", r.exact ? "exact" : "float"},
         {"empirical_mean", r.empirical_mean},
         {"empirical_variance", r.empirical_variance},
         {"outside_count", r.outside_count},
         {"outside_fraction", r.outside_fraction},
         {"chebyshev_bound", r.chebyshev_bound},
         {"var_over_e2", r.var_over_e2}};
  if (r.exact) {
    j["expectation"] = rational_str(r.expectation);
    j["variance"] = rational_str(r.variance);
  } else {
    j["expectation"] = r.expectation_d;
    j["variance"] = r.variance_d;
  }
  if (r.terms_available) {
    if (r.exact) {
      j["ratio_terms"] = json{{"square", rational_str(r.term_square)},
                              {"adjacent", rational_str(r.term_adjacent)},
                              {"constant", rational_str(r.term_constant)}};
    } else {
      j["ratio_terms"] = json{{"square", r.term_square_d},
                              {"adjacent", r.term_adjacent_d},
                              {"constant", r.term_constant_d}};
    }
  }
  return j;
}

json hecke_report_to_json(const HeckeExponentReport& r) {
  json j{{"shape", partition_to_json(r.shape)},
         {"maj_exponent", rational_str(r.maj_exponent)},
         {"des_exponent", rational_str(r.des_exponent)}};
  if (r.has_omega) j["omega_exponents"] = r.omega_exponents;
  return j;
}

}  // namespace sytkit
