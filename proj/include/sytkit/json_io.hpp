#pragma once

#include <json.hpp>

#include "sytkit/moments.hpp"
#include "sytkit/partition.hpp"
#include "sytkit/qpolynomial.hpp"
#include "sytkit/tableau.hpp"

namespace sytkit {

using json = nlohmann::json;

// Number when the value fits a 64-bit signed integer, decimal string
// otherwise.
json integer_to_json(const Integer& v);

json partition_to_json(const Partition& lam);        // [4,4,2,1]
Partition partition_from_json(const json& j);

json tableau_to_json(const StandardTableau& t);      // {"shape":[..],"rows":[[..]]}
StandardTableau tableau_from_json(const json& j);

// {"coeffs":[c0,c1,...]}; numbers when every coefficient fits 64 bits,
// strings otherwise.
json qpolynomial_to_json(const QPolynomial& p);

json moment_report_to_json(const MomentReport& r);
json experiment_report_to_json(const ExperimentReport& r);
json hecke_report_to_json(const HeckeExponentReport& r);

}  // namespace sytkit
