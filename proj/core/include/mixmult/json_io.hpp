#pragma once

#include <nlohmann/json.hpp>

#include "mixmult/config.hpp"
#include "mixmult/monomial.hpp"
#include "mixmult/oracle.hpp"
#include "mixmult/toric.hpp"

// JSON schemas:
//   config: {"curves": [label...], "gram": [[int...]...],
//            "branches": [[index...]...], "weights": [int...]}
//           branches/weights may be omitted for a single branch of weight 1.
//   divisor: [rational...] with rationals as "p/q" strings or JSON integers.
//   oracle spec: {"terms": [{"a": int, "b": int, "c": int}...]}
// Malformed documents raise Error(SchemaError).

namespace mixmult::json_io {

using nlohmann::json;

Rational rational_from_json(const json& value);
json rational_to_json(const Rational& value);

ExceptionalConfig config_from_json(const json& doc);
json config_to_json(const ExceptionalConfig& config);

QDivisor divisor_from_json(const json& doc, std::size_t expected_size);
json divisor_to_json(const QDivisor& divisor);

MonomialValuation valuation_from_json(const json& doc);  // [a, b] or {"a":..,"b":..}
json valuation_to_json(const MonomialValuation& nu);

OracleFiltrationSpec spec_from_json(const json& doc);
json spec_to_json(const OracleFiltrationSpec& spec);

json ideal_to_json(const MonomialIdeal& ideal);

}  // namespace mixmult::json_io
