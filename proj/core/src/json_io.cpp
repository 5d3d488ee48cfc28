#include "mixmult/json_io.hpp"

#include "mixmult/error.hpp"

namespace mixmult::json_io {
namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) schema(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::int64_t as_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) schema(what + " must be an integer");
  return value.get<std::int64_t>();
}

}  // namespace

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(static_cast<long>(value.get<std::int64_t>()));
  if (value.is_string()) return parse_rational(value.get<std::string>());
  schema("rational must be a \"p/q\" string or an integer, got " + value.dump());
}

json rational_to_json(const Rational& value) { return to_string(value); }

ExceptionalConfig config_from_json(const json& doc) {
  const json& gram_doc = field(doc, "gram");
  if (!gram_doc.is_array()) schema("\"gram\" must be an array of rows");
  const std::size_t s = gram_doc.size();
  Matrix<std::int64_t> gram(s, s);
  for (std::size_t i = 0; i < s; ++i) {
    if (!gram_doc[i].is_array() || gram_doc[i].size() != s) schema("\"gram\" must be square");
    for (std::size_t j = 0; j < s; ++j) gram(i, j) = as_int(gram_doc[i][j], "gram entry");
  }

  std::vector<std::string> labels;
  if (doc.contains("curves")) {
    const json& curves = doc.at("curves");
    if (!curves.is_array() || curves.size() != s) schema("\"curves\" must list one label per gram row");
    for (const auto& c : curves) labels.push_back(c.is_string() ? c.get<std::string>() : c.dump());
  } else {
    for (std::size_t i = 0; i < s; ++i) labels.push_back("E" + std::to_string(i + 1));
  }

  std::vector<ExceptionalConfig::Branch> branches;
  if (doc.contains("branches")) {
    const json& bdoc = doc.at("branches");
    if (!bdoc.is_array()) schema("\"branches\" must be an array of index arrays");
    for (const auto& b : bdoc) {
      if (!b.is_array()) schema("each branch must be an array of curve indices");
      ExceptionalConfig::Branch branch;
      for (const auto& idx : b) {
        const auto v = as_int(idx, "branch index");
        if (v < 0) schema("branch index must be nonnegative");
        branch.push_back(static_cast<std::size_t>(v));
      }
      branches.push_back(std::move(branch));
    }
  } else {
    ExceptionalConfig::Branch all;
    for (std::size_t i = 0; i < s; ++i) all.push_back(i);
    branches.push_back(std::move(all));
  }

  std::vector<std::int64_t> weights;
  if (doc.contains("weights")) {
    const json& wdoc = doc.at("weights");
    if (!wdoc.is_array()) schema("\"weights\" must be an array of integers");
    for (const auto& w : wdoc) weights.push_back(as_int(w, "weight"));
  } else {
    weights.assign(branches.size(), 1);
  }
  return ExceptionalConfig(std::move(labels), std::move(gram), std::move(branches), std::move(weights));
}

json config_to_json(const ExceptionalConfig& config) {
  json gram = json::array();
  for (std::size_t i = 0; i < config.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < config.size(); ++j) row.push_back(config.gram(i, j));
    gram.push_back(std::move(row));
  }
  return json{{"curves", config.curve_labels()},
              {"gram", std::move(gram)},
              {"branches", config.branches()},
              {"weights", config.weights()}};
}

QDivisor divisor_from_json(const json& doc, std::size_t expected_size) {
  if (!doc.is_array()) schema("divisor must be an array of rationals");
  if (doc.size() != expected_size) {
    throw Error(ErrorCode::DimensionMismatch, "divisor has " + std::to_string(doc.size()) +
                                                  " coefficients, config has " + std::to_string(expected_size) +
                                                  " curves");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : doc) coeffs.push_back(rational_from_json(c));
  return QDivisor(std::move(coeffs));
}

json divisor_to_json(const QDivisor& divisor) {
  json out = json::array();
  for (const auto& c : divisor.coefficients()) out.push_back(to_string(c));
  return out;
}

MonomialValuation valuation_from_json(const json& doc) {
  if (doc.is_array() && doc.size() == 2) return MonomialValuation(as_int(doc[0], "a"), as_int(doc[1], "b"));
  if (doc.is_object()) return MonomialValuation(as_int(field(doc, "a"), "a"), as_int(field(doc, "b"), "b"));
  schema("valuation must be [a, b] or {\"a\": a, \"b\": b}");
}

json valuation_to_json(const MonomialValuation& nu) { return json::array({nu.a(), nu.b()}); }

OracleFiltrationSpec spec_from_json(const json& doc) {
  const json& terms = field(doc, "terms");
  if (!terms.is_array() || terms.empty()) schema("\"terms\" must be a non-empty array");
  OracleFiltrationSpec spec;
  for (const auto& t : terms) {
    const auto a = as_int(field(t, "a"), "a");
    const auto b = as_int(field(t, "b"), "b");
    if (a < 1 || b < 1) schema("valuation weights a, b must be positive");
    spec.terms.push_back({MonomialValuation(a, b), as_int(field(t, "c"), "c")});
  }
  try {
    spec.validate();
  } catch (const Error& e) {
    schema(e.what());
  }
  return spec;
}

json spec_to_json(const OracleFiltrationSpec& spec) {
  json terms = json::array();
  for (const auto& t : spec.terms)
    terms.push_back({{"a", t.valuation.a()}, {"b", t.valuation.b()}, {"c", t.coefficient}});
  return json{{"terms", std::move(terms)}};
}

json ideal_to_json(const MonomialIdeal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(json::array({g.i, g.j}));
  return out;
}

}  // namespace mixmult::json_io
