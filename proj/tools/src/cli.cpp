#include "mixmult/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mixmult/config.hpp"
#include "mixmult/error.hpp"
#include "mixmult/json_io.hpp"
#include "mixmult/multiplicity.hpp"
#include "mixmult/oracle.hpp"
#include "mixmult/theorem_checks.hpp"
#include "mixmult/toric.hpp"
#include "mixmult/zariski.hpp"

namespace mixmult::cli {
namespace {

using nlohmann::json;
using namespace mixmult::json_io;

// Raised for problems that map to exit code 2.
struct UsageError {
  std::string kind;
  std::string message;
};

struct Outcome {
  Outcome() = default;
  Outcome(json r) : report(std::move(r)) {}  // NOLINT(google-explicit-constructor)

  json report;
  int code = kSuccess;
  std::string diagnostic;  // printed to err when non-empty
};

json read_input(const RunRequest& req) {
  if (req.input_path.empty()) throw UsageError{"SchemaError", "command needs --input"};
  std::ifstream in(req.input_path);
  if (!in) throw UsageError{"FileNotFound", req.input_path};
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError{"SchemaError", req.input_path + ": " + e.what()};
  }
}

// Config documents carry an optional "divisors" list next to the config fields.
struct ConfigInput {
  ValidatedConfig config;
  std::vector<QDivisor> divisors;
};

ConfigInput read_config(const json& doc) {
  ValidatedConfig config(config_from_json(doc));
  std::vector<QDivisor> divisors;
  if (doc.contains("divisors")) {
    const json& list = doc.at("divisors");
    if (!list.is_array()) throw Error(ErrorCode::SchemaError, "\"divisors\" must be an array of divisors");
    for (const auto& d : list) divisors.push_back(divisor_from_json(d, config.size()));
  }
  return {std::move(config), std::move(divisors)};
}

std::vector<QDivisor> divisors_or_primes(const ConfigInput& in) {
  if (!in.divisors.empty()) return in.divisors;
  std::vector<QDivisor> primes;
  for (std::size_t i = 0; i < in.config.size(); ++i) primes.push_back(QDivisor::prime(in.config.size(), i));
  return primes;
}

std::pair<QDivisor, QDivisor> divisor_pair(const ConfigInput& in) {
  if (in.divisors.size() != 2) throw Error(ErrorCode::SchemaError, "\"divisors\" must hold exactly two divisors");
  return {in.divisors[0], in.divisors[1]};
}

json index_list(const std::vector<std::size_t>& v) { return json(v); }

json matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json sequence_to_json(const std::vector<std::int64_t>& values, const char* name) {
  json seq = json::array();
  for (std::size_t k = 0; k < values.size(); ++k) seq.push_back({{"m", k + 1}, {name, values[k]}});
  return seq;
}

json fit_to_json(const LimitFit& fit) {
  return json{{"estimate", fit.estimate},
              {"quadratic", fit.quadratic},
              {"linear", fit.linear},
              {"constant", fit.constant},
              {"residual", fit.residual}};
}

OracleFiltrationSpec read_spec(const json& doc) { return spec_from_json(doc); }

// ---- commands ----

Outcome cmd_validate(const RunRequest& req) {
  const ExceptionalConfig config = config_from_json(read_input(req));
  const ValidationReport report = validate_config(config);
  json issues = json::array();
  std::string kinds;
  for (const auto& issue : report.issues) {
    issues.push_back({{"kind", std::string(to_string(issue.kind))},
                      {"indices", index_list(issue.indices)},
                      {"message", issue.message}});
    if (!kinds.empty()) kinds += ", ";
    kinds += to_string(issue.kind);
  }
  Outcome out;
  out.report = {{"curves", config.size()}, {"valid", report.ok()}, {"issues", std::move(issues)}};
  if (!report.ok()) {
    out.code = kFailure;
    out.diagnostic = kinds + ": " + report.issues.front().message;
  }
  return out;
}

Outcome cmd_decompose(const RunRequest& req) {
  const ConfigInput in = read_config(read_input(req));
  json list = json::array();
  for (const auto& d : divisors_or_primes(in)) {
    const ZariskiDecomposition z = decompose(in.config, d);
    list.push_back({{"divisor", divisor_to_json(z.divisor)},
                    {"delta", divisor_to_json(z.delta)},
                    {"negative_part", divisor_to_json(z.negative_part)},
                    {"null_support", index_list(z.null_support)}});
  }
  return {json{{"decompositions", std::move(list)}}};
}

Outcome cmd_volume(const RunRequest& req) {
  const ConfigInput in = read_config(read_input(req));
  json list = json::array();
  for (const auto& d : divisors_or_primes(in)) {
    list.push_back({{"divisor", divisor_to_json(d)},
                    {"volume", rational_to_json(volume(in.config, d))},
                    {"weighted_volume", rational_to_json(weighted_volume(in.config, d))}});
  }
  return {json{{"volumes", std::move(list)}}};
}

Outcome cmd_mixed(const RunRequest& req) {
  const ConfigInput in = read_config(read_input(req));
  const std::vector<QDivisor> divisors = divisors_or_primes(in);
  const MixedMultiplicityForm form = weighted_mixed(in.config, divisors);
  const MultiplicityPolynomial poly(form);
  json terms = json::array();
  for (const auto& t : poly.terms())
    terms.push_back({{"exponents", t.exponents}, {"coefficient", rational_to_json(t.coefficient)}});
  json deltas = json::array();
  for (const auto& d : form.deltas) deltas.push_back(divisor_to_json(d));
  json report{{"matrix", matrix_to_json(form.matrix)},
              {"deltas", std::move(deltas)},
              {"polynomial", std::move(terms)},
              {"weights_applied", form.weights_applied}};
  if (divisors.size() == 2)
    report["product_multiplicity"] = rational_to_json(form(0, 0) + 2 * form(0, 1) + form(1, 1));
  return {std::move(report)};
}

json minkowski_to_json(const MinkowskiReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"lhs", rational_to_json(c.lhs)},
                      {"rhs", rational_to_json(c.rhs)},
                      {"holds", c.holds()}});
  json equality = "strict";
  if (r.equality) equality = json{{"a", r.equality->a.get_str()}, {"b", r.equality->b.get_str()}};
  return json{{"e", {rational_to_json(r.e0), rational_to_json(r.e1), rational_to_json(r.e2)}},
              {"product_multiplicity", rational_to_json(r.product)},
              {"checks", std::move(checks)},
              {"all_hold", r.all_hold()},
              {"equality_case", std::move(equality)}};
}

Outcome cmd_minkowski(const RunRequest& req) {
  const ConfigInput in = read_config(read_input(req));
  const auto [d1, d2] = divisor_pair(in);
  const MinkowskiReport report = minkowski_report(in.config, d1, d2);
  Outcome out{minkowski_to_json(report)};
  if (!report.all_hold()) {
    out.code = kFailure;
    out.diagnostic = "InternalInvariantViolation: Minkowski inequality failed";
  }
  return out;
}

Outcome cmd_rees(const RunRequest& req) {
  const ConfigInput in = read_config(read_input(req));
  const auto [d1, d2] = divisor_pair(in);
  const ReesReport r = rees_check(in.config, d1, d2, req.depth);
  json certs = json::array();
  for (const auto& c : r.certificates)
    certs.push_back({{"n", c.n}, {"first", divisor_to_json(c.first)}, {"second", divisor_to_json(c.second)}});
  return {json{{"vol1", rational_to_json(r.vol1)},
               {"vol2", rational_to_json(r.vol2)},
               {"volumes_equal", r.volumes_equal},
               {"delta_equal", r.delta_equal},
               {"delta1", divisor_to_json(r.delta1)},
               {"delta2", divisor_to_json(r.delta2)},
               {"certificates_agree", r.certificates_agree()},
               {"depth", req.depth},
               {"certificates", std::move(certs)}}};
}

Outcome cmd_gamma(const RunRequest& req) {
  const ConfigInput in = read_config(read_input(req));
  json list = json::array();
  for (const auto& d : divisors_or_primes(in)) {
    const GammaCandidates g = gamma(in.config, d);
    json values = json::array();
    for (const auto& v : g.values) values.push_back(rational_to_json(v));
    list.push_back({{"divisor", divisor_to_json(d)},
                    {"gamma", std::move(values)},
                    {"status", g.experimental ? "experimental" : "proved"}});
  }
  return {json{{"candidates", std::move(list)}}};
}

Outcome cmd_oracle_colength(const RunRequest& req) {
  const OracleFiltrationSpec spec = read_spec(read_input(req));
  if (req.n) {
    const MonomialIdeal ideal = filtration_ideal(spec, *req.n);
    return {json{{"n", *req.n}, {"colength", colength(ideal)}, {"generators", ideal_to_json(ideal)}}};
  }
  return {json{{"window", req.window}, {"sequence", sequence_to_json(colength_sequence(spec, req.window), "length")}}};
}

Outcome cmd_oracle_fit(const RunRequest& req) {
  const OracleFiltrationSpec spec = read_spec(read_input(req));
  const auto lengths = colength_sequence(spec, req.window);
  json report = fit_to_json(limit_fit(lengths));
  report["window"] = req.window;
  report["sequence"] = sequence_to_json(lengths, "length");
  return {std::move(report)};
}

Outcome cmd_oracle_tau(const RunRequest& req) {
  if (!req.target) throw UsageError{"SchemaError", "oracle-tau needs --target a,b"};
  const OracleFiltrationSpec spec = read_spec(read_input(req));
  const MonomialValuation target(req.target->first, req.target->second);
  const auto tau = tau_sequence(spec, target, req.window);
  bool subadditive = true;
  for (std::size_t m = 1; m <= tau.size(); ++m)
    for (std::size_t n = 1; m * n <= tau.size(); ++n)
      if (tau[m * n - 1] > static_cast<std::int64_t>(n) * tau[m - 1]) subadditive = false;
  return {json{{"target", valuation_to_json(target)},
               {"window", req.window},
               {"subadditive", subadditive},
               {"sequence", sequence_to_json(tau, "tau")}}};
}

Outcome cmd_oracle_truncate(const RunRequest& req) {
  const OracleFiltrationSpec spec = read_spec(read_input(req));
  const auto lengths = truncate(spec, req.level).colengths(req.window);
  json report = fit_to_json(limit_fit(lengths));
  report["level"] = req.level;
  report["window"] = req.window;
  report["sequence"] = sequence_to_json(lengths, "length");
  return {std::move(report)};
}

json toric_to_json(const ToricConfig& toric) {
  json rays = json::array();
  for (const auto& r : toric.rays) rays.push_back(valuation_to_json(r));
  return json{{"config", config_to_json(toric.config)}, {"rays", std::move(rays)}, {"target_index", toric.target_index}};
}

Outcome cmd_toric_build(const RunRequest& req) {
  const json doc = read_input(req);
  if (!doc.is_object() || !doc.contains("targets") || !doc.at("targets").is_array())
    throw Error(ErrorCode::SchemaError, "toric input must be {\"targets\": [[a, b], ...]}");
  std::vector<MonomialValuation> targets;
  for (const auto& t : doc.at("targets")) targets.push_back(valuation_from_json(t));
  return {toric_to_json(toric_config(targets))};
}

Outcome cmd_bridge_check(const RunRequest& req) {
  const json doc = read_input(req);
  if (!doc.is_object() || !doc.contains("specs") || !doc.at("specs").is_array() || doc.at("specs").empty())
    throw Error(ErrorCode::SchemaError, "bridge input must be {\"specs\": [spec, ...]}");
  std::vector<OracleFiltrationSpec> specs;
  for (const auto& s : doc.at("specs")) specs.push_back(read_spec(s));
  const BridgeReport r = bridge_check(specs, req.window);
  json divisors = json::array();
  for (const auto& d : r.divisors) divisors.push_back(divisor_to_json(d));
  json form = json::array();
  for (const auto& row : r.form) {
    json cells = json::array();
    for (const auto& c : row)
      cells.push_back({{"exact", rational_to_json(c.exact)},
                       {"oracle", c.oracle},
                       {"relative_discrepancy", c.relative_discrepancy}});
    form.push_back(std::move(cells));
  }
  const bool within = r.max_relative_discrepancy <= req.tolerance;
  Outcome out{json{{"toric", toric_to_json(r.toric)},
                   {"divisors", std::move(divisors)},
                   {"form", std::move(form)},
                   {"window", req.window},
                   {"tolerance", req.tolerance},
                   {"max_relative_discrepancy", r.max_relative_discrepancy},
                   {"within_tolerance", within}}};
  if (!within) {
    out.code = kFailure;
    std::ostringstream msg;
    msg << "BridgeDiscrepancy: " << r.max_relative_discrepancy << " exceeds tolerance " << req.tolerance;
    out.diagnostic = msg.str();
  }
  return out;
}

using Handler = std::function<Outcome(const RunRequest&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate", cmd_validate},
      {"decompose", cmd_decompose},
      {"volume", cmd_volume},
      {"mixed", cmd_mixed},
      {"minkowski", cmd_minkowski},
      {"rees", cmd_rees},
      {"gamma", cmd_gamma},
      {"oracle-colength", cmd_oracle_colength},
      {"oracle-fit", cmd_oracle_fit},
      {"oracle-tau", cmd_oracle_tau},
      {"oracle-truncate", cmd_oracle_truncate},
      {"toric-build", cmd_toric_build},
      {"bridge-check", cmd_bridge_check},
  };
  return table;
}

// ---- rendering ----

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

bool is_flat_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return is_scalar(x); });
}

std::string flat_text(const json& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + scalar_text(v[k]);
  return s + ")";
}

std::string cell_text(const json& v) {
  if (is_scalar(v)) return scalar_text(v);
  if (is_flat_array(v)) return flat_text(v);
  return v.dump();
}

void render_markdown(const json& node, int depth, std::ostream& out) {
  const std::string heading(static_cast<std::size_t>(std::min(depth, 6)), '#');
  for (const auto& [key, value] : node.items()) {
    if (is_scalar(value) || is_flat_array(value)) {
      out << "- **" << key << "**: " << cell_text(value) << "\n";
    }
  }
  for (const auto& [key, value] : node.items()) {
    if (is_scalar(value) || is_flat_array(value)) continue;
    out << "\n" << heading << " " << key << "\n\n";
    if (value.is_object()) {
      render_markdown(value, depth + 1, out);
    } else if (!value.empty() && value.front().is_object()) {
      std::vector<std::string> cols;
      for (const auto& [k, v] : value.front().items()) cols.push_back(k);
      out << "|";
      for (const auto& c : cols) out << " " << c << " |";
      out << "\n|";
      for (std::size_t k = 0; k < cols.size(); ++k) out << "---|";
      out << "\n";
      for (const auto& row : value) {
        out << "|";
        for (const auto& c : cols) out << " " << (row.contains(c) ? cell_text(row.at(c)) : "") << " |";
        out << "\n";
      }
    } else {
      const std::size_t width = value.empty() || !value.front().is_array() ? 1 : value.front().size();
      out << "|";
      for (std::size_t k = 0; k < width; ++k) out << " " << k << " |";
      out << "\n|";
      for (std::size_t k = 0; k < width; ++k) out << "---|";
      out << "\n";
      for (const auto& row : value) {
        if (is_flat_array(row)) {
          out << "| " << [&] {
            std::string s;
            for (std::size_t k = 0; k < row.size(); ++k) s += (k ? " | " : "") + scalar_text(row[k]);
            return s;
          }() << " |\n";
        } else {
          out << "| ";
          for (const auto& c : row) out << cell_text(c) << " | ";
          out << "\n";
        }
      }
    }
  }
}

void emit(const RunRequest& req, const json& report, std::ostream& out) {
  switch (req.format) {
    case Format::Json:
      out << report.dump(2) << "\n";
      return;
    case Format::Markdown:
      out << "# mixmult " << req.command << "\n\n";
      render_markdown(report, 2, out);
      return;
    case Format::Csv: {
      const json& seq = report.at("sequence");
      std::string value_key;
      for (const auto& [k, v] : seq.front().items())
        if (k != "m") value_key = k;
      out << "m," << value_key << "\n";
      for (const auto& row : seq) out << row.at("m").dump() << "," << row.at(value_key).dump() << "\n";
      return;
    }
  }
}

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

int run(const RunRequest& req, std::ostream& out, std::ostream& err) {
  try {
    const auto it = handlers().find(req.command);
    if (it == handlers().end()) throw UsageError{"UnknownCommand", req.command};
    if (req.window < 1) throw UsageError{"SchemaError", "--window must be positive"};

    Outcome outcome = it->second(req);
    if (req.format == Format::Csv && !outcome.report.contains("sequence"))
      throw UsageError{"SchemaError", "--format csv applies to sequence-valued commands"};
    json report = std::move(outcome.report);
    report["command"] = req.command;
    emit(req, report, out);
    if (!outcome.diagnostic.empty()) err << "error: " << one_line(outcome.diagnostic) << "\n";
    return outcome.code;
  } catch (const UsageError& e) {
    err << "error: " << e.kind << ": " << one_line(e.message) << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return e.code() == ErrorCode::SchemaError ? kUsage : kFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: SchemaError: " << one_line(e.what()) << "\n";
    return kUsage;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Zariski decompositions and mixed multiplicities of divisorial filtrations", "mixmult"};
  RunRequest req;
  std::string format = "json";
  bool markdown = false;
  std::string target;

  app.add_option("command", req.command, "One of: validate, decompose, volume, mixed, minkowski, rees, gamma, "
                                         "oracle-colength, oracle-fit, oracle-tau, oracle-truncate, toric-build, "
                                         "bridge-check")
      ->required();
  app.add_option("-i,--input", req.input_path, "Input JSON document");
  app.add_option("--depth", req.depth, "Rees certificate depth")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--window", req.window, "Oracle window M")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "markdown", "csv"}));
  app.add_flag("--markdown", markdown, "Same as --format markdown");
  app.add_option("--n", req.n, "oracle-colength: single filtration index n");
  app.add_option("--target", target, "oracle-tau: target valuation a,b");
  app.add_option("--level", req.level, "oracle-truncate: truncation level a")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--tolerance", req.tolerance, "bridge-check: relative tolerance")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: SchemaError: " << one_line(e.what()) << "\n";
    return kUsage;
  }

  if (markdown) format = "markdown";
  req.format = format == "markdown" ? Format::Markdown : format == "csv" ? Format::Csv : Format::Json;
  if (!target.empty()) {
    std::int64_t a = 0;
    std::int64_t b = 0;
    char comma = 0;
    std::istringstream in(target);
    if (!(in >> a >> comma >> b) || comma != ',' || !in.eof()) {
      err << "error: SchemaError: --target must be a,b\n";
      return kUsage;
    }
    req.target = {a, b};
  }
  return run(req, out, err);
}

}  // namespace mixmult::cli
