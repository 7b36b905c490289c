#include "rankone/io.hpp"

#include <fstream>
#include <sstream>

namespace rankone::io {

namespace {

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw ParseError("scalar must be a string such as \"3\" or \"-1/2\", got " + j.dump());
}

FieldSpec prime_spec(std::uint64_t p) {
  try {
    return FieldSpec::prime(p);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

FieldSpec parse_field_spec(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "Q" || s == "QQ" || s == "Rationals") return FieldSpec::rationals();
    for (const std::string prefix : {"F_", "GF_", "F"}) {
      if (s.rfind(prefix, 0) == 0 && s.size() > prefix.size()) {
        const auto digits = s.substr(prefix.size());
        if (digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 12) break;
        return prime_spec(std::stoull(digits));
      }
    }
    throw ParseError("unknown field '" + s + "'");
  }
  if (j.is_object()) {
    const auto kind = j.value("kind", std::string{});
    if (kind == "Rationals") return FieldSpec::rationals();
    if (kind == "PrimeField") {
      if (!j.contains("p") || !j.at("p").is_number_unsigned()) throw ParseError("PrimeField needs a positive integer p");
      return prime_spec(j.at("p").get<std::uint64_t>());
    }
    throw ParseError("field kind must be Rationals or PrimeField");
  }
  throw ParseError("field must be a string or an object");
}

json field_spec_to_json(const FieldSpec& spec) {
  if (!spec.is_prime_field()) return {{"kind", "Rationals"}};
  return {{"kind", "PrimeField"}, {"p", spec.p}};
}

ProblemFile parse_problem(const json& j) {
  if (!j.is_object()) throw ParseError("problem file must be a JSON object");
  for (const char* key : {"field", "matrix", "target"}) {
    if (!j.contains(key)) throw ParseError(std::string("problem file lacks \"") + key + "\"");
  }
  ProblemFile out;
  out.field = parse_field_spec(j.at("field"));

  const json& m = j.at("matrix");
  if (!m.is_array() || m.empty()) throw ParseError("matrix must be a non-empty array of rows");
  for (const auto& row : m) {
    if (!row.is_array() || row.size() != m.size()) throw ParseError("matrix must be square");
    auto& dst = out.matrix.emplace_back();
    for (const auto& x : row) dst.push_back(scalar_text(x));
  }

  const json& t = j.at("target");
  if (!t.is_array()) throw ParseError("target must be an array of coefficients");
  for (const auto& x : t) out.target.push_back(scalar_text(x));
  if (out.target.size() != out.matrix.size() + 1) {
    throw ParseError("target must have n + 1 = " + std::to_string(out.matrix.size() + 1) + " coefficients");
  }
  if (out.target.back() != "1") throw ParseError("target must be monic (last coefficient \"1\")");
  return out;
}

ProblemFile parse_problem_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

json problem_to_json(const ProblemFile& problem) {
  return {{"field", field_spec_to_json(problem.field)}, {"matrix", problem.matrix}, {"target", problem.target}};
}

json oracle_report_to_json(const OracleReport& report) {
  const PrimeField k(report.field);
  json blocks = json::array();
  for (const auto& [value, size] : report.representative.blocks) {
    blocks.push_back({{"lambda", k.render(value)}, {"size", size}});
  }
  json out = {{"field", report.field.name()},
              {"matrix", matrix_to_json(k, report.representative.matrix)},
              {"blocks", std::move(blocks)},
              {"achievable", report.achievable.size()},
              {"predicted", report.predicted.size()},
              {"agree", report.agree}};
  if (!report.agree) {
    json only_achievable = json::array();
    json only_predicted = json::array();
    for (const auto& q : report.achievable) {
      if (!report.predicted.contains(q)) only_achievable.push_back(poly_to_json(k, q));
    }
    for (const auto& q : report.predicted) {
      if (!report.achievable.contains(q)) only_predicted.push_back(poly_to_json(k, q));
    }
    out["only_achievable"] = std::move(only_achievable);
    out["only_predicted"] = std::move(only_predicted);
  }
  return out;
}

}  // namespace rankone::io
