#ifndef RANKONE_IO_HPP
#define RANKONE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "rankone/assign.hpp"
#include "rankone/errors.hpp"
#include "rankone/field.hpp"
#include "rankone/jordan.hpp"
#include "rankone/linalg.hpp"
#include "rankone/oracle.hpp"
#include "rankone/poly.hpp"

namespace rankone::io {

using json = nlohmann::json;

/// A problem as read from disk, scalars still in text form.
///
///   {"field": "Q" | "F_5" | {"kind": "PrimeField", "p": 5},
///    "matrix": [["0", "1"], ["0", "0"]],
///    "target": ["1", "0", "1"]}          // ascending, monic
struct ProblemFile {
  FieldSpec field;
  std::vector<std::vector<std::string>> matrix;
  std::vector<std::string> target;
};

FieldSpec parse_field_spec(const json& j);
json field_spec_to_json(const FieldSpec& spec);

/// Structural validation only: square matrix, target of length n + 1 ending
/// in a one. Scalars are parsed later against the field. Throws ParseError.
ProblemFile parse_problem(const json& j);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile load_problem(const std::string& path);

json problem_to_json(const ProblemFile& problem);

template <ExactField K>
Mat<K> parse_matrix(const K& k, const std::vector<std::vector<std::string>>& grid) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  Mat<K> out = zeros(k, n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = grid[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != n) throw ParseError("matrix is not square");
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = k.parse(row[static_cast<std::size_t>(j)]);
  }
  return out;
}

template <ExactField K>
Poly<K> parse_poly(const K& k, const std::vector<std::string>& coeffs) {
  std::vector<typename K::Scalar> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(k.parse(s));
  return Poly<K>(k, std::move(c));
}

template <ExactField K>
json poly_to_json(const K& k, const Poly<K>& f) {
  json out = json::array();
  for (const auto& c : f.coeffs()) out.push_back(k.render(c));
  return out;
}

template <ExactField K>
json matrix_to_json(const K& k, const Mat<K>& x) {
  json out = json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < x.cols(); ++j) row.push_back(k.render(x(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

template <ExactField K>
json vector_to_json(const K& k, const Vec<K>& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(k.render(v(i)));
  return out;
}

template <ExactField K>
json report_to_json(const K& k, const FeasibilityReport<K>& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"lambda", k.render(r.eigenvalue)},
                    {"m_q", r.target_multiplicity},
                    {"alg", r.algebraic},
                    {"j", r.largest},
                    {"deficit", r.deficit},
                    {"satisfied", r.satisfied}});
  }
  return {{"verdict", report.verdict ? "feasible" : "infeasible"}, {"rows", std::move(rows)}};
}

template <ExactField K>
json jordan_to_json(const K& k, const JordanDecomposition<K>& jd) {
  json layout = json::array();
  for (const auto& b : jd.layout) {
    layout.push_back({{"lambda", k.render(b.eigenvalue)}, {"size", b.size}, {"start", b.start}, {"lead", b.lead}});
  }
  return {{"J", matrix_to_json(k, jd.J)},
          {"P", matrix_to_json(k, jd.P)},
          {"Pinv", matrix_to_json(k, jd.Pinv)},
          {"layout", std::move(layout)}};
}

template <ExactField K>
json perturbation_to_json(const K& k, const Perturbation<K>& p) {
  return {{"v", vector_to_json(k, p.v)}, {"w", vector_to_json(k, p.w)}, {"B", matrix_to_json(k, p.B)}};
}

/// Inverse of perturbation_to_json.
template <ExactField K>
Perturbation<K> parse_perturbation(const K& k, const json& j) {
  try {
    Perturbation<K> out;
    const auto v = j.at("v").get<std::vector<std::string>>();
    const auto w = j.at("w").get<std::vector<std::string>>();
    out.v = zero_vector(k, static_cast<Eigen::Index>(v.size()));
    out.w = zero_vector(k, static_cast<Eigen::Index>(w.size()));
    for (std::size_t i = 0; i < v.size(); ++i) out.v(static_cast<Eigen::Index>(i)) = k.parse(v[i]);
    for (std::size_t i = 0; i < w.size(); ++i) out.w(static_cast<Eigen::Index>(i)) = k.parse(w[i]);
    out.B = parse_matrix(k, j.at("B").get<std::vector<std::vector<std::string>>>());
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed perturbation: ") + e.what());
  }
}

json oracle_report_to_json(const OracleReport& report);

}  // namespace rankone::io

#endif  // RANKONE_IO_HPP
