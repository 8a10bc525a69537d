#include "g2holo/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace g2holo {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::runtime_error("malformed JSON input");
  return j;
}

}  // namespace

QLieAlgebra lie_algebra_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
    throw std::runtime_error("Lie algebra file: missing integer 'dim'");
  const int n = j["dim"].get<int>();
  if (n < 1 || n > 64) throw std::runtime_error("Lie algebra file: unsupported dimension");
  QLieAlgebra g(n);
  if (!j.contains("brackets")) return g;
  if (!j["brackets"].is_array()) throw std::runtime_error("Lie algebra file: 'brackets' not a list");
  for (const auto& entry : j["brackets"]) {
    if (!entry.contains("i") || !entry.contains("j") || !entry.contains("c"))
      throw std::runtime_error("Lie algebra file: bracket entry needs i, j, c");
    const int i = entry["i"].get<int>(), jj = entry["j"].get<int>();
    if (i < 1 || i > n || jj < 1 || jj > n || i == jj)
      throw std::runtime_error("Lie algebra file: bad bracket indices");
    QVec v(n);
    for (const auto& [key, value] : entry["c"].items()) {
      int k = 0;
      try {
        k = std::stoi(key);
      } catch (const std::exception&) {
        throw std::runtime_error("Lie algebra file: component key '" + key + "'");
      }
      if (k < 1 || k > n) throw std::runtime_error("Lie algebra file: component out of range");
      v[k - 1] = parse_qsqrt2(value.get<std::string>());
    }
    g.set_bracket(i - 1, jj - 1, v);
  }
  return g;
}

std::string lie_algebra_to_json(const QLieAlgebra& g) {
  json brackets = json::array();
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const QVec& c = g.bracket_basis(i, j);
      if (c.is_zero()) continue;
      json comps = json::object();
      for (int k = 0; k < n; ++k) {
        if (!c[k].is_zero()) comps[std::to_string(k + 1)] = c[k].to_token();
      }
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"c", comps}});
    }
  json j = {{"dim", n}, {"brackets", brackets}};
  return j.dump(2);
}

QMat gram_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_array() || j.empty()) throw std::runtime_error("gram file: expected a nested array");
  const int n = static_cast<int>(j.size());
  QMat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!j[static_cast<size_t>(i)].is_array() ||
        static_cast<int>(j[static_cast<size_t>(i)].size()) != n)
      throw std::runtime_error("gram file: rows must all have length " + std::to_string(n));
    for (int k = 0; k < n; ++k)
      m.at(i, k) = parse_qsqrt2(j[static_cast<size_t>(i)][static_cast<size_t>(k)].get<std::string>());
  }
  return m;
}

std::string gram_to_json(const QMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_token());
    rows.push_back(row);
  }
  return rows.dump(2);
}

std::vector<QMat> matrix_span_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("dim") || !j.contains("matrices"))
    throw std::runtime_error("matrix span file: needs 'dim' and 'matrices'");
  const int n = j["dim"].get<int>();
  if (n < 1 || n > 64) throw std::runtime_error("matrix span file: unsupported dimension");
  std::vector<QMat> mats;
  for (const auto& flat : j["matrices"]) {
    if (!flat.is_array() || static_cast<int>(flat.size()) != n * n)
      throw std::runtime_error("matrix span file: each matrix needs n*n tokens");
    QMat m(n, n);
    for (int k = 0; k < n * n; ++k)
      m.at(k / n, k % n) = parse_qsqrt2(flat[static_cast<size_t>(k)].get<std::string>());
    mats.push_back(std::move(m));
  }
  return mats;
}

std::string matrix_span_to_json(const std::vector<QMat>& mats, int n) {
  json matrices = json::array();
  for (const auto& m : mats) {
    json flat = json::array();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat.push_back(m.at(i, j).to_token());
    matrices.push_back(flat);
  }
  json j = {{"dim", n}, {"matrices", matrices}};
  return j.dump(2);
}

QThreeForm three_form_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_array()) throw std::runtime_error("three-form file: expected a list");
  QThreeForm w;
  for (const auto& entry : j) {
    if (!entry.contains("ijk") || !entry.contains("c"))
      throw std::runtime_error("three-form file: entry needs ijk and c");
    const auto& ijk = entry["ijk"];
    if (!ijk.is_array() || ijk.size() != 3)
      throw std::runtime_error("three-form file: ijk must have three entries");
    int i = ijk[0].get<int>(), jj = ijk[1].get<int>(), k = ijk[2].get<int>();
    if (!(1 <= i && i < jj && jj < k && k <= 7))
      throw std::runtime_error("three-form file: indices must be 1 <= i < j < k <= 7");
    w.coeff(i - 1, jj - 1, k - 1) = parse_qsqrt2(entry["c"].get<std::string>());
  }
  return w;
}

std::string three_form_to_json(const QThreeForm& w) {
  json j = json::array();
  for (int i = 0; i < 7; ++i)
    for (int jj = i + 1; jj < 7; ++jj)
      for (int k = jj + 1; k < 7; ++k) {
        const QSqrt2& c = w.coeff(i, jj, k);
        if (c.is_zero()) continue;
        j.push_back({{"ijk", {i + 1, jj + 1, k + 1}}, {"c", c.to_token()}});
      }
  return j.dump(2);
}

std::vector<std::string> matrix_tokens(const QMat& m) {
  std::vector<std::string> tokens;
  tokens.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) tokens.push_back(m.at(i, j).to_token());
  return tokens;
}

}  // namespace g2holo
