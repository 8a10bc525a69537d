#include "g2holo/g2core.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace g2holo {

namespace {
const QSqrt2 kSqrt2 = QSqrt2::sqrt2();
}

QThreeForm standard_three_form() {
  QThreeForm w;
  // r2 (e^167 + e^235) - e^4 ^ (e^15 - e^26 - e^37)
  //   = r2 e^167 + r2 e^235 + e^145 - e^246 - e^347   (0-based below)
  w.coeff(0, 5, 6) = kSqrt2;
  w.coeff(1, 2, 4) = kSqrt2;
  w.coeff(0, 3, 4) = QSqrt2(1);
  w.coeff(1, 3, 5) = QSqrt2(-1);
  w.coeff(2, 3, 6) = QSqrt2(-1);
  return w;
}

QMat standard_gram() {
  QMat g(7, 7);
  g.at(0, 4) = g.at(4, 0) = QSqrt2(1);
  g.at(1, 5) = g.at(5, 1) = QSqrt2(1);
  g.at(2, 6) = g.at(6, 2) = QSqrt2(1);
  g.at(3, 3) = QSqrt2(-1);
  return g;
}

QMat g2_matrix(const G2Params& p) {
  const auto& s = p.s;  // zero-based storage of s1..s14
  auto v = [&](int k) { return s[static_cast<size_t>(k - 1)]; };
  QMat m(7, 7);
  m.at(0, 0) = v(1) + v(4);
  m.at(0, 1) = -v(10);
  m.at(0, 2) = v(9);
  m.at(0, 3) = kSqrt2 * v(6);
  m.at(0, 5) = -v(11);
  m.at(0, 6) = -v(12);
  m.at(1, 0) = -v(8);
  m.at(1, 1) = v(1);
  m.at(1, 2) = v(2);
  m.at(1, 3) = kSqrt2 * v(9);
  m.at(1, 4) = v(11);
  m.at(1, 6) = v(6);
  m.at(2, 0) = v(7);
  m.at(2, 1) = v(3);
  m.at(2, 2) = v(4);
  m.at(2, 3) = kSqrt2 * v(10);
  m.at(2, 4) = v(12);
  m.at(2, 5) = -v(6);
  m.at(3, 0) = kSqrt2 * v(5);
  m.at(3, 1) = kSqrt2 * v(7);
  m.at(3, 2) = kSqrt2 * v(8);
  m.at(3, 4) = kSqrt2 * v(6);
  m.at(3, 5) = kSqrt2 * v(9);
  m.at(3, 6) = kSqrt2 * v(10);
  m.at(4, 1) = v(13);
  m.at(4, 2) = v(14);
  m.at(4, 3) = kSqrt2 * v(5);
  m.at(4, 4) = -v(1) - v(4);
  m.at(4, 5) = v(8);
  m.at(4, 6) = -v(7);
  m.at(5, 0) = -v(13);
  m.at(5, 2) = -v(5);
  m.at(5, 3) = kSqrt2 * v(7);
  m.at(5, 4) = v(10);
  m.at(5, 5) = -v(1);
  m.at(5, 6) = -v(3);
  m.at(6, 0) = -v(14);
  m.at(6, 1) = v(5);
  m.at(6, 3) = kSqrt2 * v(8);
  m.at(6, 4) = -v(9);
  m.at(6, 5) = -v(2);
  m.at(6, 6) = -v(4);
  return m;
}

QMat g2_generator(int k) {
  if (k < 1 || k > 14) throw std::domain_error("g2_generator: index out of range");
  G2Params p;
  p.s[static_cast<size_t>(k - 1)] = QSqrt2(1);
  return g2_matrix(p);
}

QMat h_build(const HParams& p) { return h_matrix<QSqrt2>(p.a, p.v, p.u, p.y); }

QMat h_build3(const QMat& a, const QSqrt2& v, const std::array<QSqrt2, 2>& y) {
  return h_matrix<QSqrt2>(a, v, {QSqrt2(0), QSqrt2(0)}, y);
}

HParams h_project(const QMat& m) {
  if (m.rows() != 7 || m.cols() != 7) throw std::domain_error("h_project: matrix must be 7x7");
  HParams p;
  p.a.at(0, 0) = m.at(1, 1);
  p.a.at(0, 1) = m.at(1, 2);
  p.a.at(1, 0) = m.at(2, 1);
  p.a.at(1, 1) = m.at(2, 2);
  p.v = m.at(1, 6);
  p.u = {m.at(0, 2), -m.at(0, 1)};
  p.y = {m.at(1, 4), m.at(2, 4)};
  QMat rebuilt = h_build(p);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (rebuilt.at(i, j) != m.at(i, j))
        throw std::domain_error("h_project: not a parabolic matrix, offending entry (" +
                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  return p;
}

RhoImage rho_action(const QMat& a, const QSqrt2& v, const std::array<QSqrt2, 2>& u,
                    const std::array<QSqrt2, 2>& y) {
  const QSqrt2 tr = a.at(0, 0) + a.at(1, 1);
  RhoImage r;
  r.v = tr * v;
  r.u = {a.at(0, 0) * u[0] + a.at(0, 1) * u[1], a.at(1, 0) * u[0] + a.at(1, 1) * u[1]};
  r.y = {(a.at(0, 0) + tr) * y[0] + a.at(0, 1) * y[1],
         a.at(1, 0) * y[0] + (a.at(1, 1) + tr) * y[1]};
  return r;
}

std::optional<FamilyName> parse_family(const std::string& token) {
  static const std::map<std::string, FamilyName> names = {
      {"g2star", FamilyName::G2Star}, {"hI", FamilyName::HI},     {"hIII", FamilyName::HIII},
      {"m101", FamilyName::M101},     {"m102", FamilyName::M102}, {"sl2", FamilyName::Sl2},
      {"gl2", FamilyName::Gl2},       {"co2", FamilyName::Co2},   {"d", FamilyName::Diag},
      {"rdiag10", FamilyName::RDiag10}};
  auto it = names.find(token);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string family_token(FamilyName name) {
  switch (name) {
    case FamilyName::G2Star: return "g2star";
    case FamilyName::HI: return "hI";
    case FamilyName::HIII: return "hIII";
    case FamilyName::M101: return "m101";
    case FamilyName::M102: return "m102";
    case FamilyName::Sl2: return "sl2";
    case FamilyName::Gl2: return "gl2";
    case FamilyName::Co2: return "co2";
    case FamilyName::Diag: return "d";
    case FamilyName::RDiag10: return "rdiag10";
  }
  return "?";
}

std::string family_display(FamilyName name) {
  switch (name) {
    case FamilyName::G2Star: return "g2*";
    case FamilyName::HI: return "h^I";
    case FamilyName::HIII: return "h^III";
    case FamilyName::M101: return "m(1,0,1)";
    case FamilyName::M102: return "m(1,0,2)";
    case FamilyName::Sl2: return "sl(2,R)";
    case FamilyName::Gl2: return "gl(2,R)";
    case FamilyName::Co2: return "co(2)";
    case FamilyName::Diag: return "d";
    case FamilyName::RDiag10: return "R*diag(1,0)";
  }
  return "?";
}

namespace {

QMat a_only(const QMat& a) {
  return h_build({a, QSqrt2(0), {QSqrt2(0), QSqrt2(0)}, {QSqrt2(0), QSqrt2(0)}});
}

QMat two_by_two(int a, int b, int c, int d) {
  QMat m(2, 2);
  m.at(0, 0) = QSqrt2(a);
  m.at(0, 1) = QSqrt2(b);
  m.at(1, 0) = QSqrt2(c);
  m.at(1, 1) = QSqrt2(d);
  return m;
}

std::vector<QMat> family_generators(FamilyName name) {
  const QSqrt2 zero(0), one(1);
  const std::array<QSqrt2, 2> z2{zero, zero};
  switch (name) {
    case FamilyName::G2Star: {
      std::vector<QMat> gens;
      for (int k = 1; k <= 14; ++k) gens.push_back(g2_generator(k));
      return gens;
    }
    case FamilyName::HI: {
      std::vector<QMat> gens = family_generators(FamilyName::Gl2);
      gens.push_back(h_build({QMat(2, 2), one, z2, z2}));
      gens.push_back(h_build({QMat(2, 2), zero, {one, zero}, z2}));
      gens.push_back(h_build({QMat(2, 2), zero, {zero, one}, z2}));
      gens.push_back(h_build({QMat(2, 2), zero, z2, {one, zero}}));
      gens.push_back(h_build({QMat(2, 2), zero, z2, {zero, one}}));
      return gens;
    }
    case FamilyName::HIII: {
      std::vector<QMat> gens = family_generators(FamilyName::Gl2);
      for (const auto& m : family_generators(FamilyName::M102)) gens.push_back(m);
      return gens;
    }
    case FamilyName::M101:
      return {h_build({QMat(2, 2), one, z2, z2}), h_build({QMat(2, 2), zero, z2, {one, zero}})};
    case FamilyName::M102: {
      auto gens = family_generators(FamilyName::M101);
      gens.push_back(h_build({QMat(2, 2), zero, z2, {zero, one}}));
      return gens;
    }
    case FamilyName::Sl2:
      return {a_only(two_by_two(1, 0, 0, -1)), a_only(two_by_two(0, 1, 0, 0)),
              a_only(two_by_two(0, 0, 1, 0))};
    case FamilyName::Gl2:
      return {a_only(two_by_two(1, 0, 0, 0)), a_only(two_by_two(0, 1, 0, 0)),
              a_only(two_by_two(0, 0, 1, 0)), a_only(two_by_two(0, 0, 0, 1))};
    case FamilyName::Co2:
      return {a_only(two_by_two(1, 0, 0, 1)), a_only(two_by_two(0, -1, 1, 0))};
    case FamilyName::Diag:
      return {a_only(two_by_two(1, 0, 0, 0)), a_only(two_by_two(0, 0, 0, 1))};
    case FamilyName::RDiag10:
      return {a_only(two_by_two(1, 0, 0, 0))};
  }
  return {};
}

}  // namespace

const MatrixSpan& family(FamilyName name) {
  static std::map<FamilyName, MatrixSpan> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, matrix_span(7, family_generators(name))).first;
  return it->second;
}

const std::vector<TfkEntry>& tfk_list() {
  static const std::vector<TfkEntry> list = [] {
    std::vector<TfkEntry> entries;
    auto add = [&](std::optional<FamilyName> a_part, int k) {
      std::vector<QMat> gens;
      std::string name;
      if (a_part) {
        gens = family(*a_part).basis;
        name = family_display(*a_part);
      } else {
        name = "0";
      }
      const auto& mk = family(k == 1 ? FamilyName::M101 : FamilyName::M102);
      for (const auto& m : mk.basis) gens.push_back(m);
      name += " |x m(1,0," + std::to_string(k) + ")";
      entries.push_back({name, a_part, k, matrix_span(7, gens)});
    };
    add(FamilyName::Sl2, 2);
    add(FamilyName::Gl2, 2);
    add(FamilyName::Co2, 2);
    add(FamilyName::Diag, 2);
    add(std::nullopt, 1);
    add(std::nullopt, 2);
    add(FamilyName::RDiag10, 1);
    add(FamilyName::RDiag10, 2);
    return entries;
  }();
  return list;
}

QMat phi_T(const QMat& t) {
  if (t.rows() != 2 || t.cols() != 2) throw std::domain_error("phi_T: T must be 2x2");
  const QSqrt2 det = t.at(0, 0) * t.at(1, 1) - t.at(0, 1) * t.at(1, 0);
  if (det.is_zero()) throw std::domain_error("phi_T: singular T");
  const QSqrt2 det_inv = det.inverse();
  QMat m(7, 7);
  m.at(0, 0) = det;
  m.at(1, 1) = t.at(0, 0);
  m.at(1, 2) = t.at(0, 1);
  m.at(2, 1) = t.at(1, 0);
  m.at(2, 2) = t.at(1, 1);
  m.at(3, 3) = QSqrt2(1);
  m.at(4, 4) = det_inv;
  // (T^T)^-1 = det^-1 * [[d, -c], [-b, a]]^T applied on the last block.
  m.at(5, 5) = t.at(1, 1) * det_inv;
  m.at(5, 6) = -t.at(1, 0) * det_inv;
  m.at(6, 5) = -t.at(0, 1) * det_inv;
  m.at(6, 6) = t.at(0, 0) * det_inv;
  return m;
}

QMat phi_v(const QSqrt2& v) {
  return exp_nilpotent(h_build({QMat(2, 2), v, {QSqrt2(0), QSqrt2(0)}, {QSqrt2(0), QSqrt2(0)}}));
}

}  // namespace g2holo
