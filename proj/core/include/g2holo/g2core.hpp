#pragma once

#include "g2holo/linalg.hpp"
#include "g2holo/threeform.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g2holo {

using QThreeForm = ThreeForm<QSqrt2>;

/// The standard split 3-form on R^7:
///   w0 = r2 (e^167 + e^235) - e^4 ^ (e^15 - e^26 - e^37).
QThreeForm standard_three_form();

/// Gram matrix of the metric induced by w0:
///   <e1,e5> = <e2,e6> = <e3,e7> = 1, <e4,e4> = -1, all else 0.
QMat standard_gram();

/// Linear parametrization s1..s14 of the split g2 algebra inside so(4,3).
struct G2Params {
  std::array<QSqrt2, 14> s{};
};

/// The 7x7 matrix of a g2 element; linear in the parameters.
QMat g2_matrix(const G2Params& p);

/// The k-th single-parameter generator, k = 1..14.
QMat g2_generator(int k);

/// Parameters (A, v, u, y) of the parabolic-type matrices h(A, v, u, y).
struct HParams {
  QMat a = QMat(2, 2);
  QSqrt2 v;
  std::array<QSqrt2, 2> u{};
  std::array<QSqrt2, 2> y{};
};

/// sqrt(2) as an element of each supported coefficient ring.
template <class R>
R sqrt2_in() {
  return R(QSqrt2::sqrt2());
}

/// h(A, v, u, y) over any scalar ring.
template <class R>
Mat<R> h_matrix(const Mat<R>& a, const R& v, const std::array<R, 2>& u,
                const std::array<R, 2>& y) {
  const R r2 = sqrt2_in<R>();
  const R tr = a.at(0, 0) + a.at(1, 1);
  Mat<R> m(7, 7);
  m.at(0, 0) = tr;
  m.at(0, 1) = -u[1];
  m.at(0, 2) = u[0];
  m.at(0, 3) = r2 * v;
  m.at(0, 5) = -y[0];
  m.at(0, 6) = -y[1];
  m.at(1, 1) = a.at(0, 0);
  m.at(1, 2) = a.at(0, 1);
  m.at(1, 3) = r2 * u[0];
  m.at(1, 4) = y[0];
  m.at(1, 6) = v;
  m.at(2, 1) = a.at(1, 0);
  m.at(2, 2) = a.at(1, 1);
  m.at(2, 3) = r2 * u[1];
  m.at(2, 4) = y[1];
  m.at(2, 5) = -v;
  m.at(3, 4) = r2 * v;
  m.at(3, 5) = r2 * u[0];
  m.at(3, 6) = r2 * u[1];
  m.at(4, 4) = -tr;
  m.at(5, 4) = u[1];
  m.at(5, 5) = -a.at(0, 0);
  m.at(5, 6) = -a.at(1, 0);
  m.at(6, 4) = -u[0];
  m.at(6, 5) = -a.at(0, 1);
  m.at(6, 6) = -a.at(1, 1);
  return m;
}

QMat h_build(const HParams& p);

/// Inverse of h_build on the 9-dimensional parabolic subalgebra; any matrix
/// outside it is rejected with the first offending entry named.
HParams h_project(const QMat& m);

/// h(A, v, y) := h(A, v, 0, y), the type-III shape.
QMat h_build3(const QMat& a, const QSqrt2& v, const std::array<QSqrt2, 2>& y);

/// rho(A)(v, u, y) = (tr(A) v, A u, (A + tr(A) I) y).
struct RhoImage {
  QSqrt2 v;
  std::array<QSqrt2, 2> u{};
  std::array<QSqrt2, 2> y{};
};
RhoImage rho_action(const QMat& a, const QSqrt2& v, const std::array<QSqrt2, 2>& u,
                    const std::array<QSqrt2, 2>& y);

enum class FamilyName {
  G2Star,
  HI,
  HIII,
  M101,
  M102,
  Sl2,
  Gl2,
  Co2,
  Diag,
  RDiag10,
};

/// CLI token ("g2star", "hI", "hIII", "m101", "m102", "sl2", "gl2", "co2",
/// "d", "rdiag10") to family.
std::optional<FamilyName> parse_family(const std::string& token);
std::string family_token(FamilyName name);
std::string family_display(FamilyName name);

/// Canonical span of the named family of 7x7 matrices. Memoized; the cached
/// spans are immutable and safe to share.
const MatrixSpan& family(FamilyName name);

/// The indecomposable type-III holonomy candidates a |x m(1,0,k):
/// a in {sl2, gl2, co2, d} with k = 2, and a in {0, R diag(1,0)} with
/// k in {1, 2}.
struct TfkEntry {
  std::string name;
  std::optional<FamilyName> a_part;  // nullopt when a = 0
  int k = 1;
  MatrixSpan span;
};
const std::vector<TfkEntry>& tfk_list();

/// Basis-change block matrix diag(det T, T, 1, (det T)^-1, (T^T)^-1).
/// Throws std::domain_error when T is singular.
QMat phi_T(const QMat& t);

/// exp h(0, v, 0): adds a multiple of e1 to e4, fixing e1, e2, e3.
QMat phi_v(const QSqrt2& v);

}  // namespace g2holo
