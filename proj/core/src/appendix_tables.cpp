#include "g2holo/appendix_tables.hpp"

namespace g2holo {

// Transcriptions of the printed commutator tables. One entry per printed
// term; tr(A_i) is expanded to its two diagonal entries. Reviewed against
// the source line by line; derivations are checked elsewhere, never here.

const std::vector<BracketTerm>& bracket_table_hIII() {
  static const std::vector<BracketTerm> table = {
      // [e1,e2] = a13 e3 + a11 e2 - tr(A2) e1
      {1, 2, 3, 1, 1, false, "a13"},
      {1, 2, 2, 1, 1, false, "a11"},
      {1, 2, 1, -1, 1, false, "a21"},
      {1, 2, 1, -1, 1, false, "a24"},
      // [e1,e3] = a14 e3 + a12 e2 - tr(A3) e1
      {1, 3, 3, 1, 1, false, "a14"},
      {1, 3, 2, 1, 1, false, "a12"},
      {1, 3, 1, -1, 1, false, "a31"},
      {1, 3, 1, -1, 1, false, "a34"},
      // [e1,e4] = (r2 v1 - tr(A4)) e1
      {1, 4, 1, 1, 1, true, "v1"},
      {1, 4, 1, -1, 1, false, "a41"},
      {1, 4, 1, -1, 1, false, "a44"},
      // [e1,e5] = -tr(A1) e5 + r2 v1 e4 + y12 e3 + y11 e2 - tr(A5) e1
      {1, 5, 5, -1, 1, false, "a11"},
      {1, 5, 5, -1, 1, false, "a14"},
      {1, 5, 4, 1, 1, true, "v1"},
      {1, 5, 3, 1, 1, false, "y12"},
      {1, 5, 2, 1, 1, false, "y11"},
      {1, 5, 1, -1, 1, false, "a51"},
      {1, 5, 1, -1, 1, false, "a54"},
      // [e1,e6] = -a12 e7 - a11 e6 - v1 e3 + (-y11 - tr(A6)) e1
      {1, 6, 7, -1, 1, false, "a12"},
      {1, 6, 6, -1, 1, false, "a11"},
      {1, 6, 3, -1, 1, false, "v1"},
      {1, 6, 1, -1, 1, false, "y11"},
      {1, 6, 1, -1, 1, false, "a61"},
      {1, 6, 1, -1, 1, false, "a64"},
      // [e1,e7] = -a14 e7 - a13 e6 + v1 e2 + (-y12 - tr(A7)) e1
      {1, 7, 7, -1, 1, false, "a14"},
      {1, 7, 6, -1, 1, false, "a13"},
      {1, 7, 2, 1, 1, false, "v1"},
      {1, 7, 1, -1, 1, false, "y12"},
      {1, 7, 1, -1, 1, false, "a71"},
      {1, 7, 1, -1, 1, false, "a74"},
      // [e2,e3] = (a24 - a33) e3 + (a22 - a31) e2
      {2, 3, 3, 1, 1, false, "a24"},
      {2, 3, 3, -1, 1, false, "a33"},
      {2, 3, 2, 1, 1, false, "a22"},
      {2, 3, 2, -1, 1, false, "a31"},
      // [e2,e4] = -a43 e3 - a41 e2 + r2 v2 e1
      {2, 4, 3, -1, 1, false, "a43"},
      {2, 4, 2, -1, 1, false, "a41"},
      {2, 4, 1, 1, 1, true, "v2"},
      // [e2,e5] = -tr(A2) e5 + r2 v2 e4 + (y22 - a53) e3 + (y21 - a51) e2
      {2, 5, 5, -1, 1, false, "a21"},
      {2, 5, 5, -1, 1, false, "a24"},
      {2, 5, 4, 1, 1, true, "v2"},
      {2, 5, 3, 1, 1, false, "y22"},
      {2, 5, 3, -1, 1, false, "a53"},
      {2, 5, 2, 1, 1, false, "y21"},
      {2, 5, 2, -1, 1, false, "a51"},
      // [e2,e6] = -a22 e7 - a21 e6 + (-v2 - a63) e3 - y21 e1 - a61 e2
      {2, 6, 7, -1, 1, false, "a22"},
      {2, 6, 6, -1, 1, false, "a21"},
      {2, 6, 3, -1, 1, false, "v2"},
      {2, 6, 3, -1, 1, false, "a63"},
      {2, 6, 1, -1, 1, false, "y21"},
      {2, 6, 2, -1, 1, false, "a61"},
      // [e2,e7] = -a24 e7 - a23 e6 - a73 e3 + (v2 - a71) e2 - y22 e1
      {2, 7, 7, -1, 1, false, "a24"},
      {2, 7, 6, -1, 1, false, "a23"},
      {2, 7, 3, -1, 1, false, "a73"},
      {2, 7, 2, 1, 1, false, "v2"},
      {2, 7, 2, -1, 1, false, "a71"},
      {2, 7, 1, -1, 1, false, "y22"},
      // [e3,e4] = -a44 e3 - a42 e2 + r2 v3 e1
      {3, 4, 3, -1, 1, false, "a44"},
      {3, 4, 2, -1, 1, false, "a42"},
      {3, 4, 1, 1, 1, true, "v3"},
      // [e3,e5] = -tr(A3) e5 + r2 v3 e4 + (y32 - a54) e3 + (y31 - a52) e2
      {3, 5, 5, -1, 1, false, "a31"},
      {3, 5, 5, -1, 1, false, "a34"},
      {3, 5, 4, 1, 1, true, "v3"},
      {3, 5, 3, 1, 1, false, "y32"},
      {3, 5, 3, -1, 1, false, "a54"},
      {3, 5, 2, 1, 1, false, "y31"},
      {3, 5, 2, -1, 1, false, "a52"},
      // [e3,e6] = -a32 e7 - a31 e6 + (-v3 - a64) e3 - y31 e1 - a62 e2
      {3, 6, 7, -1, 1, false, "a32"},
      {3, 6, 6, -1, 1, false, "a31"},
      {3, 6, 3, -1, 1, false, "v3"},
      {3, 6, 3, -1, 1, false, "a64"},
      {3, 6, 1, -1, 1, false, "y31"},
      {3, 6, 2, -1, 1, false, "a62"},
      // [e3,e7] = -a34 e7 - a33 e6 - a74 e3 + (v3 - a72) e2 - y32 e1
      {3, 7, 7, -1, 1, false, "a34"},
      {3, 7, 6, -1, 1, false, "a33"},
      {3, 7, 3, -1, 1, false, "a74"},
      {3, 7, 2, 1, 1, false, "v3"},
      {3, 7, 2, -1, 1, false, "a72"},
      {3, 7, 1, -1, 1, false, "y32"},
      // [e4,e5] = -tr(A4) e5 + r2 v4 e4 + y42 e3 + y41 e2 - r2 v5 e1
      {4, 5, 5, -1, 1, false, "a41"},
      {4, 5, 5, -1, 1, false, "a44"},
      {4, 5, 4, 1, 1, true, "v4"},
      {4, 5, 3, 1, 1, false, "y42"},
      {4, 5, 2, 1, 1, false, "y41"},
      {4, 5, 1, -1, 1, true, "v5"},
      // [e4,e6] = -a42 e7 - a41 e6 - v4 e3 + (-y41 - r2 v6) e1
      {4, 6, 7, -1, 1, false, "a42"},
      {4, 6, 6, -1, 1, false, "a41"},
      {4, 6, 3, -1, 1, false, "v4"},
      {4, 6, 1, -1, 1, false, "y41"},
      {4, 6, 1, -1, 1, true, "v6"},
      // [e4,e7] = -a44 e7 - a43 e6 + v4 e2 + (-y42 - r2 v7) e1
      {4, 7, 7, -1, 1, false, "a44"},
      {4, 7, 6, -1, 1, false, "a43"},
      {4, 7, 2, 1, 1, false, "v4"},
      {4, 7, 1, -1, 1, false, "y42"},
      {4, 7, 1, -1, 1, true, "v7"},
      // [e5,e6] = -a52 e7 - a51 e6 + tr(A6) e5 - r2 v6 e4 - (v5 + y62) e3
      //           - y51 e1 - y61 e2
      {5, 6, 7, -1, 1, false, "a52"},
      {5, 6, 6, -1, 1, false, "a51"},
      {5, 6, 5, 1, 1, false, "a61"},
      {5, 6, 5, 1, 1, false, "a64"},
      {5, 6, 4, -1, 1, true, "v6"},
      {5, 6, 3, -1, 1, false, "v5"},
      {5, 6, 3, -1, 1, false, "y62"},
      {5, 6, 1, -1, 1, false, "y51"},
      {5, 6, 2, -1, 1, false, "y61"},
      // [e5,e7] = -a54 e7 - a53 e6 + tr(A7) e5 - r2 v7 e4 - y72 e3
      //           + (v5 - y71) e2 - y52 e1
      {5, 7, 7, -1, 1, false, "a54"},
      {5, 7, 6, -1, 1, false, "a53"},
      {5, 7, 5, 1, 1, false, "a71"},
      {5, 7, 5, 1, 1, false, "a74"},
      {5, 7, 4, -1, 1, true, "v7"},
      {5, 7, 3, -1, 1, false, "y72"},
      {5, 7, 2, 1, 1, false, "v5"},
      {5, 7, 2, -1, 1, false, "y71"},
      {5, 7, 1, -1, 1, false, "y52"},
      // [e6,e7] = (-a64 + a72) e7 + (-a63 + a71) e6 + v7 e3 + v6 e2
      //           + (-y62 + y71) e1
      {6, 7, 7, -1, 1, false, "a64"},
      {6, 7, 7, 1, 1, false, "a72"},
      {6, 7, 6, -1, 1, false, "a63"},
      {6, 7, 6, 1, 1, false, "a71"},
      {6, 7, 3, 1, 1, false, "v7"},
      {6, 7, 2, 1, 1, false, "v6"},
      {6, 7, 1, -1, 1, false, "y62"},
      {6, 7, 1, 1, 1, false, "y71"},
  };
  return table;
}

const std::vector<BracketTerm>& bracket_table_rdiag10() {
  static const std::vector<BracketTerm> table = {
      // [e1,e2] = a11 e2 - (u12 + tr(A2)) e1
      {1, 2, 2, 1, 1, false, "a11"},
      {1, 2, 1, -1, 1, false, "u12"},
      {1, 2, 1, -1, 1, false, "a21"},
      {1, 2, 1, -1, 1, false, "a24"},
      // [e1,e3] = a14 e3 - tr(A3) e1
      {1, 3, 3, 1, 1, false, "a14"},
      {1, 3, 1, -1, 1, false, "a31"},
      {1, 3, 1, -1, 1, false, "a34"},
      // [e1,e4] = r2 u12 e3 + (r2 v1 - tr(A4)) e1
      {1, 4, 3, 1, 1, true, "u12"},
      {1, 4, 1, 1, 1, true, "v1"},
      {1, 4, 1, -1, 1, false, "a41"},
      {1, 4, 1, -1, 1, false, "a44"},
      // [e1,e5] = u12 e6 - tr(A1) e5 + r2 v1 e4 + y12 e3 + y11 e2 - tr(A5) e1
      {1, 5, 6, 1, 1, false, "u12"},
      {1, 5, 5, -1, 1, false, "a11"},
      {1, 5, 5, -1, 1, false, "a14"},
      {1, 5, 4, 1, 1, true, "v1"},
      {1, 5, 3, 1, 1, false, "y12"},
      {1, 5, 2, 1, 1, false, "y11"},
      {1, 5, 1, -1, 1, false, "a51"},
      {1, 5, 1, -1, 1, false, "a54"},
      // [e1,e6] = -a11 e6 - v1 e3 + (-y11 - tr(A6)) e1
      {1, 6, 6, -1, 1, false, "a11"},
      {1, 6, 3, -1, 1, false, "v1"},
      {1, 6, 1, -1, 1, false, "y11"},
      {1, 6, 1, -1, 1, false, "a61"},
      {1, 6, 1, -1, 1, false, "a64"},
      // [e1,e7] = -a14 e7 + r2 u12 e4 + v1 e2 + (-y12 - tr(A7)) e1
      {1, 7, 7, -1, 1, false, "a14"},
      {1, 7, 4, 1, 1, true, "u12"},
      {1, 7, 2, 1, 1, false, "v1"},
      {1, 7, 1, -1, 1, false, "y12"},
      {1, 7, 1, -1, 1, false, "a71"},
      {1, 7, 1, -1, 1, false, "a74"},
      // [e2,e3] = a24 e3 - a31 e2 + u32 e1
      {2, 3, 3, 1, 1, false, "a24"},
      {2, 3, 2, -1, 1, false, "a31"},
      {2, 3, 1, 1, 1, false, "u32"},
      // [e2,e4] = r2 u22 e3 - a41 e2 + (r2 v2 + u42) e1
      {2, 4, 3, 1, 1, true, "u22"},
      {2, 4, 2, -1, 1, false, "a41"},
      {2, 4, 1, 1, 1, true, "v2"},
      {2, 4, 1, 1, 1, false, "u42"},
      // [e2,e5] = u22 e6 - tr(A2) e5 + r2 v2 e4 + y22 e3 + (y21 - a51) e2
      //           + u52 e1
      {2, 5, 6, 1, 1, false, "u22"},
      {2, 5, 5, -1, 1, false, "a21"},
      {2, 5, 5, -1, 1, false, "a24"},
      {2, 5, 4, 1, 1, true, "v2"},
      {2, 5, 3, 1, 1, false, "y22"},
      {2, 5, 2, 1, 1, false, "y21"},
      {2, 5, 2, -1, 1, false, "a51"},
      {2, 5, 1, 1, 1, false, "u52"},
      // [e2,e6] = -a21 e6 - v2 e3 - a61 e2 + (-y21 + u62) e1
      {2, 6, 6, -1, 1, false, "a21"},
      {2, 6, 3, -1, 1, false, "v2"},
      {2, 6, 2, -1, 1, false, "a61"},
      {2, 6, 1, -1, 1, false, "y21"},
      {2, 6, 1, 1, 1, false, "u62"},
      // [e2,e7] = -a24 e7 + r2 u22 e4 + (v2 - a71) e2 + (-y22 + u72) e1
      {2, 7, 7, -1, 1, false, "a24"},
      {2, 7, 4, 1, 1, true, "u22"},
      {2, 7, 2, 1, 1, false, "v2"},
      {2, 7, 2, -1, 1, false, "a71"},
      {2, 7, 1, -1, 1, false, "y22"},
      {2, 7, 1, 1, 1, false, "u72"},
      // [e3,e4] = (r2 u32 - a44) e3 + r2 v3 e1
      {3, 4, 3, 1, 1, true, "u32"},
      {3, 4, 3, -1, 1, false, "a44"},
      {3, 4, 1, 1, 1, true, "v3"},
      // [e3,e5] = u32 e6 - tr(A3) e5 + r2 v3 e4 + (y32 - a54) e3 + y31 e2
      {3, 5, 6, 1, 1, false, "u32"},
      {3, 5, 5, -1, 1, false, "a31"},
      {3, 5, 5, -1, 1, false, "a34"},
      {3, 5, 4, 1, 1, true, "v3"},
      {3, 5, 3, 1, 1, false, "y32"},
      {3, 5, 3, -1, 1, false, "a54"},
      {3, 5, 2, 1, 1, false, "y31"},
      // [e3,e6] = -a31 e6 - (v3 + a64) e3 - y31 e1
      {3, 6, 6, -1, 1, false, "a31"},
      {3, 6, 3, -1, 1, false, "v3"},
      {3, 6, 3, -1, 1, false, "a64"},
      {3, 6, 1, -1, 1, false, "y31"},
      // [e3,e7] = -a34 e7 + r2 u32 e4 - a74 e3 + v3 e2 - y32 e1
      {3, 7, 7, -1, 1, false, "a34"},
      {3, 7, 4, 1, 1, true, "u32"},
      {3, 7, 3, -1, 1, false, "a74"},
      {3, 7, 2, 1, 1, false, "v3"},
      {3, 7, 1, -1, 1, false, "y32"},
      // [e4,e5] = u42 e6 - tr(A4) e5 + r2 v4 e4 + (y42 - r2 u52) e3 + y41 e2
      //           - r2 v5 e1
      {4, 5, 6, 1, 1, false, "u42"},
      {4, 5, 5, -1, 1, false, "a41"},
      {4, 5, 5, -1, 1, false, "a44"},
      {4, 5, 4, 1, 1, true, "v4"},
      {4, 5, 3, 1, 1, false, "y42"},
      {4, 5, 3, -1, 1, true, "u52"},
      {4, 5, 2, 1, 1, false, "y41"},
      {4, 5, 1, -1, 1, true, "v5"},
      // [e4,e6] = -a41 e6 - (v4 + r2 u62) e3 - (y41 + r2 v6) e1
      {4, 6, 6, -1, 1, false, "a41"},
      {4, 6, 3, -1, 1, false, "v4"},
      {4, 6, 3, -1, 1, true, "u62"},
      {4, 6, 1, -1, 1, false, "y41"},
      {4, 6, 1, -1, 1, true, "v6"},
      // [e4,e7] = -a44 e7 + r2 u42 e4 - r2 u72 e3 + v4 e2 - (y42 + r2 v7) e1
      {4, 7, 7, -1, 1, false, "a44"},
      {4, 7, 4, 1, 1, true, "u42"},
      {4, 7, 3, -1, 1, true, "u72"},
      {4, 7, 2, 1, 1, false, "v4"},
      {4, 7, 1, -1, 1, false, "y42"},
      {4, 7, 1, -1, 1, true, "v7"},
      // [e5,e6] = -(a51 + u62) e6 + tr(A6) e5 - r2 v6 e4 - (v5 + y62) e3
      //           - y51 e1 - y61 e2
      {5, 6, 6, -1, 1, false, "a51"},
      {5, 6, 6, -1, 1, false, "u62"},
      {5, 6, 5, 1, 1, false, "a61"},
      {5, 6, 5, 1, 1, false, "a64"},
      {5, 6, 4, -1, 1, true, "v6"},
      {5, 6, 3, -1, 1, false, "v5"},
      {5, 6, 3, -1, 1, false, "y62"},
      {5, 6, 1, -1, 1, false, "y51"},
      {5, 6, 2, -1, 1, false, "y61"},
      // [e5,e7] = -a54 e7 - u72 e6 + tr(A7) e5 + r2 (u52 - v7) e4 - y72 e3
      //           + (v5 - y71) e2 - y52 e1
      {5, 7, 7, -1, 1, false, "a54"},
      {5, 7, 6, -1, 1, false, "u72"},
      {5, 7, 5, 1, 1, false, "a71"},
      {5, 7, 5, 1, 1, false, "a74"},
      {5, 7, 4, 1, 1, true, "u52"},
      {5, 7, 4, -1, 1, true, "v7"},
      {5, 7, 3, -1, 1, false, "y72"},
      {5, 7, 2, 1, 1, false, "v5"},
      {5, 7, 2, -1, 1, false, "y71"},
      {5, 7, 1, -1, 1, false, "y52"},
      // [e6,e7] = -a64 e7 + a71 e6 + r2 u62 e4 + v7 e3 + v6 e2
      //           + (-y62 + y71) e1
      {6, 7, 7, -1, 1, false, "a64"},
      {6, 7, 6, 1, 1, false, "a71"},
      {6, 7, 4, 1, 1, true, "u62"},
      {6, 7, 3, 1, 1, false, "v7"},
      {6, 7, 2, 1, 1, false, "v6"},
      {6, 7, 1, -1, 1, false, "y62"},
      {6, 7, 1, 1, 1, false, "y71"},
  };
  return table;
}

Vec<MultiPoly> transcribed_bracket(const std::vector<BracketTerm>& table, int i, int j) {
  Vec<MultiPoly> v(7);
  for (const auto& term : table) {
    if (term.i != i || term.j != j) continue;
    QSqrt2 coef = term.sqrt2 ? QSqrt2(Rational(0), Rational(term.num, term.den))
                             : QSqrt2(Rational(term.num, term.den));
    v[term.basis - 1] += MultiPoly(coef) * MultiPoly::variable(term.var);
  }
  return v;
}

const std::vector<CurvatureTerm>& curvature_table_hIII() {
  static const std::vector<CurvatureTerm> table = {
      // R15: A = 0, v = 0, y = (b1 + b4, b3 + c4)
      {1, 5, HComp::Y1, 1, 1, false, "b1"},
      {1, 5, HComp::Y1, 1, 1, false, "b4"},
      {1, 5, HComp::Y2, 1, 1, false, "b3"},
      {1, 5, HComp::Y2, 1, 1, false, "c4"},
      // R26: A = [[-a1, -a2], [-a3, a1]], y = (b1, b3)
      {2, 6, HComp::A11, -1, 1, false, "a1"},
      {2, 6, HComp::A12, -1, 1, false, "a2"},
      {2, 6, HComp::A21, -1, 1, false, "a3"},
      {2, 6, HComp::A22, 1, 1, false, "a1"},
      {2, 6, HComp::Y1, 1, 1, false, "b1"},
      {2, 6, HComp::Y2, 1, 1, false, "b3"},
      // R27: A = [[-a3, a1], [j1, a3]], y = (b3, c3)
      {2, 7, HComp::A11, -1, 1, false, "a3"},
      {2, 7, HComp::A12, 1, 1, false, "a1"},
      {2, 7, HComp::A21, 1, 1, false, "j1"},
      {2, 7, HComp::A22, 1, 1, false, "a3"},
      {2, 7, HComp::Y1, 1, 1, false, "b3"},
      {2, 7, HComp::Y2, 1, 1, false, "c3"},
      // R36: A = [[-a2, j2], [a1, a2]], y = (b2, b4)
      {3, 6, HComp::A11, -1, 1, false, "a2"},
      {3, 6, HComp::A12, 1, 1, false, "j2"},
      {3, 6, HComp::A21, 1, 1, false, "a1"},
      {3, 6, HComp::A22, 1, 1, false, "a2"},
      {3, 6, HComp::Y1, 1, 1, false, "b2"},
      {3, 6, HComp::Y2, 1, 1, false, "b4"},
      // -R67 = (1/r2) R45 = h(0, 0, (w1, w2)), stored on both pairs
      {4, 5, HComp::Y1, 1, 1, true, "w1"},
      {4, 5, HComp::Y2, 1, 1, true, "w2"},
      {6, 7, HComp::Y1, -1, 1, false, "w1"},
      {6, 7, HComp::Y2, -1, 1, false, "w2"},
      // R56: A = [[b1, b2], [b3, b4]], v = w1, y = (j3, t)
      {5, 6, HComp::A11, 1, 1, false, "b1"},
      {5, 6, HComp::A12, 1, 1, false, "b2"},
      {5, 6, HComp::A21, 1, 1, false, "b3"},
      {5, 6, HComp::A22, 1, 1, false, "b4"},
      {5, 6, HComp::V, 1, 1, false, "w1"},
      {5, 6, HComp::Y1, 1, 1, false, "j3"},
      {5, 6, HComp::Y2, 1, 1, false, "t"},
      // R57: A = [[b3, b4], [c3, c4]], v = w2, y = (t, j4)
      {5, 7, HComp::A11, 1, 1, false, "b3"},
      {5, 7, HComp::A12, 1, 1, false, "b4"},
      {5, 7, HComp::A21, 1, 1, false, "c3"},
      {5, 7, HComp::A22, 1, 1, false, "c4"},
      {5, 7, HComp::V, 1, 1, false, "w2"},
      {5, 7, HComp::Y1, 1, 1, false, "t"},
      {5, 7, HComp::Y2, 1, 1, false, "j4"},
  };
  return table;
}

const std::vector<const char*>& curvature_table_params() {
  static const std::vector<const char*> params = {"a1", "a2", "a3", "b1", "b2", "b3",
                                                  "b4", "j1", "j2", "j3", "j4", "c3",
                                                  "c4", "w1", "w2", "t"};
  return params;
}

const std::vector<std::pair<int, int>>& curvature_table_zero_pairs() {
  static const std::vector<std::pair<int, int>> pairs = {
      {1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {2, 3},
      {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 6}, {4, 7}};
  return pairs;
}

}  // namespace g2holo
