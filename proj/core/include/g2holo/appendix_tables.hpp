#pragma once

#include "g2holo/matrix.hpp"
#include "g2holo/multipoly.hpp"

#include <utility>
#include <vector>

namespace g2holo {

/// One transcribed bracket term: (num/den) * (sqrt2 ?) * var * e_basis as a
/// contribution to [e_i, e_j]. All indices 1-based, exactly as printed.
struct BracketTerm {
  int i, j;
  int basis;
  int num;
  int den;
  bool sqrt2;
  const char* var;
};

/// Commutator table for connections of shape h(A_i, v_i, y_i).
const std::vector<BracketTerm>& bracket_table_hIII();

/// Commutator table for connections of shape
/// h(diag(a_i1, a_i4), v_i, (0, u_i2), y_i).
const std::vector<BracketTerm>& bracket_table_rdiag10();

/// The transcribed [e_i, e_j] (1-based, i < j) as a symbolic vector.
Vec<MultiPoly> transcribed_bracket(const std::vector<BracketTerm>& table, int i, int j);

/// Components of an h(A, v, y) value in the curvature table.
enum class HComp { A11, A12, A21, A22, V, Y1, Y2 };

/// One transcribed curvature term: contribution (num/den)*(sqrt2?)*param to
/// component `comp` of R(e_i, e_j).
struct CurvatureTerm {
  int i, j;
  HComp comp;
  int num;
  int den;
  bool sqrt2;
  const char* param;
};

/// The sixteen-parameter table for formal curvature tensors with values in
/// the type-III parabolic: parameters a1..a3, b1..b4, j1..j4, c3, c4, w1,
/// w2, t. The pair (3,7) is determined by R_37 = R_15 - R_26 and is not
/// listed here.
const std::vector<CurvatureTerm>& curvature_table_hIII();

/// Parameter names of the table, in a fixed order.
const std::vector<const char*>& curvature_table_params();

/// Pairs R(e_i, e_j) the table declares identically zero.
const std::vector<std::pair<int, int>>& curvature_table_zero_pairs();

}  // namespace g2holo
