#pragma once

#include "g2holo/g2core.hpp"
#include "g2holo/laurent.hpp"
#include "g2holo/lie_algebra.hpp"

#include <array>
#include <optional>
#include <vector>

namespace g2holo {

/// A Lie algebra with a nondegenerate invariant-metric candidate on its
/// fixed basis. Jacobi is checked on construction via validate().
struct MetricLieAlgebra {
  QLieAlgebra lie = QLieAlgebra(7);
  QMat gram = standard_gram();

  int dim() const { return lie.dim(); }
  /// Throws std::domain_error when the gram is degenerate or Jacobi fails.
  void validate() const;
};

/// The Levi-Civita map on left-invariant fields: Lambda_i = nabla_{e_i}.
struct Connection {
  std::vector<QMat> lambda;  // one n x n matrix per basis direction

  const QMat& operator[](int i) const { return lambda[static_cast<size_t>(i)]; }
  int dim() const { return static_cast<int>(lambda.size()); }
  /// Lambda extended linearly to an arbitrary vector.
  QMat of(const QVec& x) const;
};

/// Unique torsion-free metric connection, from the Koszul formula
///   2 <L_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>.
Connection levi_civita(const MetricLieAlgebra& m);

/// Metric skewness Lambda_i^T G + G Lambda_i = 0 and torsion
/// Lambda_i e_j - Lambda_j e_i = [e_i, e_j]; both must hold exactly.
bool is_metric_connection(const MetricLieAlgebra& m, const Connection& c);

struct CurvatureTensor {
  int n = 0;
  std::vector<QMat> r;  // R(e_i, e_j) for i < j, lexicographic

  QMat at(int i, int j) const;  // signed lookup, any i != j
  QMat of(const QVec& x, const QVec& y) const;
  static int slot(int n, int i, int j);
};

/// R(X,Y) = [Lambda(X), Lambda(Y)] - Lambda([X,Y]).
CurvatureTensor curvature(const MetricLieAlgebra& m, const Connection& c);

/// Second Bianchi residual
///   B_ijk = sum_cyc( R(L_i e_j, e_k) + R(e_j, L_i e_k) - [L_i, R_jk] );
/// identically zero for a Levi-Civita connection.
QMat second_bianchi(const MetricLieAlgebra& m, const Connection& c, const CurvatureTensor& r,
                    int i, int j, int k);

/// First nonzero residual triple, if any.
std::optional<std::array<int, 3>> second_bianchi_scan(const MetricLieAlgebra& m,
                                                      const Connection& c,
                                                      const CurvatureTensor& r);

/// Infinitesimal holonomy: the span of all R(e_i, e_j), closed under
/// bracketing with Lambda_1..Lambda_n.
MatrixSpan holonomy(const MetricLieAlgebra& m, const Connection& c);

/// Frame components over the Laurent ring in E = e^{t/2}; the distinguished
/// direction (index 4, the frame field e5) carries d/dt.
using LVec = Vec<LaurentExp>;
using LMat = Mat<LaurentExp>;

LVec lift_vector(const QVec& v);
LMat lift_matrix(const QMat& m);

/// Covariant derivative of a t-dependent vector field along e_l:
///   delta_{l,t_dir} d/dt + Lambda_l.
LVec covariant_derivative_t(const Connection& c, const LVec& field, int l, int t_direction = 4);

/// Covariant derivative of a t-dependent 1-form along e_l:
///   delta_{l,t_dir} d/dt - Lambda_l^T.
LVec covariant_derivative_t_form(const Connection& c, const LVec& form, int l,
                                 int t_direction = 4);

/// The deformation generator M(a,b,c): kills e1,e2,e3 and maps
///   e4 -> a E e1 + b E^-2 e2 + c E^3 e3,
///   e5 -> a E e4,  e6 -> b E^-2 e4,  e7 -> c E^3 e4.
LMat deformation_generator(const QSqrt2& a, const QSqrt2& b, const QSqrt2& c);

struct DeformationReport {
  bool m_cubed_zero = false;
  bool gram_orthogonal = false;   // A^T G A = G over the Laurent ring
  bool parallel = false;          // the stabilizer identity holds for all D_l
  std::vector<int> nonzero_d;     // directions l (0-based) with D_l != 0
  std::vector<LMat> d;            // all D_l = A . nabla_{e_l} A^{-1}
  QThreeForm omega_t0;            // the deformed 3-form A^* w0 at t = 0
  bool ok() const { return m_cubed_zero && gram_orthogonal && parallel; }
};

/// Builds A = exp M(a,b,c), checks orthogonality and that the deformed
/// 3-form stays parallel: for every l and basis triple,
///   w0(D_l x, y, z) + w0(x, D_l y, z) + w0(x, y, D_l z) = 0.
DeformationReport check_deformation_parallel(const MetricLieAlgebra& m, const QSqrt2& a,
                                             const QSqrt2& b, const QSqrt2& c,
                                             int t_direction = 4);

}  // namespace g2holo
