#pragma once

#include "g2holo/matrix.hpp"
#include "g2holo/qsqrt2.hpp"

#include <functional>
#include <optional>
#include <tuple>
#include <vector>

namespace g2holo {

using QVec = Vec<QSqrt2>;
using QMat = Mat<QSqrt2>;

struct RrefResult {
  QMat mat;
  int rank = 0;
  std::vector<int> pivots;
};

/// Reduced row-echelon form with pivots normalized to 1. Canonical: two
/// matrices with the same row space reduce to the same nonzero rows.
RrefResult rref(QMat m);

/// A linear subspace given by its canonical RREF basis.
class Subspace {
 public:
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<QVec>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<QVec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Residue of v after eliminating against the basis; zero iff v is inside.
  QVec reduce(QVec v) const;
  bool contains(const QVec& v) const { return reduce(v).is_zero(); }
  bool contains(const Subspace& other) const;

  /// Inserts a vector, restoring canonical form. Returns true if dim grew.
  bool insert(QVec v);

  Subspace sum(const Subspace& other) const;
  /// Orthogonal complement with respect to a bilinear form on the ambient.
  Subspace perp(const QMat& gram) const;

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }
  friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }

 private:
  int ambient_;
  std::vector<QVec> basis_;   // RREF rows ordered by pivot column
  std::vector<int> pivots_;
};

/// Exact null space {x : m x = 0}.
Subspace kernel(const QMat& m);

/// One solution of m x = b, if any.
std::optional<QVec> solve(const QMat& m, const QVec& b);

QSqrt2 determinant(QMat m);
std::optional<QMat> inverse(const QMat& m);

/// Inertia (positive, negative, zero) of a symmetric matrix, computed by
/// exact symmetric congruence reduction.
std::tuple<int, int, int> gram_signature(QMat g);

/// Smallest subspace of n x n matrices containing the generators and closed
/// under `product` against each generator (both orders). Stops as soon as a
/// full pass adds nothing; the pass count is bounded by the ambient
/// dimension, exceeding it is an internal error.
struct MatrixSpan {
  Subspace flat;                // inside R^(n*n)
  std::vector<QMat> basis;      // unflattened canonical basis
};
MatrixSpan span_close(int n, const std::vector<QMat>& generators,
                      const std::function<QMat(const QMat&, const QMat&)>& product);

/// Plain span of matrices, no closure.
MatrixSpan matrix_span(int n, const std::vector<QMat>& matrices);

/// Monic univariate polynomial utilities over Q(sqrt 2); coefficient k is
/// the coefficient of lambda^k.
using UniPoly = std::vector<QSqrt2>;
UniPoly characteristic_polynomial(const QMat& m);
QSqrt2 eval_poly(const UniPoly& p, const QSqrt2& x);

/// Square root in Q(sqrt 2) when one exists.
std::optional<QSqrt2> sqrt_in_qsqrt2(const QSqrt2& x);

struct EigenLine {
  QSqrt2 value;
  Subspace space;
};

struct EigenResult {
  std::vector<EigenLine> lines;  // eigenvalues found in Q(sqrt 2), ascending
  UniPoly unresolved;            // leftover factor (degree 0 when fully split)
  bool fully_split() const { return unresolved.size() <= 1; }
};

/// Exact eigenvalues in Q(sqrt 2): zero and rational roots via candidate
/// search on the characteristic polynomial, quadratic leftovers via the
/// discriminant square test. Anything else stays in `unresolved`.
EigenResult eigenlines(const QMat& m);

}  // namespace g2holo
