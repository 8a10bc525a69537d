#pragma once

#include "g2holo/linalg.hpp"
#include "g2holo/matrix.hpp"

#include <string>
#include <vector>

namespace g2holo {

/// Lie algebra given by structure constants on a fixed basis. Antisymmetry
/// is built into the storage ([e_i, e_j] kept for i < j only); the Jacobi
/// identity is NOT assumed and can be checked exactly.
template <class R>
class LieAlgebra {
 public:
  explicit LieAlgebra(int dim)
      : dim_(dim), c_(static_cast<size_t>(dim) * dim, Vec<R>(dim)) {
    for (int i = 1; i <= dim; ++i) labels_.push_back("e" + std::to_string(i));
  }

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sets [e_i, e_j] (0-based, i != j) to the given vector.
  void set_bracket(int i, int j, const Vec<R>& value) {
    c_[idx(i, j)] = value;
    c_[idx(j, i)] = -value;
  }
  void set_bracket_entry(int i, int j, int k, const R& coeff) {
    c_[idx(i, j)][k] = coeff;
    c_[idx(j, i)][k] = -coeff;
  }

  const Vec<R>& bracket_basis(int i, int j) const { return c_[idx(i, j)]; }

  Vec<R> bracket(const Vec<R>& x, const Vec<R>& y) const {
    Vec<R> r(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (scalar_is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j) {
        if (i == j || scalar_is_zero(y[j])) continue;
        const Vec<R>& cij = c_[idx(i, j)];
        const R f = x[i] * y[j];
        for (int k = 0; k < dim_; ++k) {
          if (!scalar_is_zero(cij[k])) r[k] += f * cij[k];
        }
      }
    }
    return r;
  }

  /// J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y].
  Vec<R> jacobiator(const Vec<R>& x, const Vec<R>& y, const Vec<R>& z) const {
    return bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
  }

  /// Matrix of ad(x): y -> [x, y].
  Mat<R> ad(const Vec<R>& x) const {
    Mat<R> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      Vec<R> col = bracket(x, Vec<R>::basis(dim_, j));
      for (int i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
  }

  template <class R2, class Fn>
  LieAlgebra<R2> map(Fn&& fn) const {
    LieAlgebra<R2> g(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j) {
        Vec<R2> v(dim_);
        for (int k = 0; k < dim_; ++k) v[k] = fn(bracket_basis(i, j)[k]);
        g.set_bracket(i, j, v);
      }
    return g;
  }

 private:
  size_t idx(int i, int j) const { return static_cast<size_t>(i) * dim_ + j; }

  int dim_;
  std::vector<Vec<R>> c_;
  std::vector<std::string> labels_;
};

/// One Jacobi failure: indices (0-based), offending component, residual.
template <class R>
struct JacobiViolation {
  int i, j, k, l;
  R residual;
};

template <class R>
struct JacobiReport {
  std::vector<JacobiViolation<R>> violations;
  bool ok() const { return violations.empty(); }
};

/// Evaluates J(e_i, e_j, e_k) for all i < j < k and reports every nonzero
/// component exactly.
template <class R>
JacobiReport<R> jacobi_check(const LieAlgebra<R>& g) {
  JacobiReport<R> report;
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec<R> res = g.jacobiator(Vec<R>::basis(n, i), Vec<R>::basis(n, j), Vec<R>::basis(n, k));
        for (int l = 0; l < n; ++l) {
          if (!scalar_is_zero(res[l])) report.violations.push_back({i, j, k, l, res[l]});
        }
      }
  return report;
}

using QLieAlgebra = LieAlgebra<QSqrt2>;

/// {x : [x, g] = 0}, as an exact kernel computation.
Subspace center(const QLieAlgebra& g);

/// g >= [g,g] >= [[g,g],[g,g]] >= ..., until stable. Index 0 is g itself.
std::vector<Subspace> derived_series(const QLieAlgebra& g);

/// Span of brackets [U, V] of two subspaces.
Subspace bracket_span(const QLieAlgebra& g, const Subspace& u, const Subspace& v);

/// Smallest bracket-closed subspace containing the seeds.
Subspace subalgebra_generated(const QLieAlgebra& g, const std::vector<QVec>& seeds);

/// Induced action of ad(actor) on inside/sub, in the greedy pivot complement
/// basis. Also returns that complement basis (representatives in g).
struct QuotientAction {
  QMat action;                     // square, size = dim(inside) - dim(sub)
  std::vector<QVec> complement;    // representatives of the quotient basis
};

/// Throws std::domain_error naming a witness vector when sub or inside is
/// not ad(actor)-invariant (or sub is not contained in inside).
QuotientAction quotient_module(const QLieAlgebra& g, const Subspace& sub, const Subspace& inside,
                               const QVec& actor);

}  // namespace g2holo
