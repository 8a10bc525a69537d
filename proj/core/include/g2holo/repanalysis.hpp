#pragma once

#include "g2holo/linalg.hpp"

#include <string>
#include <vector>

namespace g2holo {

/// A matrix Lie algebra acting on R^n together with the invariant metric.
struct Representation {
  std::vector<QMat> generators;
  QMat gram;

  int dim() const { return gram.rows(); }
  /// Every generator must be metric-skew.
  bool metric_skew() const;
};

/// Smallest unital matrix algebra containing the generators.
MatrixSpan assoc_envelope(const Representation& r);

/// Jacobson radical of a unital matrix algebra in characteristic zero:
/// the kernel of the trace pairing tr(xy) on the algebra.
MatrixSpan radical(const MatrixSpan& envelope);

/// Annihilator of the radical: {v : N v = 0 for all N in rad}; this is the
/// maximal semisimple subrepresentation in characteristic zero.
Subspace socle(const Representation& r);

enum class IndecompKind { Indecomposable, Decomposable, Inconclusive };

struct IndecompVerdict {
  IndecompKind kind = IndecompKind::Inconclusive;
  std::string certificate;       // which test decided
  Subspace witness = Subspace(0);  // invariant nondegenerate subspace when decomposable
};

/// Decides whether the natural representation leaves some proper nonzero
/// nondegenerate subspace invariant.
///
/// Sound certificates, tried in order:
///  1. the self-adjoint commutant is spanned by the identity -> indecomposable
///     (an orthogonal invariant splitting would contribute its projection);
///  2. the full commutant algebra is local (semisimple quotient of dimension
///     one) -> no nontrivial idempotents at all -> indecomposable;
///  3. a self-adjoint commutant element with fully split Q(sqrt 2) spectrum
///     and at least two eigenvalues -> its generalized eigenspaces are an
///     orthogonal invariant splitting -> decomposable, with witness.
/// Anything else is reported Inconclusive rather than guessed.
IndecompVerdict indecomposability(const Representation& r);

/// Self-adjoint part of the commutant: {X : [X, g] = 0 for all generators,
/// X^T G = G X}.
MatrixSpan selfadjoint_commutant(const Representation& r);

/// Full commutant algebra {X : [X, g] = 0 for all generators}.
MatrixSpan commutant(const Representation& r);

enum class RepType { Irreducible, TypeI, TypeII, TypeIII, NotApplicable };

struct RepReport {
  Subspace socle = Subspace(0);
  bool socle_isotropic = false;
  IndecompVerdict verdict;
  RepType type = RepType::NotApplicable;
};

std::string rep_type_name(RepType t);

/// Socle, isotropy, indecomposability, and the socle-dimension type.
RepReport classify_type(const Representation& r);

/// One formal curvature tensor with values in a matrix subalgebra h:
/// the 21 matrices R(e_i, e_j), i < j, subject to the first Bianchi
/// identity.
struct CurvatureSpaceElement {
  int n = 0;
  std::vector<QMat> r;  // slot (i,j), i<j, lexicographic

  QMat at(int i, int j) const;
  static int slot(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }
};

struct KSpace {
  int dimension = 0;
  std::vector<CurvatureSpaceElement> basis;
};

/// The space of formal curvature tensors with values in span(h_basis):
/// kernel of the linear first-Bianchi map on Lambda^2 (R^n)* (x) h.
KSpace curvature_space(const std::vector<QMat>& h_basis, int n);

struct BergerResult {
  Subspace generated = Subspace(0);  // flattened span of all evaluations
  bool is_berger = false;
};

/// Berger's first criterion: h is spanned by the evaluations of its own
/// formal curvature tensors.
BergerResult berger_test(const std::vector<QMat>& h_basis, int n);

}  // namespace g2holo
