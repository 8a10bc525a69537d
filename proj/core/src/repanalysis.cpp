#include "g2holo/repanalysis.hpp"

#include <stdexcept>

namespace g2holo {

bool Representation::metric_skew() const {
  for (const auto& g : generators) {
    if (!(g.transpose() * gram + gram * g).is_zero()) return false;
  }
  return true;
}

MatrixSpan assoc_envelope(const Representation& r) {
  const int n = r.dim();
  std::vector<QMat> seeds = r.generators;
  seeds.push_back(QMat::identity(n));
  return span_close(n, seeds, [](const QMat& x, const QMat& y) { return x * y; });
}

MatrixSpan radical(const MatrixSpan& envelope) {
  const size_t m = envelope.basis.size();
  if (m == 0) return envelope;
  const int n = envelope.basis.front().rows();
  // Gram matrix of the trace form on the envelope basis.
  QMat trace_form(static_cast<int>(m), static_cast<int>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      QSqrt2 t = (envelope.basis[i] * envelope.basis[j]).trace();
      trace_form.at(static_cast<int>(i), static_cast<int>(j)) = t;
      trace_form.at(static_cast<int>(j), static_cast<int>(i)) = t;
    }
  Subspace coeff_kernel = kernel(trace_form);
  std::vector<QMat> rad_basis;
  for (const auto& coeffs : coeff_kernel.basis()) {
    QMat x(n, n);
    for (size_t i = 0; i < m; ++i) {
      if (coeffs[static_cast<int>(i)].is_zero()) continue;
      x += coeffs[static_cast<int>(i)] * envelope.basis[i];
    }
    rad_basis.push_back(std::move(x));
  }
  return matrix_span(n, rad_basis);
}

Subspace socle(const Representation& r) {
  const int n = r.dim();
  MatrixSpan rad = radical(assoc_envelope(r));
  if (rad.basis.empty()) return Subspace::full(n);
  QMat stacked(static_cast<int>(rad.basis.size()) * n, n);
  int row = 0;
  for (const auto& nmat : rad.basis) {
    for (int i = 0; i < n; ++i, ++row)
      for (int j = 0; j < n; ++j) stacked.at(row, j) = nmat.at(i, j);
  }
  return kernel(stacked);
}

namespace {

// Solution space of the linear conditions [X, g] = 0 (all generators),
// optionally plus self-adjointness X^T G = G X.
MatrixSpan commutant_impl(const Representation& r, bool selfadjoint) {
  const int n = r.dim();
  const int unknowns = n * n;
  std::vector<QVec> rows;
  auto add_matrix_equation = [&](auto&& entry) {
    // entry(i, j, a, b) = coefficient of X_ab in equation (i,j)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        QVec row(unknowns);
        bool nonzero = false;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            QSqrt2 c = entry(i, j, a, b);
            if (!c.is_zero()) {
              row[a * n + b] += c;
              nonzero = true;
            }
          }
        if (nonzero) rows.push_back(std::move(row));
      }
  };
  for (const auto& g : r.generators) {
    // (XG - GX)_{ij} = sum_k X_ik G_kj - G_ik X_kj
    add_matrix_equation([&](int i, int j, int a, int b) {
      QSqrt2 c(0);
      if (a == i) c += g.at(b, j);
      if (b == j) c -= g.at(i, a);
      return c;
    });
  }
  if (selfadjoint) {
    // (X^T G - G X)_{ij} = sum_k X_ki G_kj - G_ik X_kj
    add_matrix_equation([&](int i, int j, int a, int b) {
      QSqrt2 c(0);
      if (b == i) c += r.gram.at(a, j);
      if (b == j) c -= r.gram.at(i, a);
      return c;
    });
  }
  QMat system(static_cast<int>(rows.size()), unknowns);
  for (size_t k = 0; k < rows.size(); ++k)
    for (int j = 0; j < unknowns; ++j) system.at(static_cast<int>(k), j) = rows[k][j];
  Subspace sol = kernel(system);
  MatrixSpan span{Subspace(unknowns), {}};
  span.flat = sol;
  for (const auto& v : sol.basis()) span.basis.push_back(QMat::unflatten(v, n, n));
  return span;
}

}  // namespace

MatrixSpan commutant(const Representation& r) { return commutant_impl(r, false); }

MatrixSpan selfadjoint_commutant(const Representation& r) { return commutant_impl(r, true); }

IndecompVerdict indecomposability(const Representation& r) {
  const int n = r.dim();
  IndecompVerdict verdict;

  MatrixSpan sa = selfadjoint_commutant(r);
  MatrixSpan id_span = matrix_span(n, {QMat::identity(n)});
  if (sa.flat == id_span.flat) {
    verdict.kind = IndecompKind::Indecomposable;
    verdict.certificate = "self-adjoint commutant is spanned by the identity";
    return verdict;
  }

  // Witness search: a self-adjoint commuting X with fully split spectrum and
  // two or more eigenvalues orthogonally splits the module.
  auto try_witness = [&](const QMat& x) -> bool {
    EigenResult eig = eigenlines(x);
    if (!eig.fully_split() || eig.lines.size() < 2) return false;
    for (const auto& line : eig.lines) {
      // Generalized eigenspace ker (X - lambda)^n.
      QMat shifted = x;
      for (int i = 0; i < n; ++i) shifted.at(i, i) -= line.value;
      QMat power = QMat::identity(n);
      for (int k = 0; k < n; ++k) power = power * shifted;
      Subspace space = kernel(power);
      if (space.dim() == 0 || space.dim() == n) continue;
      // Invariance and nondegeneracy make it a decomposition witness.
      bool invariant = true;
      for (const auto& g : r.generators) {
        for (const auto& b : space.basis()) {
          if (!space.contains(g * b)) {
            invariant = false;
            break;
          }
        }
        if (!invariant) break;
      }
      if (!invariant) continue;
      QMat restricted(space.dim(), space.dim());
      for (int i = 0; i < space.dim(); ++i)
        for (int j = 0; j < space.dim(); ++j) {
          QSqrt2 s(0);
          const QVec& bi = space.basis()[static_cast<size_t>(i)];
          const QVec& bj = space.basis()[static_cast<size_t>(j)];
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              if (bi[a].is_zero() || r.gram.at(a, b).is_zero()) continue;
              s += bi[a] * r.gram.at(a, b) * bj[b];
            }
          restricted.at(i, j) = s;
        }
      if (!inverse(restricted)) continue;
      verdict.kind = IndecompKind::Decomposable;
      verdict.certificate = "orthogonal spectral splitting of a self-adjoint commutant element";
      verdict.witness = space;
      return true;
    }
    return false;
  };
  for (const auto& x : sa.basis) {
    if (try_witness(x)) return verdict;
  }

  // Local endomorphism algebra: no idempotents besides 0 and 1, hence no
  // invariant splitting of any kind.
  MatrixSpan full = commutant(r);
  MatrixSpan alg = span_close(n, full.basis, [](const QMat& x, const QMat& y) { return x * y; });
  MatrixSpan rad = radical(alg);
  if (static_cast<int>(alg.basis.size()) - static_cast<int>(rad.basis.size()) == 1) {
    verdict.kind = IndecompKind::Indecomposable;
    verdict.certificate = "commutant algebra is local";
    return verdict;
  }

  verdict.kind = IndecompKind::Inconclusive;
  verdict.certificate = "no certificate found";
  return verdict;
}

std::string rep_type_name(RepType t) {
  switch (t) {
    case RepType::Irreducible: return "irreducible";
    case RepType::TypeI: return "I";
    case RepType::TypeII: return "II";
    case RepType::TypeIII: return "III";
    case RepType::NotApplicable: return "not-applicable";
  }
  return "?";
}

RepReport classify_type(const Representation& r) {
  const int n = r.dim();
  RepReport report;
  report.socle = socle(r);
  // Isotropy of the socle for the ambient metric.
  bool isotropic = true;
  for (const auto& x : report.socle.basis()) {
    for (const auto& y : report.socle.basis()) {
      QSqrt2 s(0);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          if (x[a].is_zero() || r.gram.at(a, b).is_zero()) continue;
          s += x[a] * r.gram.at(a, b) * y[b];
        }
      if (!s.is_zero()) {
        isotropic = false;
        break;
      }
    }
    if (!isotropic) break;
  }
  report.socle_isotropic = report.socle.dim() < n && isotropic;
  report.verdict = indecomposability(r);

  if (report.verdict.kind != IndecompKind::Indecomposable) {
    report.type = RepType::NotApplicable;
  } else if (report.socle.dim() == n) {
    report.type = RepType::Irreducible;
  } else if (report.socle_isotropic && report.socle.dim() >= 1 && report.socle.dim() <= 3) {
    report.type = report.socle.dim() == 1   ? RepType::TypeI
                  : report.socle.dim() == 2 ? RepType::TypeII
                                            : RepType::TypeIII;
  } else {
    report.type = RepType::NotApplicable;
  }
  return report;
}

QMat CurvatureSpaceElement::at(int i, int j) const {
  if (i == j) throw std::domain_error("CurvatureSpaceElement: R(x,x) slot");
  if (i < j) return r[static_cast<size_t>(slot(n, i, j))];
  return -r[static_cast<size_t>(slot(n, j, i))];
}

KSpace curvature_space(const std::vector<QMat>& h_basis, int n) {
  const int hdim = static_cast<int>(h_basis.size());
  const int pairs = n * (n - 1) / 2;
  const int unknowns = pairs * hdim;
  KSpace result;
  if (unknowns == 0) return result;

  // Unknown x_{(i,j),m}: coefficient of h_basis[m] in R_ij. Equations: for
  // every i<j<k and ambient component l,
  //   (R_ij e_k + R_jk e_i - R_ik e_j)_l = 0.
  std::vector<QVec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          QVec row(unknowns);
          bool nonzero = false;
          auto add = [&](int pi, int pj, int col_vec, const QSqrt2& sign) {
            int slot = CurvatureSpaceElement::slot(n, pi, pj);
            for (int m = 0; m < hdim; ++m) {
              const QSqrt2& c = h_basis[static_cast<size_t>(m)].at(l, col_vec);
              if (c.is_zero()) continue;
              row[slot * hdim + m] += sign * c;
              nonzero = true;
            }
          };
          add(i, j, k, QSqrt2(1));
          add(j, k, i, QSqrt2(1));
          add(i, k, j, QSqrt2(-1));  // R_ki = -R_ik
          if (nonzero) rows.push_back(std::move(row));
        }
      }

  QMat system(static_cast<int>(rows.size()), unknowns);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < unknowns; ++c) system.at(static_cast<int>(r), c) = rows[r][c];
  Subspace sol = kernel(system);

  result.dimension = sol.dim();
  for (const auto& coeffs : sol.basis()) {
    CurvatureSpaceElement elem;
    elem.n = n;
    for (int p = 0; p < pairs; ++p) {
      QMat rij(n, n);
      for (int m = 0; m < hdim; ++m) {
        const QSqrt2& c = coeffs[p * hdim + m];
        if (c.is_zero()) continue;
        rij += c * h_basis[static_cast<size_t>(m)];
      }
      elem.r.push_back(std::move(rij));
    }
    result.basis.push_back(std::move(elem));
  }
  return result;
}

BergerResult berger_test(const std::vector<QMat>& h_basis, int n) {
  KSpace k = curvature_space(h_basis, n);
  BergerResult result;
  std::vector<QMat> evaluations;
  for (const auto& elem : k.basis)
    for (const auto& rij : elem.r) evaluations.push_back(rij);
  MatrixSpan generated = matrix_span(n, evaluations);
  result.generated = generated.flat;
  result.is_berger = (generated.flat == matrix_span(n, h_basis).flat);
  return result;
}

}  // namespace g2holo
