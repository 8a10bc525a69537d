#include "g2holo/geometry.hpp"

#include <stdexcept>

namespace g2holo {

void MetricLieAlgebra::validate() const {
  if (gram.rows() != dim() || gram.cols() != dim())
    throw std::domain_error("MetricLieAlgebra: gram size mismatch");
  if (gram != gram.transpose()) throw std::domain_error("MetricLieAlgebra: gram not symmetric");
  if (!inverse(gram)) throw std::domain_error("MetricLieAlgebra: degenerate gram");
  auto report = jacobi_check(lie);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw std::domain_error("MetricLieAlgebra: Jacobi fails at (" + std::to_string(v.i + 1) +
                            "," + std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) +
                            ") component " + std::to_string(v.l + 1));
  }
}

QMat Connection::of(const QVec& x) const {
  const int n = dim();
  QMat m(lambda.front().rows(), lambda.front().cols());
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    m += x[i] * lambda[static_cast<size_t>(i)];
  }
  return m;
}

Connection levi_civita(const MetricLieAlgebra& m) {
  const int n = m.dim();
  auto ginv = inverse(m.gram);
  if (!ginv) throw std::domain_error("levi_civita: degenerate gram");
  auto ip = [&](const QVec& x, const QVec& y) {
    QSqrt2 s(0);
    for (int i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (m.gram.at(i, j).is_zero() || y[j].is_zero()) continue;
        s += x[i] * m.gram.at(i, j) * y[j];
      }
    }
    return s;
  };
  Connection c;
  const QSqrt2 half(Rational(1, 2));
  for (int i = 0; i < n; ++i) {
    QMat lam(n, n);
    QVec ei = QVec::basis(n, i);
    for (int j = 0; j < n; ++j) {
      QVec ej = QVec::basis(n, j);
      // rhs_k = (1/2)(<[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>)
      QVec rhs(n);
      for (int k = 0; k < n; ++k) {
        QVec ek = QVec::basis(n, k);
        rhs[k] = half * (ip(m.lie.bracket(ei, ej), ek) - ip(m.lie.bracket(ej, ek), ei) +
                         ip(m.lie.bracket(ek, ei), ej));
      }
      QVec w = *ginv * rhs;
      for (int k = 0; k < n; ++k) lam.at(k, j) = w[k];
    }
    c.lambda.push_back(std::move(lam));
  }
  return c;
}

bool is_metric_connection(const MetricLieAlgebra& m, const Connection& c) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i) {
    const QMat& li = c[i];
    if (!(li.transpose() * m.gram + m.gram * li).is_zero()) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec torsion = c[i].column(j) - c[j].column(i);
      if (!(torsion - m.lie.bracket_basis(i, j)).is_zero()) return false;
    }
  return true;
}

int CurvatureTensor::slot(int n, int i, int j) {
  // (i,j), i < j, lexicographic.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

QMat CurvatureTensor::at(int i, int j) const {
  if (i == j) throw std::domain_error("CurvatureTensor: R(x,x) slot");
  if (i < j) return r[static_cast<size_t>(slot(n, i, j))];
  return -r[static_cast<size_t>(slot(n, j, i))];
}

QMat CurvatureTensor::of(const QVec& x, const QVec& y) const {
  QMat m(n, n);
  for (int i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (i == j || y[j].is_zero()) continue;
      QSqrt2 f = x[i] * y[j];
      const QMat& rij = i < j ? r[static_cast<size_t>(slot(n, i, j))]
                              : r[static_cast<size_t>(slot(n, j, i))];
      if (i > j) f = -f;
      m += f * rij;
    }
  }
  return m;
}

CurvatureTensor curvature(const MetricLieAlgebra& m, const Connection& c) {
  const int n = m.dim();
  CurvatureTensor t;
  t.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      t.r.push_back(commutator(c[i], c[j]) - c.of(m.lie.bracket_basis(i, j)));
  return t;
}

QMat second_bianchi(const MetricLieAlgebra& m, const Connection& c, const CurvatureTensor& r,
                    int i, int j, int k) {
  const int n = m.dim();
  QMat b(n, n);
  const int idx[3] = {i, j, k};
  for (int t = 0; t < 3; ++t) {
    const int a = idx[t], p = idx[(t + 1) % 3], q = idx[(t + 2) % 3];
    QVec ep = QVec::basis(n, p), eq = QVec::basis(n, q);
    b += r.of(c[a].column(p), eq);
    b += r.of(ep, c[a].column(q));
    b -= commutator(c[a], r.at(p, q));
  }
  return b;
}

std::optional<std::array<int, 3>> second_bianchi_scan(const MetricLieAlgebra& m,
                                                      const Connection& c,
                                                      const CurvatureTensor& r) {
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (!second_bianchi(m, c, r, i, j, k).is_zero()) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

MatrixSpan holonomy(const MetricLieAlgebra& m, const Connection& c) {
  const int n = m.dim();
  CurvatureTensor r = curvature(m, c);
  MatrixSpan span = matrix_span(n, r.r);
  std::vector<QMat> frontier = span.basis;
  int passes = 0;
  while (!frontier.empty()) {
    if (++passes > n * n + 1) throw std::logic_error("holonomy: closure failed to stabilize");
    std::vector<QMat> next;
    for (const auto& b : frontier) {
      for (int l = 0; l < n; ++l) {
        QMat p = commutator(c[l], b);
        if (span.flat.insert(p.flatten())) next.push_back(std::move(p));
      }
    }
    frontier = std::move(next);
  }
  span.basis.clear();
  for (const auto& row : span.flat.basis()) span.basis.push_back(QMat::unflatten(row, n, n));
  return span;
}

LVec lift_vector(const QVec& v) {
  LVec r(v.size());
  for (int i = 0; i < v.size(); ++i) r[i] = LaurentExp(v[i]);
  return r;
}

LMat lift_matrix(const QMat& m) {
  return m.map<LaurentExp>([](const QSqrt2& x) { return LaurentExp(x); });
}

LVec covariant_derivative_t(const Connection& c, const LVec& field, int l, int t_direction) {
  LMat lam = lift_matrix(c[l]);
  LVec result = lam * field;
  if (l == t_direction) {
    for (int i = 0; i < field.size(); ++i) result[i] += field[i].ddt();
  }
  return result;
}

LVec covariant_derivative_t_form(const Connection& c, const LVec& form, int l, int t_direction) {
  LMat lam_t = lift_matrix(c[l].transpose());
  LVec result = -(lam_t * form);
  if (l == t_direction) {
    for (int i = 0; i < form.size(); ++i) result[i] += form[i].ddt();
  }
  return result;
}

LMat deformation_generator(const QSqrt2& a, const QSqrt2& b, const QSqrt2& c) {
  LMat m(7, 7);
  const LaurentExp ae = LaurentExp::monomial(a, 1);    // a e^{t/2}
  const LaurentExp be = LaurentExp::monomial(b, -2);   // b e^{-t}
  const LaurentExp ce = LaurentExp::monomial(c, 3);    // c e^{3t/2}
  m.at(0, 3) = ae;
  m.at(1, 3) = be;
  m.at(2, 3) = ce;
  m.at(3, 4) = ae;
  m.at(3, 5) = be;
  m.at(3, 6) = ce;
  return m;
}

DeformationReport check_deformation_parallel(const MetricLieAlgebra& m, const QSqrt2& a,
                                             const QSqrt2& b, const QSqrt2& c, int t_direction) {
  DeformationReport report;
  const int n = 7;
  LMat gen = deformation_generator(a, b, c);
  report.m_cubed_zero = (gen * gen * gen).is_zero();

  LMat big_a = exp_nilpotent(gen);
  LMat big_a_inv = exp_nilpotent(-gen);
  LMat gram = lift_matrix(m.gram);
  report.gram_orthogonal = (big_a.transpose() * gram * big_a == gram);

  Connection conn = levi_civita(m);
  ThreeForm<LaurentExp> w0 =
      standard_three_form().map<LaurentExp>([](const QSqrt2& x) { return LaurentExp(x); });

  ThreeForm<LaurentExp> deformed = pullback(big_a, w0);
  report.omega_t0 =
      deformed.map<QSqrt2>([](const LaurentExp& x) { return x.at_t_zero(); });

  bool parallel = true;
  for (int l = 0; l < n; ++l) {
    LMat lam = lift_matrix(conn[l]);
    LMat nabla_ainv = commutator(lam, big_a_inv);
    if (l == t_direction) {
      nabla_ainv += big_a_inv.map<LaurentExp>([](const LaurentExp& x) { return x.ddt(); });
    }
    LMat dl = big_a * nabla_ainv;
    if (!dl.is_zero()) report.nonzero_d.push_back(l);
    // Stabilizer identity: the infinitesimal action of D_l kills w0.
    if (!endo_action(dl, w0).is_zero()) parallel = false;
    report.d.push_back(std::move(dl));
  }
  report.parallel = parallel;
  return report;
}

}  // namespace g2holo
