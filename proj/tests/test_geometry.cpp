#include "g2holo/atlas.hpp"
#include "g2holo/geometry.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace g2holo;

TEST_SUITE_BEGIN("geometry");

namespace {
const QSqrt2 r2 = QSqrt2::sqrt2();

QVec e(int i) { return QVec::basis(7, i - 1); }

MetricLieAlgebra flat_abelian() {
  MetricLieAlgebra m;
  m.lie = QLieAlgebra(7);
  m.gram = standard_gram();
  return m;
}

// Heisenberg algebra [e1,e2] = e3 padded by four abelian directions, with
// the split metric. A second well-defined metric Lie algebra for oracles.
MetricLieAlgebra heisenberg7() {
  MetricLieAlgebra m;
  m.lie = QLieAlgebra(7);
  QVec c(7);
  c[2] = QSqrt2(1);
  m.lie.set_bracket(0, 1, c);
  m.gram = standard_gram();
  return m;
}

// Independent route to the Levi-Civita connection: solve the full linear
// system of metric-skewness and torsion conditions and insist the solution
// is unique.
Connection connection_by_linear_solve(const MetricLieAlgebra& m) {
  const int n = m.dim();
  const int unknowns = n * n * n;  // Lambda_i entry (r, c) at i*n*n + r*n + c
  std::vector<QVec> rows;
  std::vector<QSqrt2> rhs;
  // Skewness: Lambda_i^T G + G Lambda_i = 0.
  for (int i = 0; i < n; ++i)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        QVec row(unknowns);
        for (int k = 0; k < n; ++k) {
          row[i * n * n + k * n + p] += m.gram.at(k, q);
          row[i * n * n + k * n + q] += m.gram.at(p, k);
        }
        rows.push_back(std::move(row));
        rhs.push_back(QSqrt2(0));
      }
  // Torsion: Lambda_i e_j - Lambda_j e_i = [e_i, e_j].
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        QVec row(unknowns);
        row[i * n * n + r * n + j] += QSqrt2(1);
        row[j * n * n + r * n + i] -= QSqrt2(1);
        rows.push_back(std::move(row));
        rhs.push_back(m.lie.bracket_basis(i, j)[r]);
      }
  QMat system(static_cast<int>(rows.size()), unknowns);
  QVec b(static_cast<int>(rows.size()));
  for (size_t k = 0; k < rows.size(); ++k) {
    for (int c = 0; c < unknowns; ++c) system.at(static_cast<int>(k), c) = rows[k][c];
    b[static_cast<int>(k)] = rhs[k];
  }
  REQUIRE(kernel(system).dim() == 0);  // uniqueness
  auto x = solve(system, b);
  REQUIRE(x.has_value());
  Connection c;
  for (int i = 0; i < n; ++i) {
    QMat lam(n, n);
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) lam.at(r, col) = (*x)[i * n * n + r * n + col];
    c.lambda.push_back(std::move(lam));
  }
  return c;
}

}  // namespace

TEST_CASE("flat abelian space has a vanishing connection") {
  MetricLieAlgebra m = flat_abelian();
  Connection c = levi_civita(m);
  for (int i = 0; i < 7; ++i) CHECK(c[i].is_zero());
  CurvatureTensor r = curvature(m, c);
  for (const auto& rij : r.r) CHECK(rij.is_zero());
  CHECK(holonomy(m, c).flat.dim() == 0);
}

TEST_CASE("koszul output satisfies both connection invariants") {
  for (const QSqrt2& eps : {QSqrt2(0), QSqrt2(1), QSqrt2(-2)}) {
    MetricLieAlgebra m = example_family(eps);
    CHECK(is_metric_connection(m, levi_civita(m)));
  }
  CHECK(is_metric_connection(heisenberg7(), levi_civita(heisenberg7())));
}

TEST_CASE("koszul agrees with the independent linear-system oracle") {
  for (MetricLieAlgebra m : {example_family(QSqrt2(1)), heisenberg7()}) {
    Connection koszul = levi_civita(m);
    Connection solved = connection_by_linear_solve(m);
    for (int i = 0; i < 7; ++i) CHECK(koszul[i] == solved[i]);
  }
}

TEST_CASE("degenerate metrics are rejected") {
  MetricLieAlgebra m = flat_abelian();
  m.gram = QMat(7, 7);
  CHECK_THROWS_AS(levi_civita(m), std::domain_error);
  CHECK_THROWS_AS(m.validate(), std::domain_error);
}

TEST_CASE("curvature values of the example family") {
  MetricLieAlgebra m1 = example_family(QSqrt2(1));
  CurvatureTensor r = curvature(m1, levi_civita(m1));
  const MatrixSpan& m102 = family(FamilyName::M102);
  for (const auto& rij : r.r) CHECK(m102.flat.contains(rij.flatten()));

  MetricLieAlgebra m0 = example_family(QSqrt2(0));
  CurvatureTensor r0 = curvature(m0, levi_civita(m0));
  MatrixSpan span0 = matrix_span(7, r0.r);
  CHECK(span0.flat.dim() == 2);
  CHECK(span0.flat == family(FamilyName::M101).flat);
}

TEST_CASE("curvature carries the pair symmetry") {
  MetricLieAlgebra m = example_family(QSqrt2(-2));
  CurvatureTensor r = curvature(m, levi_civita(m));
  auto ip = [&](const QVec& x, const QVec& y) {
    QSqrt2 s(0);
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) {
        if (x[a].is_zero() || m.gram.at(a, b).is_zero()) continue;
        s += x[a] * m.gram.at(a, b) * y[b];
      }
    return s;
  };
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        for (int l = k + 1; l < 7; ++l) {
          CHECK(ip(r.at(i, j) * e(k + 1), e(l + 1)) == ip(r.at(k, l) * e(i + 1), e(j + 1)));
        }
}

TEST_CASE("second bianchi residuals vanish for levi-civita connections") {
  for (MetricLieAlgebra m : {example_family(QSqrt2(1)), flat_abelian(), heisenberg7()}) {
    Connection c = levi_civita(m);
    CurvatureTensor r = curvature(m, c);
    CHECK(!second_bianchi_scan(m, c, r).has_value());
  }
}

TEST_CASE("corrupting the connection surfaces a bianchi residual") {
  MetricLieAlgebra m = example_family(QSqrt2(1));
  Connection c = levi_civita(m);
  // Shift the A-block of Lambda_5 by the identity: still a connection-shaped
  // object, no longer Levi-Civita for these brackets.
  c.lambda[4] += h_build3(QMat::identity(2), QSqrt2(0), {QSqrt2(0), QSqrt2(0)});
  CurvatureTensor r = curvature(m, c);
  auto first = second_bianchi_scan(m, c, r);
  REQUIRE(first.has_value());
  // Frozen from the perturbation oracle: the first nonzero residual triple.
  CHECK((*first)[0] == 4);
  CHECK((*first)[1] == 5);
  CHECK((*first)[2] == 6);
}

TEST_CASE("holonomy of the example family") {
  MetricLieAlgebra m1 = example_family(QSqrt2(1));
  Connection c1 = levi_civita(m1);
  MatrixSpan h1 = holonomy(m1, c1);
  CHECK(h1.flat.dim() == 3);
  CHECK(h1.flat == family(FamilyName::M102).flat);

  MetricLieAlgebra m0 = example_family(QSqrt2(0));
  Connection c0 = levi_civita(m0);
  MatrixSpan h0 = holonomy(m0, c0);
  CHECK(h0.flat.dim() == 2);
  CHECK(h0.flat == family(FamilyName::M101).flat);

  // Closure and membership invariants.
  CurvatureTensor r = curvature(m1, c1);
  for (const auto& rij : r.r) CHECK(h1.flat.contains(rij.flatten()));
  for (const auto& b : h1.basis)
    for (int l = 0; l < 7; ++l) CHECK(h1.flat.contains(commutator(c1[l], b).flatten()));
}

TEST_CASE("the connection stays inside the stabilizer algebra") {
  QThreeForm w = standard_three_form();
  for (const QSqrt2& eps : {QSqrt2(0), QSqrt2(1), QSqrt2(Rational(7, 3))}) {
    MetricLieAlgebra m = example_family(eps);
    Connection c = levi_civita(m);
    for (int i = 0; i < 7; ++i) {
      CHECK(endo_action(c[i], w).is_zero());
      CHECK(family(FamilyName::HIII).flat.contains(c[i].flatten()));
    }
  }
}

TEST_CASE("t-dependent fields of the example family are parallel") {
  MetricLieAlgebra m = example_family(QSqrt2(1));
  Connection c = levi_civita(m);
  const int exponents[3] = {1, -2, 3};
  for (int which = 0; which < 3; ++which) {
    LVec field(7);
    field[which] = LaurentExp::e_power(exponents[which]);
    for (int l = 0; l < 7; ++l) CHECK(covariant_derivative_t(c, field, l).is_zero());
    CHECK(field[which].at_t_zero() == QSqrt2(1));
  }
}

TEST_CASE("a constant field fails to be parallel where the table says so") {
  MetricLieAlgebra m = example_family(QSqrt2(1));
  Connection c = levi_civita(m);
  LVec field = lift_vector(e(4));
  LVec derivative = covariant_derivative_t(c, field, 5);  // along e6
  LVec expected(7);
  expected[0] = LaurentExp(QSqrt2(2));
  CHECK(derivative == expected);
}

TEST_CASE("covariant derivatives pair vectors against forms") {
  testing::Rng rng(103);
  MetricLieAlgebra m = example_family(QSqrt2(-1));
  Connection c = levi_civita(m);
  for (int trial = 0; trial < 5; ++trial) {
    LVec x(7), theta(7);
    for (int i = 0; i < 7; ++i) {
      x[i] = LaurentExp::monomial(rng.qsqrt2(2, 2), rng.integer(-2, 2));
      theta[i] = LaurentExp::monomial(rng.qsqrt2(2, 2), rng.integer(-2, 2));
    }
    for (int l = 0; l < 7; ++l) {
      LVec dx = covariant_derivative_t(c, x, l);
      LVec dtheta = covariant_derivative_t_form(c, theta, l);
      LaurentExp pairing;
      for (int i = 0; i < 7; ++i) pairing += theta[i] * x[i];
      LaurentExp lhs = (l == 4) ? pairing.ddt() : LaurentExp();
      LaurentExp rhs;
      for (int i = 0; i < 7; ++i) rhs += dtheta[i] * x[i] + theta[i] * dx[i];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("deformation generators cube to zero") {
  testing::Rng rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    LMat m = deformation_generator(rng.qsqrt2(), rng.qsqrt2(), rng.qsqrt2());
    CHECK((m * m * m).is_zero());
  }
}

TEST_CASE("deformation checks on the pinned examples") {
  MetricLieAlgebra m = example_family(QSqrt2(1));
  DeformationReport trivial = check_deformation_parallel(m, QSqrt2(0), QSqrt2(0), QSqrt2(0));
  CHECK(trivial.ok());
  CHECK(trivial.nonzero_d.empty());

  DeformationReport ones = check_deformation_parallel(m, QSqrt2(1), QSqrt2(1), QSqrt2(1));
  CHECK(ones.ok());
  CHECK(ones.nonzero_d == std::vector<int>{5});
  LMat expected(7, 7);
  expected.at(1, 4) = LaurentExp::monomial(QSqrt2(2), -2);
  expected.at(2, 4) = LaurentExp::monomial(QSqrt2(2), 3);
  expected.at(0, 5) = LaurentExp::monomial(QSqrt2(-2), -2);
  expected.at(0, 6) = LaurentExp::monomial(QSqrt2(-2), 3);
  CHECK(ones.d[5] == expected);
  CHECK(trivial.omega_t0 == standard_three_form());
  CHECK(ones.omega_t0 != standard_three_form());
  // The deformed form still has the full 14-dimensional stabilizer at the
  // base point: its annihilator is a conjugate of the standard algebra.
  std::vector<QVec> columns;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      QMat eab(7, 7);
      eab.at(a, b) = QSqrt2(1);
      QThreeForm action = endo_action(eab, ones.omega_t0);
      QVec col(35);
      int s = 0;
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
          for (int k = j + 1; k < 7; ++k, ++s) col[s] = action.coeff(i, j, k);
      columns.push_back(col);
    }
  QMat system(35, 49);
  for (int col = 0; col < 49; ++col)
    for (int row = 0; row < 35; ++row) system.at(row, col) = columns[static_cast<size_t>(col)][row];
  CHECK(kernel(system).dim() == 14);
}

TEST_CASE("holonomy is equivariant under structure-preserving basis changes") {
  // Conjugating the whole metric algebra by a transformation fixing the
  // 3-form and the metric conjugates the connection, the curvature, and
  // the holonomy algebra.
  testing::Rng rng(131);
  MetricLieAlgebra m = example_family(QSqrt2(1));
  MatrixSpan hol = holonomy(m, levi_civita(m));
  for (int trial = 0; trial < 3; ++trial) {
    QMat phi = phi_T(rng.invertible(2));
    auto phi_inv = inverse(phi);
    REQUIRE(phi_inv.has_value());
    MetricLieAlgebra moved = pushforward(m, phi);
    CHECK(moved.gram == m.gram);  // the transformation is an isometry
    MatrixSpan moved_hol = holonomy(moved, levi_civita(moved));
    Subspace expected(49);
    for (const auto& b : hol.basis) expected.insert((phi * b * *phi_inv).flatten());
    CHECK(moved_hol.flat == expected);
  }
}

TEST_CASE("pushforward preserves validity and transported metrics") {
  MetricLieAlgebra m = example_family(QSqrt2(2));
  QMat phi = example_family_isomorphism(QSqrt2(2), QSqrt2(0));
  MetricLieAlgebra pushed = pushforward(m, phi);
  CHECK_NOTHROW(pushed.validate());
  // The transported brackets are those of the target family member.
  QLieAlgebra target = example_family(QSqrt2(0)).lie;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      CHECK(pushed.lie.bracket_basis(i, j) == target.bracket_basis(i, j));
}

TEST_SUITE_END();
