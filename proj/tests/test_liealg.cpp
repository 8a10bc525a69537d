#include "g2holo/atlas.hpp"
#include "g2holo/lie_algebra.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace g2holo;

TEST_SUITE_BEGIN("liealg");

namespace {

QVec e(int i) { return QVec::basis(7, i - 1); }

QLieAlgebra heisenberg3() {
  QLieAlgebra g(3);
  QVec c(3);
  c[2] = QSqrt2(1);
  g.set_bracket(0, 1, c);  // [e1, e2] = e3
  return g;
}

}  // namespace

TEST_CASE("brackets of the example family") {
  QLieAlgebra g = example_family(QSqrt2(1)).lie;
  QVec expected(7);
  expected[1] = QSqrt2(-1);
  expected[3] = QSqrt2(-2);
  expected[5] = QSqrt2(-1);
  CHECK(g.bracket(e(5), e(6)) == expected);

  // The central direction e4 - 2 e2.
  CHECK(g.bracket(e(4) - QSqrt2(2) * e(2), e(5)).is_zero());

  testing::Rng rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    QVec x = rng.vector(7), y = rng.vector(7);
    CHECK(g.bracket(x, x).is_zero());
    CHECK(g.bracket(x, y) == -g.bracket(y, x));
  }
}

TEST_CASE("jacobi check is clean across the family") {
  for (const QSqrt2& eps : {QSqrt2(0), QSqrt2(1), QSqrt2(-3)}) {
    CHECK(jacobi_check(example_family(eps).lie).ok());
  }
  CHECK(jacobi_check(QLieAlgebra(7)).ok());  // abelian
}

TEST_CASE("jacobi check pinpoints a genuine violation") {
  // Rescaling [e3,e5] = 2 e3 to 3 e3 breaks the identity; the first
  // violation sits at (i,j,k) = (3,5,7), component 1, residual -1/2.
  QLieAlgebra g = example_family(QSqrt2(1)).lie;
  QVec wrong(7);
  wrong[2] = QSqrt2(3);
  g.set_bracket(2, 4, wrong);
  auto report = jacobi_check(g);
  REQUIRE(!report.ok());
  const auto& v = report.violations.front();
  CHECK(v.i == 2);
  CHECK(v.j == 4);
  CHECK(v.k == 6);
  CHECK(v.l == 0);
  CHECK(v.residual == QSqrt2(Rational(-1, 2)));
}

TEST_CASE("the e4 coefficient of [e5,e6] is not constrained by jacobi") {
  // The adjoint of e4 kills e1..e4 and e7, so changing this coefficient
  // never enters a Jacobi residual: the perturbed structure is still a Lie
  // algebra.
  QLieAlgebra g = example_family(QSqrt2(1)).lie;
  QVec perturbed(7);
  perturbed[1] = QSqrt2(-1);
  perturbed[3] = QSqrt2(-3);
  perturbed[5] = QSqrt2(-1);
  g.set_bracket(4, 5, perturbed);
  CHECK(jacobi_check(g).ok());
}

TEST_CASE("centers on the pinned examples") {
  Subspace z = center(example_family(QSqrt2(1)).lie);
  CHECK(z.dim() == 1);
  CHECK(z.contains(e(4) - QSqrt2(2) * e(2)));

  CHECK(center(QLieAlgebra(7)) == Subspace::full(7));

  Subspace hz = center(heisenberg3());
  CHECK(hz.dim() == 1);
  CHECK(hz.contains(QVec::basis(3, 2)));
}

TEST_CASE("derived series of the example family") {
  QLieAlgebra g = example_family(QSqrt2(1)).lie;
  auto series = derived_series(g);
  REQUIRE(series.size() >= 3);
  const Subspace& d1 = series[1];
  CHECK(d1.dim() == 5);
  for (int i : {1, 2, 3, 7}) CHECK(d1.contains(e(i)));
  CHECK(d1.contains(QSqrt2(2) * e(4) + e(6)));
  const Subspace& d2 = series[2];
  CHECK(d2 == Subspace::span(7, {e(1), e(2)}));

  // Derived members are ideals.
  for (const auto& member : series) {
    for (int i = 1; i <= 7; ++i)
      for (const auto& b : member.basis()) CHECK(member.contains(g.bracket(e(i), b)));
  }
}

TEST_CASE("derived series of the rank-one solvable quotient") {
  // [X,Y] = -Y, [X,Z] = (3/2) Z.
  QLieAlgebra s(3);
  QVec y(3), z(3);
  y[1] = QSqrt2(-1);
  s.set_bracket(0, 1, y);
  z[2] = QSqrt2(Rational(3, 2));
  s.set_bracket(0, 2, z);
  auto series = derived_series(s);
  REQUIRE(series.size() >= 3);
  CHECK(series[1] == Subspace::span(3, {QVec::basis(3, 1), QVec::basis(3, 2)}));
  CHECK(series[2].is_zero());
}

TEST_CASE("generated subalgebras on the pinned examples") {
  QLieAlgebra g = example_family(QSqrt2(1)).lie;
  CHECK(subalgebra_generated(g, {e(1)}) == Subspace::span(7, {e(1)}));

  Subspace grown = subalgebra_generated(g, {e(5), e(6)});
  CHECK(grown.dim() == 5);
  CHECK(grown.contains(e(2)));
  CHECK(grown.contains(e(4)));
  CHECK(!grown.contains(e(3)));

  std::vector<QVec> all;
  for (int i = 1; i <= 7; ++i) all.push_back(e(i));
  CHECK(subalgebra_generated(g, all) == Subspace::full(7));
}

TEST_CASE("quotient actions on the pinned examples") {
  QLieAlgebra g = example_family(QSqrt2(1)).lie;
  auto series = derived_series(g);
  QuotientAction qa = quotient_module(g, series[2], series[1], e(5));
  REQUIRE(qa.action.rows() == 3);
  EigenResult eig = eigenlines(qa.action);
  REQUIRE(eig.lines.size() == 3);
  CHECK(eig.lines[0].value == QSqrt2(-2));
  CHECK(eig.lines[1].value == QSqrt2(-1));
  CHECK(eig.lines[2].value == QSqrt2(Rational(3, 2)));

  // A central actor induces the zero action.
  QuotientAction central = quotient_module(g, series[2], series[1], e(4) - QSqrt2(2) * e(2));
  CHECK(central.action.is_zero());

  // sub = inside gives the empty action.
  QuotientAction empty = quotient_module(g, series[1], series[1], e(5));
  CHECK(empty.action.rows() == 0);
}

TEST_CASE("quotient invariance violations are reported") {
  QLieAlgebra g = example_family(QSqrt2(1)).lie;
  Subspace not_invariant = Subspace::span(7, {e(6)});
  CHECK_THROWS_AS(quotient_module(g, Subspace::zero(7), not_invariant, e(5)),
                  std::domain_error);
}

TEST_CASE("the explicit family isomorphism respects brackets") {
  for (auto [eps, eps_prime] :
       {std::pair{QSqrt2(0), QSqrt2(1)}, {QSqrt2(1), QSqrt2(2)}, {QSqrt2(-1), QSqrt2(1)}}) {
    QLieAlgebra from = example_family(eps).lie;
    QLieAlgebra to = example_family(eps_prime).lie;
    QMat phi = example_family_isomorphism(eps, eps_prime);
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) {
        QVec lhs = phi * from.bracket_basis(i, j);
        QVec rhs = to.bracket(phi.column(i), phi.column(j));
        CHECK(lhs == rhs);
      }
  }
}

TEST_SUITE_END();
