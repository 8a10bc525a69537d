#include "g2holo/g2core.hpp"
#include "g2holo/linalg.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace g2holo;

TEST_SUITE_BEGIN("linalg");

namespace {
const QSqrt2 r2 = QSqrt2::sqrt2();
}

TEST_CASE("rref on the pinned examples") {
  CHECK(rref(QMat::identity(3)).rank == 3);
  CHECK(rref(QMat::identity(3)).mat == QMat::identity(3));
  CHECK(rref(QMat(4, 5)).rank == 0);

  // The 14 generator matrices, flattened to rows of length 49.
  QMat rows(14, 49);
  for (int k = 1; k <= 14; ++k) {
    QVec flat = g2_generator(k).flatten();
    for (int j = 0; j < 49; ++j) rows.at(k - 1, j) = flat[j];
  }
  CHECK(rref(rows).rank == 14);
}

TEST_CASE("kernel on the pinned examples") {
  CHECK(kernel(QMat::identity(5)).dim() == 0);

  QMat m(1, 2);
  m.at(0, 0) = QSqrt2(1);
  m.at(0, 1) = r2;
  Subspace k = kernel(m);
  CHECK(k.dim() == 1);
  QVec dir(2);
  dir[0] = -r2;
  dir[1] = QSqrt2(1);
  CHECK(k.contains(dir));
}

TEST_CASE("rank plus nullity is the column count") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = rng.integer(1, 6), cols = rng.integer(1, 6);
    QMat m = rng.matrix(rows, cols);
    CHECK(rref(m).rank + kernel(m).dim() == cols);
  }
}

TEST_CASE("subspace spans are canonical") {
  testing::Rng rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5;
    std::vector<QVec> vecs;
    for (int i = 0; i < 3; ++i) vecs.push_back(rng.vector(n));
    Subspace a = Subspace::span(n, vecs);
    // The same space from scrambled spanning sets.
    std::vector<QVec> scrambled;
    scrambled.push_back(rng.nonzero_qsqrt2() * vecs[1]);
    scrambled.push_back(vecs[0] + vecs[2]);
    scrambled.push_back(vecs[2]);
    scrambled.push_back(vecs[0] - vecs[1]);
    Subspace b = Subspace::span(n, scrambled);
    CHECK(a == b);
    CHECK(a.contains(b));
  }
}

TEST_CASE("solve and inverse agree") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    QMat m = rng.invertible(4);
    QVec b = rng.vector(4);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m * *x == b);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(*inv * m == QMat::identity(4));
  }
  QMat singular(2, 2);
  singular.at(0, 0) = QSqrt2(1);
  CHECK(!inverse(singular).has_value());
}

TEST_CASE("span closure on the pinned examples") {
  auto bracket_product = [](const QMat& x, const QMat& y) { return commutator(x, y); };
  CHECK(span_close(7, {QMat(7, 7)}, bracket_product).flat.dim() == 0);

  std::vector<QMat> gens;
  for (int k = 1; k <= 14; ++k) gens.push_back(g2_generator(k));
  MatrixSpan closed = span_close(7, gens, bracket_product);
  CHECK(closed.flat.dim() == 14);
}

TEST_CASE("span closure output is closed under the products") {
  std::vector<QMat> gens = {g2_generator(2), g2_generator(5), g2_generator(11)};
  MatrixSpan s = span_close(7, gens, [](const QMat& x, const QMat& y) { return commutator(x, y); });
  for (const auto& b : s.basis)
    for (const auto& g : gens) CHECK(s.flat.contains(commutator(b, g).flatten()));
}

TEST_CASE("gram signature on the pinned examples") {
  // The split-g2 metric has exact inertia 3 positive, 4 negative; the
  // source's R^{4,3} label lists the negative count first.
  auto [pos, neg, zero] = gram_signature(standard_gram());
  CHECK(pos == 3);
  CHECK(neg == 4);
  CHECK(zero == 0);
  CHECK(gram_signature(QMat::identity(7)) == std::tuple<int, int, int>{7, 0, 0});
  CHECK(gram_signature(QMat(7, 7)) == std::tuple<int, int, int>{0, 0, 7});
}

TEST_CASE("gram signature is congruence invariant") {
  testing::Rng rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    QMat g = rng.matrix(4, 4);
    g = g + g.transpose();  // symmetrize
    QMat s = rng.invertible(4);
    CHECK(gram_signature(g) == gram_signature(s.transpose() * g * s));
  }
}

TEST_CASE("eigenlines on the pinned examples") {
  QMat d(2, 2);
  d.at(0, 0) = QSqrt2(1);
  d.at(1, 1) = QSqrt2(Rational(-3, 2));
  EigenResult eig = eigenlines(d);
  REQUIRE(eig.lines.size() == 2);
  CHECK(eig.fully_split());
  CHECK(eig.lines[0].value == QSqrt2(Rational(-3, 2)));
  CHECK(eig.lines[1].value == QSqrt2(1));

  QMat rot(2, 2);
  rot.at(0, 1) = QSqrt2(-1);
  rot.at(1, 0) = QSqrt2(1);
  EigenResult rot_eig = eigenlines(rot);
  CHECK(rot_eig.lines.empty());
  CHECK(rot_eig.unresolved.size() == 3);  // an unresolved quadratic factor

  QMat twice(2, 2);
  twice.at(0, 0) = twice.at(1, 1) = QSqrt2(2);
  EigenResult twice_eig = eigenlines(twice);
  REQUIRE(twice_eig.lines.size() == 1);
  CHECK(twice_eig.lines[0].value == QSqrt2(2));
  CHECK(twice_eig.lines[0].space.dim() == 2);
}

TEST_CASE("eigenlines resolves quadratic sqrt-2 spectra") {
  // x^2 = 2 has the two roots +-r2 in the ground field.
  QMat m(2, 2);
  m.at(0, 1) = QSqrt2(2);
  m.at(1, 0) = QSqrt2(1);
  EigenResult eig = eigenlines(m);
  REQUIRE(eig.lines.size() == 2);
  CHECK(eig.lines[0].value == -r2);
  CHECK(eig.lines[1].value == r2);
  CHECK(eig.fully_split());
}

TEST_CASE("square roots inside the quadratic field") {
  CHECK(*sqrt_in_qsqrt2(QSqrt2(2)) == r2);
  CHECK(*sqrt_in_qsqrt2(QSqrt2(Rational(9, 4))) == QSqrt2(Rational(3, 2)));
  CHECK(*sqrt_in_qsqrt2(QSqrt2(3) + QSqrt2(2) * r2) == QSqrt2(1) + r2);
  CHECK(!sqrt_in_qsqrt2(QSqrt2(3)).has_value());
  CHECK(!sqrt_in_qsqrt2(QSqrt2(-1)).has_value());
  testing::Rng rng(139);
  for (int trial = 0; trial < 20; ++trial) {
    QSqrt2 x = rng.qsqrt2();
    QSqrt2 square = x * x;
    auto root = sqrt_in_qsqrt2(square);
    REQUIRE(root.has_value());
    CHECK(*root * *root == square);
    CHECK(root->sign() >= 0);
  }
}

TEST_CASE("characteristic polynomial matches determinant shifts") {
  testing::Rng rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    QMat m = rng.matrix(4, 4);
    UniPoly p = characteristic_polynomial(m);
    QSqrt2 x = rng.qsqrt2(2, 2);
    QMat shifted = m;
    for (int i = 0; i < 4; ++i) shifted.at(i, i) -= x;
    // charpoly(x) = det(xI - m) = (-1)^n det(m - xI)
    CHECK(eval_poly(p, x) == determinant(shifted));
  }
}

TEST_SUITE_END();
