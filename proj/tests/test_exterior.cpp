#include "g2holo/g2core.hpp"
#include "g2holo/geometry.hpp"
#include "g2holo/json_io.hpp"
#include "g2holo/multipoly.hpp"
#include "g2holo/threeform.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace g2holo;

TEST_SUITE_BEGIN("exterior");

namespace {
const QSqrt2 r2 = QSqrt2::sqrt2();

QVec e(int i) { return QVec::basis(7, i - 1); }
}  // namespace

TEST_CASE("standard 3-form evaluations") {
  QThreeForm w = standard_three_form();
  CHECK(w.eval(e(1), e(6), e(7)) == r2);
  CHECK(w.eval(e(2), e(3), e(5)) == r2);
  CHECK(w.eval(e(4), e(1), e(5)) == QSqrt2(-1));
  CHECK(w.eval(e(1), e(1), e(7)) == QSqrt2(0));
}

TEST_CASE("evaluation is trilinear and alternating") {
  testing::Rng rng(53);
  QThreeForm w = standard_three_form();
  for (int trial = 0; trial < 15; ++trial) {
    QVec x = rng.vector(7), y = rng.vector(7), z = rng.vector(7);
    CHECK(w.eval(x, y, z) == -w.eval(y, x, z));
    CHECK(w.eval(x, y, z) == -w.eval(x, z, y));
    CHECK(w.eval(x, x, z) == QSqrt2(0));
    QSqrt2 c = rng.qsqrt2();
    CHECK(w.eval(c * x, y, z) == c * w.eval(x, y, z));
    CHECK(w.eval(x + y, y, z) == w.eval(x, y, z));
  }
}

TEST_CASE("infinitesimal action on the pinned examples") {
  QThreeForm w = standard_three_form();
  for (int k = 1; k <= 14; ++k) CHECK(endo_action(g2_generator(k), w).is_zero());
  CHECK(endo_action(QMat::identity(7), w) == QSqrt2(-3) * w);
  CHECK(endo_action(QMat(7, 7), w).is_zero());
}

TEST_CASE("pullback on the pinned examples") {
  QThreeForm w = standard_three_form();
  CHECK(pullback(QMat::identity(7), w) == w);
  QMat t2 = QMat::identity(2);
  CHECK(pullback(phi_T(t2), w) == w);
}

TEST_CASE("pullback is contravariant functorial") {
  testing::Rng rng(59);
  QThreeForm w = standard_three_form();
  for (int trial = 0; trial < 8; ++trial) {
    QMat p = rng.matrix(7, 7), q = rng.matrix(7, 7);
    CHECK(pullback(p * q, w) == pullback(q, pullback(p, w)));
  }
}

TEST_CASE("the action is the derivative of the pullback") {
  // Compare endo_action with the degree-one term of the pullback under
  // I + s X, in a formal parameter s.
  testing::Rng rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    QMat x = rng.matrix(7, 7);
    ThreeForm<MultiPoly> w =
        standard_three_form().map<MultiPoly>([](const QSqrt2& c) { return MultiPoly(c); });
    Mat<MultiPoly> shift = Mat<MultiPoly>::identity(7);
    MultiPoly s = MultiPoly::variable("s");
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) shift.at(i, j) += s * MultiPoly(x.at(i, j));
    ThreeForm<MultiPoly> pulled = pullback(shift, w);
    QThreeForm action = endo_action(x, standard_three_form());
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        for (int k = j + 1; k < 7; ++k) {
          // Coefficient of s^1.
          QSqrt2 derivative(0);
          for (const auto& [mono, coeff] : pulled.coeff(i, j, k).terms()) {
            auto it = mono.find("s");
            if (it != mono.end() && it->second == 1 && mono.size() == 1) derivative = coeff;
          }
          CHECK(derivative == -action.coeff(i, j, k));
        }
  }
}

TEST_CASE("the full annihilator of the 3-form is the 14-dimensional algebra") {
  // {X in gl(7) : X . w0 = 0} computed as an exact kernel over the 49
  // matrix unknowns.
  QThreeForm w = standard_three_form();
  std::vector<QVec> columns;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) {
      QMat eab(7, 7);
      eab.at(a, b) = QSqrt2(1);
      columns.push_back(QVec(35));
      QThreeForm action = endo_action(eab, w);
      int s = 0;
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
          for (int k = j + 1; k < 7; ++k, ++s) columns.back()[s] = action.coeff(i, j, k);
    }
  QMat system(35, 49);
  for (int col = 0; col < 49; ++col)
    for (int row = 0; row < 35; ++row) system.at(row, col) = columns[static_cast<size_t>(col)][row];
  Subspace stabilizer = kernel(system);
  CHECK(stabilizer.dim() == 14);
  // It is exactly the span of the fourteen generators (flattened row-major).
  CHECK(stabilizer == family(FamilyName::G2Star).flat);
}

TEST_CASE("the three-form JSON format round trips") {
  QThreeForm w = standard_three_form();
  CHECK(three_form_from_json(three_form_to_json(w)) == w);
  testing::Rng rng(127);
  QThreeForm random;
  for (int t = 0; t < 6; ++t) {
    int i = rng.integer(0, 4);
    int j = rng.integer(i + 1, 5);
    int k = rng.integer(j + 1, 6);
    random.coeff(i, j, k) = rng.qsqrt2();
  }
  CHECK(three_form_from_json(three_form_to_json(random)) == random);
  CHECK_THROWS(three_form_from_json("[{\"ijk\": [2,1,3], \"c\": \"1\"}]"));
}

TEST_CASE("the identity deformation fixes the three-form") {
  // exp of the zero generator is the identity; its pullback is trivial.
  LMat a = exp_nilpotent(deformation_generator(QSqrt2(0), QSqrt2(0), QSqrt2(0)));
  CHECK(a == LMat::identity(7));
  ThreeForm<LaurentExp> w0 =
      standard_three_form().map<LaurentExp>([](const QSqrt2& c) { return LaurentExp(c); });
  CHECK(pullback(a, w0) == w0);
}

TEST_CASE("three-form dimension mismatches are rejected") {
  QThreeForm w = standard_three_form();
  CHECK_THROWS_AS(w.eval(QVec(3), QVec(7), QVec(7)), std::domain_error);
  CHECK_THROWS_AS(endo_action(QMat(3, 3), w), std::domain_error);
}

TEST_SUITE_END();
