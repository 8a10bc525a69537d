#include "g2holo/atlas.hpp"
#include "g2holo/repanalysis.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace g2holo;

TEST_SUITE_BEGIN("repanalysis");

namespace {

Representation family_rep(FamilyName name) { return {family(name).basis, standard_gram()}; }

Representation zero_rep() { return {{}, standard_gram()}; }

QMat diag10_h() {
  QMat a(2, 2);
  a.at(0, 0) = QSqrt2(1);
  return h_build3(a, QSqrt2(0), {QSqrt2(0), QSqrt2(0)});
}

Subspace socle_123() {
  return Subspace::span(7, {QVec::basis(7, 0), QVec::basis(7, 1), QVec::basis(7, 2)});
}

}  // namespace

TEST_CASE("associative envelopes on the pinned examples") {
  MatrixSpan trivial = assoc_envelope(zero_rep());
  CHECK(trivial.flat.dim() == 1);
  CHECK(trivial.flat.contains(QMat::identity(7).flatten()));

  MatrixSpan m102_env = assoc_envelope(family_rep(FamilyName::M102));
  CHECK(m102_env.flat.dim() == 5);

  MatrixSpan g2_env = assoc_envelope(family_rep(FamilyName::G2Star));
  CHECK(g2_env.flat.dim() == 49);
}

TEST_CASE("radicals on the pinned examples") {
  CHECK(radical(assoc_envelope(zero_rep())).flat.dim() == 0);
  CHECK(radical(assoc_envelope(family_rep(FamilyName::G2Star))).flat.dim() == 0);

  MatrixSpan env = assoc_envelope(family_rep(FamilyName::M102));
  MatrixSpan rad = radical(env);
  CHECK(rad.flat.dim() == 4);
  for (const auto& gen : family(FamilyName::M102).basis)
    CHECK(rad.flat.contains(gen.flatten()));
}

TEST_CASE("the radical is a nilpotent two-sided ideal") {
  MatrixSpan env = assoc_envelope(family_rep(FamilyName::M102));
  MatrixSpan rad = radical(env);
  for (const auto& x : env.basis)
    for (const auto& nmat : rad.basis) {
      CHECK(rad.flat.contains((x * nmat).flatten()));
      CHECK(rad.flat.contains((nmat * x).flatten()));
    }
  // rad^7 = 0.
  std::vector<QMat> power = rad.basis;
  for (int step = 1; step < 7; ++step) {
    std::vector<QMat> next;
    for (const auto& x : power)
      for (const auto& nmat : rad.basis) next.push_back(x * nmat);
    power = matrix_span(7, next).basis;
  }
  CHECK(power.empty());
}

TEST_CASE("socles on the pinned examples") {
  CHECK(socle(family_rep(FamilyName::M102)) == socle_123());
  Representation tfk_sl2{tfk_list()[0].span.basis, standard_gram()};
  CHECK(socle(tfk_sl2) == socle_123());
  CHECK(socle(zero_rep()) == Subspace::full(7));
}

TEST_CASE("the socle is an invariant subspace") {
  for (FamilyName name : {FamilyName::M101, FamilyName::M102, FamilyName::HIII}) {
    Representation rep = family_rep(name);
    Subspace s = socle(rep);
    for (const auto& g : rep.generators)
      for (const auto& b : s.basis()) CHECK(s.contains(g * b));
  }
}

TEST_CASE("indecomposability verdicts on the pinned examples") {
  CHECK(indecomposability(family_rep(FamilyName::M102)).kind == IndecompKind::Indecomposable);
  CHECK(indecomposability(family_rep(FamilyName::M101)).kind == IndecompKind::Indecomposable);

  Representation dec{{diag10_h()}, standard_gram()};
  IndecompVerdict verdict = indecomposability(dec);
  REQUIRE(verdict.kind == IndecompKind::Decomposable);
  // The witness is a proper invariant nondegenerate subspace.
  const Subspace& w = verdict.witness;
  CHECK(w.dim() > 0);
  CHECK(w.dim() < 7);
  for (const auto& b : w.basis()) CHECK(w.contains(diag10_h() * b));
  QMat restricted(w.dim(), w.dim());
  const QMat gram = standard_gram();
  for (int i = 0; i < w.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) {
      QSqrt2 s(0);
      for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
          s += w.basis()[static_cast<size_t>(i)][a] * gram.at(a, b) *
               w.basis()[static_cast<size_t>(j)][b];
      restricted.at(i, j) = s;
    }
  CHECK(inverse(restricted).has_value());

  CHECK(indecomposability(zero_rep()).kind == IndecompKind::Decomposable);
}

TEST_CASE("the abelian families defeat the bare commutant test") {
  // E25 + E16 commutes with every generator of m(1,0,2) and is
  // self-adjoint, so span{I} is a strict subspace of the self-adjoint
  // commutant and the locality certificate is what decides.
  QMat x(7, 7);
  x.at(1, 4) = QSqrt2(1);
  x.at(0, 5) = QSqrt2(1);
  Representation rep = family_rep(FamilyName::M102);
  for (const auto& g : rep.generators) CHECK(commutator(x, g).is_zero());
  const QMat gram = standard_gram();
  CHECK(x.transpose() * gram == gram * x);
  MatrixSpan sa = selfadjoint_commutant(rep);
  CHECK(sa.flat.contains(x.flatten()));
  CHECK(sa.flat.dim() > 1);
  IndecompVerdict verdict = indecomposability(rep);
  CHECK(verdict.kind == IndecompKind::Indecomposable);
  CHECK(verdict.certificate == "commutant algebra is local");
}

TEST_CASE("classification on the pinned examples") {
  RepReport m101 = classify_type(family_rep(FamilyName::M101));
  CHECK(m101.type == RepType::TypeIII);
  CHECK(m101.socle == socle_123());
  CHECK(m101.socle_isotropic);

  MetricLieAlgebra g1 = example_family(QSqrt2(1));
  MatrixSpan hol = holonomy(g1, levi_civita(g1));
  RepReport hol_report = classify_type({hol.basis, standard_gram()});
  CHECK(hol_report.type == RepType::TypeIII);

  RepReport full = classify_type(family_rep(FamilyName::G2Star));
  CHECK(full.type == RepType::Irreducible);
  CHECK(full.socle == Subspace::full(7));

  RepReport dec = classify_type({{diag10_h()}, standard_gram()});
  CHECK(dec.type == RepType::NotApplicable);
}

TEST_CASE("formal curvature spaces on the pinned examples") {
  KSpace k3 = curvature_space(family(FamilyName::HIII).basis, 7);
  CHECK(k3.dimension == 16);

  CHECK(curvature_space({}, 7).dimension == 0);

  KSpace k1 = curvature_space(family(FamilyName::M101).basis, 7);
  CHECK(k1.dimension == 2);
}

TEST_CASE("curvature space elements satisfy the first bianchi identity") {
  KSpace k = curvature_space(family(FamilyName::M102).basis, 7);
  for (const auto& elem : k.basis) {
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        for (int l = j + 1; l < 7; ++l) {
          QVec cyc = elem.at(i, j) * QVec::basis(7, l) + elem.at(j, l) * QVec::basis(7, i) +
                     elem.at(l, i) * QVec::basis(7, j);
          CHECK(cyc.is_zero());
        }
  }
}

TEST_CASE("curvature space elements satisfy the pair symmetry") {
  const QMat gram = standard_gram();
  KSpace k = curvature_space(family(FamilyName::HIII).basis, 7);
  auto ip = [&](const QVec& x, const QVec& y) {
    QSqrt2 s(0);
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) {
        if (x[a].is_zero() || gram.at(a, b).is_zero()) continue;
        s += x[a] * gram.at(a, b) * y[b];
      }
    return s;
  };
  for (const auto& elem : k.basis) {
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        for (int a = 0; a < 7; ++a)
          for (int b = a + 1; b < 7; ++b) {
            CHECK(ip(elem.at(i, j) * QVec::basis(7, a), QVec::basis(7, b)) ==
                  ip(elem.at(a, b) * QVec::basis(7, i), QVec::basis(7, j)));
          }
  }
}

TEST_CASE("berger tests on the pinned examples") {
  CHECK(berger_test(family(FamilyName::M102).basis, 7).is_berger);
  CHECK(berger_test(family(FamilyName::M101).basis, 7).is_berger);

  // A generic metric-skew line is not a Berger algebra; this fixed seed
  // produced a line with no nonzero formal curvature tensors at all.
  testing::Rng rng(113);
  QMat raw = rng.matrix(7, 7);
  const QMat gram = standard_gram();
  auto ginv = inverse(gram);
  REQUIRE(ginv.has_value());
  // Skew-symmetrize with respect to the metric: X - G^-1 X^T G.
  QMat skew = raw - *ginv * raw.transpose() * gram;
  REQUIRE(!skew.is_zero());
  BergerResult generic = berger_test({skew}, 7);
  CHECK(!generic.is_berger);
  CHECK(generic.generated.dim() == 0);
}

TEST_CASE("the generated span never escapes the algebra") {
  for (FamilyName name : {FamilyName::M101, FamilyName::M102, FamilyName::Diag}) {
    BergerResult result = berger_test(family(name).basis, 7);
    CHECK(family(name).flat.contains(result.generated));
  }
}

TEST_SUITE_END();
