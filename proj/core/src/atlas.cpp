#include "g2holo/atlas.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace g2holo {

namespace {
const QSqrt2 kSqrt2 = QSqrt2::sqrt2();
QSqrt2 half() { return QSqrt2(Rational(1, 2)); }
}  // namespace

MetricLieAlgebra example_family(const QSqrt2& eps) {
  MetricLieAlgebra m;
  m.lie = QLieAlgebra(7);
  auto set = [&](int i, int j, std::initializer_list<std::pair<int, QSqrt2>> terms) {
    QVec v(7);
    for (const auto& [k, c] : terms) v[k - 1] = c;
    m.lie.set_bracket(i - 1, j - 1, v);
  };
  set(1, 5, {{1, half()}});
  set(2, 5, {{2, -half()}});
  set(2, 6, {{1, -half()}});
  set(3, 5, {{3, QSqrt2(2)}});
  set(3, 7, {{1, -half()}});
  set(4, 5, {{2, QSqrt2(-1)}});
  set(4, 6, {{1, QSqrt2(-1)}});
  set(5, 6, {{2, -eps}, {4, QSqrt2(-2)}, {6, QSqrt2(-1)}});
  set(5, 7, {{3, -eps}, {7, QSqrt2(Rational(3, 2))}});
  set(6, 7, {{2, kSqrt2}});
  m.gram = standard_gram();
  return m;
}

Connection example_family_connection(const QSqrt2& eps) {
  Connection c;
  const QSqrt2 zero(0);
  QMat a5(2, 2);
  a5.at(0, 0) = QSqrt2(1);
  a5.at(1, 1) = QSqrt2(Rational(-3, 2));
  c.lambda = {
      QMat(7, 7),
      h_build3(QMat(2, 2), zero, {half(), zero}),
      h_build3(QMat(2, 2), zero, {zero, half()}),
      h_build3(QMat(2, 2), zero, {QSqrt2(-1), zero}),
      h_build3(a5, zero, {zero, zero}),
      h_build3(QMat(2, 2), kSqrt2, {eps, zero}),
      h_build3(QMat(2, 2), zero, {zero, eps}),
  };
  return c;
}

QMat example_family_isomorphism(const QSqrt2& eps, const QSqrt2& eps_prime) {
  QMat phi = QMat::identity(7);
  phi.at(1, 5) = QSqrt2(Rational(2, 3)) * (eps_prime - eps);
  phi.at(2, 6) = QSqrt2(Rational(2, 7)) * (eps - eps_prime);
  return phi;
}

MetricLieAlgebra pushforward(const MetricLieAlgebra& m, const QMat& phi) {
  auto phi_inv = inverse(phi);
  if (!phi_inv) throw std::domain_error("pushforward: singular basis change");
  const int n = m.dim();
  MetricLieAlgebra out;
  out.lie = QLieAlgebra(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QVec b = phi * m.lie.bracket(phi_inv->column(i), phi_inv->column(j));
      out.lie.set_bracket(i, j, b);
    }
  out.gram = phi_inv->transpose() * m.gram * *phi_inv;
  return out;
}

namespace {

QSqrt2 pair_with(const QMat& gram, const QVec& x, const QVec& y) {
  QSqrt2 s(0);
  const int n = gram.rows();
  for (int a = 0; a < n; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < n; ++b) {
      if (gram.at(a, b).is_zero() || y[b].is_zero()) continue;
      s += x[a] * gram.at(a, b) * y[b];
    }
  }
  return s;
}

[[noreturn]] void fail_step(const std::string& step, const std::string& why) {
  throw std::domain_error("epsilon_invariant: step '" + step + "': " + why);
}

// Fixes the overall sign of v so that coordinate `preferred` (when nonzero),
// else the first nonzero coordinate, is positive.
QVec orient(QVec v, int preferred, bool negate) {
  int idx = -1;
  if (!v[preferred].is_zero()) {
    idx = preferred;
  } else {
    for (int i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) {
        idx = i;
        break;
      }
    }
  }
  if (idx >= 0 && v[idx].sign() < 0) v = -v;
  if (negate) v = -v;
  return v;
}

}  // namespace

QSqrt2 epsilon_invariant(const MetricLieAlgebra& m, const EpsilonOptions& opts) {
  const int n = m.dim();
  if (n != 7) fail_step("shape", "dimension must be 7");
  m.validate();

  // f4: the center must be a nondegenerate line; normalize <f4,f4> = -1.
  Subspace z = center(m.lie);
  if (z.dim() != 1) fail_step("center", "center is not one-dimensional");
  QVec w = z.basis().front();
  QSqrt2 ww = pair_with(m.gram, w, w);
  if (ww.sign() >= 0) fail_step("center", "center line is not timelike");
  auto scale = sqrt_in_qsqrt2(-ww.inverse());
  if (!scale) fail_step("center", "normalization leaves the scalar field");
  QVec f4 = orient(*scale * w, 3, opts.negate_f4);

  // u: the unique ad-invariant line besides the center.
  std::vector<QVec> candidates;
  auto is_invariant_line = [&](const QVec& v) {
    Subspace line = Subspace::span(n, {v});
    for (int i = 0; i < n; ++i) {
      if (!line.contains(m.lie.bracket(QVec::basis(n, i), v))) return false;
    }
    return true;
  };
  for (int j = 0; j < n; ++j) {
    EigenResult eig = eigenlines(m.lie.ad(QVec::basis(n, j)));
    for (const auto& line : eig.lines) {
      if (line.space.dim() != 1) continue;
      const QVec& v = line.space.basis().front();
      if (z.contains(v) || !is_invariant_line(v)) continue;
      if (std::find(candidates.begin(), candidates.end(), v) == candidates.end())
        candidates.push_back(v);
    }
  }
  if (candidates.size() != 1)
    fail_step("invariant line", "expected exactly one further invariant line, found " +
                                    std::to_string(candidates.size()));
  const QVec u = candidates.front();

  // f5: acts on the invariant line by -1/2, i.e. ad(u) f5 = (1/2) u.
  auto f5_sol = solve(m.lie.ad(u), half() * u);
  if (!f5_sol) fail_step("f5", "no vector acts by -1/2 on the invariant line");
  const QVec f5 = *f5_sol;

  // Quotient q = [g,g] / g^(2) with the f5-action.
  std::vector<Subspace> series = derived_series(m.lie);
  if (series.size() < 3) fail_step("derived series", "too short");
  const Subspace& big = series[1];
  const Subspace& small = series[2];
  if (big.dim() - small.dim() != 3) fail_step("quotient", "dim [g,g]/g^(2) is not 3");
  QuotientAction qa = quotient_module(m.lie, small, big, f5);

  EigenResult eig = eigenlines(qa.action);
  auto eigenclass = [&](const QSqrt2& value) -> QVec {
    for (const auto& line : eig.lines) {
      if (line.value == value) {
        if (line.space.dim() != 1) fail_step("quotient eigenvalues", "eigenspace not a line");
        return line.space.basis().front();
      }
    }
    fail_step("quotient eigenvalues", "missing eigenvalue " + value.to_token());
  };
  const QVec class_m2 = eigenclass(QSqrt2(-2));
  const QVec class_m1 = eigenclass(QSqrt2(-1));

  // Induced metric on the quotient, through the complement representatives.
  const int q = 3;
  QMat gq(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      gq.at(i, j) = pair_with(m.gram, qa.complement[static_cast<size_t>(i)],
                              qa.complement[static_cast<size_t>(j)]);
  if (!inverse(gq)) fail_step("quotient metric", "induced form degenerate");

  auto lift = [&](const QVec& coords) {
    QVec v(n);
    for (int i = 0; i < q; ++i) v += coords[i] * qa.complement[static_cast<size_t>(i)];
    return v;
  };

  // f6: representative of the -1 eigenclass with |<f6,f4>| = 4.
  QVec f6_rep = lift(class_m1);
  QSqrt2 b6 = pair_with(m.gram, f6_rep, f4);
  if (b6.is_zero()) fail_step("f6", "eigenclass pairs trivially with the center");
  QSqrt2 mag = b6.sign() > 0 ? b6 : -b6;
  QVec f6 = orient(QSqrt2(4) * mag.inverse() * f6_rep, 5, opts.negate_f6);

  // f7: the isotropic complement of E_{-2} inside the orthogonal complement
  // of E_{-1} in the quotient.
  QMat perp_row(1, q);
  for (int j = 0; j < q; ++j) {
    QSqrt2 s(0);
    for (int i = 0; i < q; ++i) s += class_m1[i] * gq.at(i, j);
    perp_row.at(0, j) = s;
  }
  Subspace perp = kernel(perp_row);
  if (perp.dim() != 2) fail_step("f7", "orthogonal complement of E_{-1} is not a plane");
  if (!perp.contains(class_m2)) fail_step("f7", "E_{-2} not orthogonal to E_{-1}");
  Subspace p_line = Subspace::span(q, {class_m2});
  QVec q_class(q);
  bool found = false;
  for (const auto& b : perp.basis()) {
    if (!p_line.contains(b)) {
      q_class = b;
      found = true;
      break;
    }
  }
  if (!found) fail_step("f7", "no complement direction to E_{-2}");
  auto gq_pair = [&](const QVec& x, const QVec& y) {
    QSqrt2 s(0);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) {
        if (x[i].is_zero() || gq.at(i, j).is_zero()) continue;
        s += x[i] * gq.at(i, j) * y[j];
      }
    return s;
  };
  const QSqrt2 pp = gq_pair(class_m2, class_m2);
  const QSqrt2 pq = gq_pair(class_m2, q_class);
  const QSqrt2 qq = gq_pair(q_class, q_class);
  if (!pp.is_zero()) fail_step("f7", "E_{-2} class is not isotropic");
  if (pq.is_zero()) fail_step("f7", "isotropic complement is not unique");
  QVec f7_class = q_class + (-qq / (QSqrt2(2) * pq)) * class_m2;
  QVec f7_rep = lift(f7_class);

  QSqrt2 b7 = pair_with(m.gram, m.lie.bracket(f6, f7_rep), f6);
  if (b7.is_zero()) fail_step("f7", "normalization pairing vanishes");
  QVec f7 = (-kSqrt2 / b7) * f7_rep;

  return pair_with(m.gram, m.lie.bracket(f5, f7), f7);
}

// ---------------------------------------------------------------------------
// Symbolic tables
// ---------------------------------------------------------------------------

namespace {

MultiPoly var(const std::string& name) { return MultiPoly::variable(name); }

std::string idx_name(const char* stem, int i, int k) {
  return std::string(stem) + std::to_string(i) + std::to_string(k);
}

}  // namespace

Mat<MultiPoly> symbolic_lambda(BracketTableShape shape, int i) {
  Mat<MultiPoly> a(2, 2);
  std::array<MultiPoly, 2> u{MultiPoly(0), MultiPoly(0)};
  if (shape == BracketTableShape::HIII) {
    a.at(0, 0) = var(idx_name("a", i, 1));
    a.at(0, 1) = var(idx_name("a", i, 2));
    a.at(1, 0) = var(idx_name("a", i, 3));
    a.at(1, 1) = var(idx_name("a", i, 4));
  } else {
    a.at(0, 0) = var(idx_name("a", i, 1));
    a.at(1, 1) = var(idx_name("a", i, 4));
    u[1] = var(idx_name("u", i, 2));
  }
  MultiPoly v = var("v" + std::to_string(i));
  std::array<MultiPoly, 2> y{var(idx_name("y", i, 1)), var(idx_name("y", i, 2))};
  return h_matrix<MultiPoly>(a, v, u, y);
}

TableCheckResult verify_bracket_table(BracketTableShape shape) {
  TableCheckResult result;
  result.table = shape == BracketTableShape::HIII ? "commutators-hIII" : "commutators-rdiag10";
  const auto& table =
      shape == BracketTableShape::HIII ? bracket_table_hIII() : bracket_table_rdiag10();

  std::vector<Mat<MultiPoly>> lambda;
  for (int i = 1; i <= 7; ++i) lambda.push_back(symbolic_lambda(shape, i));

  for (int i = 1; i <= 7 && result.pass; ++i) {
    for (int j = i + 1; j <= 7 && result.pass; ++j) {
      Vec<MultiPoly> derived =
          lambda[static_cast<size_t>(i - 1)].column(j - 1) -
          lambda[static_cast<size_t>(j - 1)].column(i - 1);
      Vec<MultiPoly> expected = transcribed_bracket(table, i, j);
      ++result.entries_checked;
      if (derived != expected) {
        result.pass = false;
        std::ostringstream os;
        os << "[e" << i << ",e" << j << "] derived vs table mismatch";
        for (int k = 0; k < 7; ++k) {
          if (derived[k] != expected[k]) {
            os << "; e" << (k + 1) << ": " << derived[k].to_string() << " vs "
               << expected[k].to_string();
            break;
          }
        }
        result.first_mismatch = os.str();
      }
    }
  }
  return result;
}

Mat<MultiPoly> SymbolicCurvature::at(int i, int j) const {
  if (i == j) throw std::domain_error("SymbolicCurvature: R(x,x) slot");
  if (i < j) return r[static_cast<size_t>(CurvatureSpaceElement::slot(7, i, j))];
  return -r[static_cast<size_t>(CurvatureSpaceElement::slot(7, j, i))];
}

Mat<MultiPoly> SymbolicCurvature::of(const Vec<MultiPoly>& x, const Vec<MultiPoly>& y) const {
  Mat<MultiPoly> m(7, 7);
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      if (i == j) continue;
      if (x[i].is_zero() || y[j].is_zero()) continue;
      MultiPoly f = x[i] * y[j];
      Mat<MultiPoly> rij = at(i, j);
      for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
          if (rij.at(a, b).is_zero()) continue;
          m.at(a, b) += f * rij.at(a, b);
        }
    }
  }
  return m;
}

SymbolicCurvature symbolic_curvature_table() {
  SymbolicCurvature sc;
  sc.r.assign(21, Mat<MultiPoly>(7, 7));
  auto slot = [](int i, int j) {
    return static_cast<size_t>(CurvatureSpaceElement::slot(7, i - 1, j - 1));
  };
  struct Parts {
    Mat<MultiPoly> a = Mat<MultiPoly>(2, 2);
    MultiPoly v;
    std::array<MultiPoly, 2> y{MultiPoly(0), MultiPoly(0)};
  };
  std::map<std::pair<int, int>, Parts> parts;
  for (const auto& term : curvature_table_hIII()) {
    QSqrt2 coef = term.sqrt2 ? QSqrt2(Rational(0), Rational(term.num, term.den))
                             : QSqrt2(Rational(term.num, term.den));
    MultiPoly contribution = MultiPoly(coef) * var(term.param);
    Parts& p = parts[{term.i, term.j}];
    switch (term.comp) {
      case HComp::A11: p.a.at(0, 0) += contribution; break;
      case HComp::A12: p.a.at(0, 1) += contribution; break;
      case HComp::A21: p.a.at(1, 0) += contribution; break;
      case HComp::A22: p.a.at(1, 1) += contribution; break;
      case HComp::V: p.v += contribution; break;
      case HComp::Y1: p.y[0] += contribution; break;
      case HComp::Y2: p.y[1] += contribution; break;
    }
  }
  for (const auto& [pair, p] : parts) {
    sc.r[slot(pair.first, pair.second)] =
        h_matrix<MultiPoly>(p.a, p.v, {MultiPoly(0), MultiPoly(0)}, p.y);
  }
  // R37 = R15 - R26 closes the table.
  sc.r[slot(3, 7)] = sc.r[slot(1, 5)] - sc.r[slot(2, 6)];
  return sc;
}

TableCheckResult verify_table1() {
  TableCheckResult result;
  result.table = "curvature-hIII";
  auto fail = [&](const std::string& why) {
    result.pass = false;
    if (result.first_mismatch.empty()) result.first_mismatch = why;
  };

  KSpace k = curvature_space(family(FamilyName::HIII).basis, 7);
  ++result.entries_checked;
  if (k.dimension != 16)
    fail("kernel dimension " + std::to_string(k.dimension) + ", expected 16");

  for (const auto& elem : k.basis) {
    for (const auto& [i, j] : curvature_table_zero_pairs()) {
      ++result.entries_checked;
      if (!elem.at(i - 1, j - 1).is_zero()) {
        fail("R" + std::to_string(i) + std::to_string(j) + " not identically zero");
      }
    }
    ++result.entries_checked;
    if (elem.at(2, 6) != elem.at(0, 4) - elem.at(1, 5)) fail("R37 != R15 - R26");
    ++result.entries_checked;
    if (kSqrt2 * (-elem.at(5, 6)) != elem.at(3, 4)) fail("-R67 != (1/r2) R45");
  }

  // The sixteen transcribed parameter directions must span the kernel.
  SymbolicCurvature sym = symbolic_curvature_table();
  Subspace kernel_span(21 * 49);
  auto flatten_element = [](const std::vector<QMat>& rs) {
    QVec flat(21 * 49);
    for (int s = 0; s < 21; ++s) {
      QVec f = rs[static_cast<size_t>(s)].flatten();
      for (int t = 0; t < 49; ++t) flat[s * 49 + t] = f[t];
    }
    return flat;
  };
  for (const auto& elem : k.basis) kernel_span.insert(flatten_element(elem.r));

  int independent = 0;
  Subspace fixture_span(21 * 49);
  for (const char* param : curvature_table_params()) {
    std::map<std::string, QSqrt2> binding;
    for (const char* other : curvature_table_params()) binding[other] = QSqrt2(0);
    binding[param] = QSqrt2(1);
    auto eval_known = [&](const MultiPoly& p) {
      std::map<std::string, QSqrt2> known;
      for (const auto& name : p.variables()) known[name] = binding.at(name);
      return p.evaluate(known);
    };
    std::vector<QMat> rs;
    for (const auto& rpoly : sym.r) rs.push_back(rpoly.map<QSqrt2>(eval_known));
    QVec flat = flatten_element(rs);
    ++result.entries_checked;
    if (!kernel_span.contains(flat))
      fail(std::string("table direction '") + param + "' is not a formal curvature tensor");
    if (fixture_span.insert(flat)) ++independent;
  }
  ++result.entries_checked;
  if (independent != 16) fail("table directions are not independent");
  return result;
}

TableCheckResult verify_proof_identities() {
  TableCheckResult result;
  result.table = "proof-identities";
  auto fail = [&](const std::string& why) {
    result.pass = false;
    if (result.first_mismatch.empty()) result.first_mismatch = why;
  };
  auto check = [&](const MultiPoly& got, const MultiPoly& want, const std::string& what) {
    ++result.entries_checked;
    if (got != want) fail(what + ": " + got.to_string() + " vs " + want.to_string());
  };

  // Symbolic algebra with brackets derived from the type-III connection.
  std::vector<Mat<MultiPoly>> lambda;
  for (int i = 1; i <= 7; ++i) lambda.push_back(symbolic_lambda(BracketTableShape::HIII, i));
  LieAlgebra<MultiPoly> g(7);
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      g.set_bracket(i, j, lambda[static_cast<size_t>(i)].column(j) -
                              lambda[static_cast<size_t>(j)].column(i));

  auto e = [](int i) { return Vec<MultiPoly>::basis(7, i - 1); };
  const MultiPoly r2{kSqrt2};
  auto tr_a = [&](int i) { return var(idx_name("a", i, 1)) + var(idx_name("a", i, 4)); };

  // J_145 components as displayed.
  Vec<MultiPoly> j145 = g.jacobiator(e(1), e(4), e(5));
  check(j145[3], MultiPoly(2) * var("v1") * var("v1") - r2 * var("v4") * tr_a(1),
        "J_145^4 = 2 v1^2 - r2 v4 tr(A1)");
  check(j145[4], (tr_a(4) - r2 * var("v1")) * tr_a(1), "J_145^5 = (tr(A4) - r2 v1) tr(A1)");

  // Second Bianchi residuals against the sixteen-parameter curvature shape.
  SymbolicCurvature rc = symbolic_curvature_table();
  auto bianchi = [&](int i, int j, int k) {
    Mat<MultiPoly> b(7, 7);
    const int idx[3] = {i - 1, j - 1, k - 1};
    for (int t = 0; t < 3; ++t) {
      const int a = idx[t], p = idx[(t + 1) % 3], qq = idx[(t + 2) % 3];
      Vec<MultiPoly> unit_p(7), unit_q(7);
      unit_p[p] = MultiPoly(1);
      unit_q[qq] = MultiPoly(1);
      b += rc.of(lambda[static_cast<size_t>(a)].column(p), unit_q);
      b += rc.of(unit_p, lambda[static_cast<size_t>(a)].column(qq));
      b -= commutator(lambda[static_cast<size_t>(a)], rc.at(p, qq));
    }
    return b;
  };
  const MultiPoly tr56 = var("b1") + var("b4");
  const MultiPoly tr57 = var("b3") + var("c4");
  for (int r : {1, 4}) {
    Mat<MultiPoly> b56 = bianchi(r, 5, 6);
    Mat<MultiPoly> b57 = bianchi(r, 5, 7);
    MultiPoly tr_b56 = b56.at(1, 1) + b56.at(2, 2);
    MultiPoly tr_b57 = b57.at(1, 1) + b57.at(2, 2);
    const MultiPoly ar1 = var(idx_name("a", r, 1));
    const MultiPoly ar2 = var(idx_name("a", r, 2));
    const MultiPoly ar3 = var(idx_name("a", r, 3));
    const MultiPoly ar4 = var(idx_name("a", r, 4));
    check(tr_b56, (MultiPoly(-2) * ar1 - ar4) * tr56 - ar2 * tr57,
          "tr pro_A B_" + std::to_string(r) + "56");
    check(tr_b57, (-ar1 - MultiPoly(2) * ar4) * tr57 - ar3 * tr56,
          "tr pro_A B_" + std::to_string(r) + "57");

    // (A_r + tr(A_r) I)(tr A56, tr A57) = -(tr B_r56, tr B_r57).
    check((ar1 + tr_a(r)) * tr56 + ar2 * tr57, -tr_b56, "matrix form row 1, r=" + std::to_string(r));
    check(ar3 * tr56 + (ar4 + tr_a(r)) * tr57, -tr_b57, "matrix form row 2, r=" + std::to_string(r));

    // pro_y of B_r67 carries (A_r + 2 tr(A_r) I)(w1,w2) - v_r (tr A56, tr A57).
    Mat<MultiPoly> b67 = bianchi(r, 6, 7);
    MultiPoly y1 = b67.at(1, 4);
    MultiPoly y2 = b67.at(2, 4);
    const MultiPoly vr = var("v" + std::to_string(r));
    MultiPoly rhs1 = (ar1 + MultiPoly(2) * tr_a(r)) * var("w1") + ar2 * var("w2") - vr * tr56;
    MultiPoly rhs2 = ar3 * var("w1") + (ar4 + MultiPoly(2) * tr_a(r)) * var("w2") - vr * tr57;
    check(y1, rhs1, "pro_y B_" + std::to_string(r) + "67 (first)");
    check(y2, rhs2, "pro_y B_" + std::to_string(r) + "67 (second)");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Verification suites (one per acceptance criterion)
// ---------------------------------------------------------------------------

namespace {

SuiteResult suite_g2_model() {
  SuiteResult s{"g2-model", true, ""};
  auto fail = [&](const std::string& d) {
    s.pass = false;
    if (s.detail.empty()) s.detail = d;
  };
  std::vector<QMat> gens;
  for (int k = 1; k <= 14; ++k) gens.push_back(g2_generator(k));
  MatrixSpan span = matrix_span(7, gens);
  if (span.flat.dim() != 14) fail("generator span has wrong dimension");
  MatrixSpan closed = span_close(7, gens, [](const QMat& x, const QMat& y) {
    return commutator(x, y);
  });
  if (closed.flat.dim() != 14) fail("not closed under commutator");
  const QThreeForm w0 = standard_three_form();
  const QMat gram = standard_gram();
  for (const auto& x : gens) {
    if (!endo_action(x, w0).is_zero()) fail("a generator moves the 3-form");
    if (!(x.transpose() * gram + gram * x).is_zero()) fail("a generator is not metric-skew");
  }
  if (s.pass) s.detail = "dim 14, closed, stabilizes the 3-form and the metric";
  return s;
}

SuiteResult suite_curvature_table() {
  TableCheckResult t = verify_table1();
  return {"curvature-table", t.pass,
          t.pass ? "dim K(h^III) = 16, all rows and relations match" : t.first_mismatch};
}

SuiteResult suite_bracket_tables() {
  TableCheckResult a = verify_bracket_table(BracketTableShape::HIII);
  TableCheckResult b = verify_bracket_table(BracketTableShape::RDiag10);
  bool pass = a.pass && b.pass;
  std::string detail;
  if (pass)
    detail = "42 symbolic bracket entries match";
  else
    detail = !a.pass ? a.first_mismatch : b.first_mismatch;
  return {"bracket-tables", pass, detail};
}

SuiteResult suite_example_family() {
  SuiteResult s{"example-family", true, ""};
  auto fail = [&](const std::string& d) {
    s.pass = false;
    if (s.detail.empty()) s.detail = d;
  };
  const std::vector<QSqrt2> eps_values = {QSqrt2(0), QSqrt2(1), QSqrt2(-2),
                                          QSqrt2(Rational(7, 3))};
  for (const auto& eps : eps_values) {
    MetricLieAlgebra m = example_family(eps);
    try {
      m.validate();
    } catch (const std::exception& ex) {
      fail(ex.what());
      continue;
    }
    Connection c = levi_civita(m);
    Connection expected = example_family_connection(eps);
    for (int i = 0; i < 7; ++i) {
      if (c[i] != expected[i])
        fail("Lambda_" + std::to_string(i + 1) + " differs at eps = " + eps.to_token());
    }
    MatrixSpan hol = holonomy(m, c);
    const MatrixSpan& want = family(eps.is_zero() ? FamilyName::M101 : FamilyName::M102);
    if (!(hol.flat == want.flat))
      fail("holonomy mismatch at eps = " + eps.to_token());
  }
  if (s.pass) s.detail = "connection values and holonomies match for all four eps";
  return s;
}

SuiteResult suite_tfk_classification() {
  SuiteResult s{"tfk-classification", true, ""};
  auto fail = [&](const std::string& d) {
    s.pass = false;
    if (s.detail.empty()) s.detail = d;
  };
  const QMat gram = standard_gram();
  const Subspace socle_expected =
      Subspace::span(7, {QVec::basis(7, 0), QVec::basis(7, 1), QVec::basis(7, 2)});
  for (const auto& entry : tfk_list()) {
    Representation rep{entry.span.basis, gram};
    if (!rep.metric_skew()) fail(entry.name + ": not metric-skew");
    RepReport report = classify_type(rep);
    if (!(report.socle == socle_expected)) fail(entry.name + ": socle is not span{e1,e2,e3}");
    if (!report.socle_isotropic) fail(entry.name + ": socle not isotropic");
    if (report.type != RepType::TypeIII) fail(entry.name + ": type is not III");
    BergerResult berger = berger_test(entry.span.basis, 7);
    if (!berger.is_berger) fail(entry.name + ": fails the Berger criterion");
  }
  if (s.pass) s.detail = "all eight candidates: socle {e1,e2,e3}, isotropic, type III, Berger";
  return s;
}

SuiteResult suite_indecomposability() {
  SuiteResult s{"indecomposability", true, ""};
  auto fail = [&](const std::string& d) {
    s.pass = false;
    if (s.detail.empty()) s.detail = d;
  };
  const QMat gram = standard_gram();
  for (FamilyName name : {FamilyName::M101, FamilyName::M102}) {
    Representation rep{family(name).basis, gram};
    IndecompVerdict verdict = indecomposability(rep);
    if (verdict.kind != IndecompKind::Indecomposable)
      fail(family_display(name) + ": expected Indecomposable");
  }
  // The single-generator diag(1,0) span is decomposable, with a
  // nondegenerate witness.
  QMat diag10(2, 2);
  diag10.at(0, 0) = QSqrt2(1);
  Representation rep{{h_build3(diag10, QSqrt2(0), {QSqrt2(0), QSqrt2(0)})}, gram};
  IndecompVerdict verdict = indecomposability(rep);
  if (verdict.kind != IndecompKind::Decomposable) {
    fail("diag(1,0) span: expected Decomposable");
  } else {
    const Subspace& w = verdict.witness;
    if (w.dim() == 0 || w.dim() == 7) fail("diag(1,0) span: degenerate witness size");
    QMat restricted(w.dim(), w.dim());
    for (int i = 0; i < w.dim(); ++i)
      for (int j = 0; j < w.dim(); ++j)
        restricted.at(i, j) = pair_with(gram, w.basis()[static_cast<size_t>(i)],
                                        w.basis()[static_cast<size_t>(j)]);
    if (!inverse(restricted)) fail("diag(1,0) span: witness degenerate");
  }
  TableCheckResult identities = verify_proof_identities();
  if (!identities.pass) fail(identities.first_mismatch);
  if (s.pass)
    s.detail = "m(1,0,k) indecomposable, diag(1,0) decomposable, displayed identities hold";
  return s;
}

SuiteResult suite_deformation() {
  SuiteResult s{"deformation-family", true, ""};
  auto fail = [&](const std::string& d) {
    s.pass = false;
    if (s.detail.empty()) s.detail = d;
  };
  MetricLieAlgebra m = example_family(QSqrt2(1));
  const std::vector<QSqrt2> grid = {QSqrt2(-1), QSqrt2(0), QSqrt2(Rational(1, 2)), QSqrt2(1)};
  for (const auto& a : grid)
    for (const auto& b : grid)
      for (const auto& c : grid) {
        DeformationReport report = check_deformation_parallel(m, a, b, c);
        std::string at = "(a,b,c) = (" + a.to_token() + "," + b.to_token() + "," + c.to_token() + ")";
        if (!report.m_cubed_zero) fail("M^3 != 0 at " + at);
        if (!report.gram_orthogonal) fail("A not orthogonal at " + at);
        if (!report.parallel) fail("deformed form not parallel at " + at);
        for (int l = 0; l < 7; ++l) {
          if (l == 5) continue;
          if (!report.d[static_cast<size_t>(l)].is_zero())
            fail("D_" + std::to_string(l + 1) + " != 0 at " + at);
        }
        // Displayed D_6 columns.
        LMat expected(7, 7);
        expected.at(1, 4) = LaurentExp::monomial(QSqrt2(2) * b, -2);
        expected.at(2, 4) = LaurentExp::monomial(QSqrt2(2) * c, 3);
        expected.at(0, 5) = LaurentExp::monomial(QSqrt2(-2) * b, -2);
        expected.at(0, 6) = LaurentExp::monomial(QSqrt2(-2) * c, 3);
        if (report.d[5] != expected) fail("D_6 differs from the displayed value at " + at);
      }
  if (s.pass) s.detail = "all 64 grid points: orthogonal, nilpotent, parallel, D_6 as displayed";
  return s;
}

SuiteResult suite_isometry_invariant() {
  SuiteResult s{"isometry-invariant", true, ""};
  auto fail = [&](const std::string& d) {
    s.pass = false;
    if (s.detail.empty()) s.detail = d;
  };
  const std::vector<QSqrt2> eps_values = {QSqrt2(0), QSqrt2(1), QSqrt2(5),
                                          QSqrt2(Rational(-3, 2))};
  for (const auto& eps : eps_values) {
    MetricLieAlgebra m = example_family(eps);
    for (bool f4 : {false, true})
      for (bool f6 : {false, true}) {
        QSqrt2 value;
        try {
          value = epsilon_invariant(m, {f4, f6});
        } catch (const std::exception& ex) {
          fail(ex.what());
          continue;
        }
        if (value != -eps)
          fail("invariant at eps = " + eps.to_token() + " gave " + value.to_token());
      }
  }
  if (s.pass) s.detail = "<[f5,f7],f7> = -eps for all samples and both sign conventions";
  return s;
}

SuiteResult suite_parallel_frame() {
  SuiteResult s{"parallel-frame", true, ""};
  auto fail = [&](const std::string& d) {
    s.pass = false;
    if (s.detail.empty()) s.detail = d;
  };
  const std::vector<QSqrt2> eps_values = {QSqrt2(0), QSqrt2(1), QSqrt2(-2),
                                          QSqrt2(Rational(7, 3))};
  for (const auto& eps : eps_values) {
    MetricLieAlgebra m = example_family(eps);
    Connection c = levi_civita(m);
    const int exponents[3] = {1, -2, 3};
    for (int which = 0; which < 3; ++which) {
      LVec field(7);
      field[which] = LaurentExp::e_power(exponents[which]);
      for (int l = 0; l < 7; ++l) {
        if (!covariant_derivative_t(c, field, l).is_zero())
          fail("field " + std::to_string(which + 1) + " not parallel along e" +
               std::to_string(l + 1) + " at eps = " + eps.to_token());
      }
      if (!(field[which].at_t_zero() == QSqrt2(1)))
        fail("field does not restrict to the frame at t = 0");
    }
  }
  if (s.pass) s.detail = "E e1, E^-2 e2, E^3 e3 are parallel in all seven directions";
  return s;
}

}  // namespace

std::vector<SuiteResult> verify_paper_suites() {
  std::vector<SuiteResult (*)()> runners = {
      suite_g2_model,       suite_curvature_table,    suite_bracket_tables,
      suite_example_family, suite_tfk_classification, suite_indecomposability,
      suite_deformation,    suite_isometry_invariant, suite_parallel_frame,
  };
  std::vector<SuiteResult> results;
  for (auto runner : runners) {
    auto start = std::chrono::steady_clock::now();
    SuiteResult result = runner();
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace g2holo
