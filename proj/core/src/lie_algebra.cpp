#include "g2holo/lie_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace g2holo {

Subspace center(const QLieAlgebra& g) {
  const int n = g.dim();
  // x is central iff ad(e_j)^T rows annihilate it for every j; stack the
  // maps x -> [x, e_j] into one (n*n) x n system.
  QMat m(n * n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      const QVec& cij = g.bracket_basis(i, j);
      for (int k = 0; k < n; ++k) m.at(j * n + k, i) = cij[k];
    }
  }
  return kernel(m);
}

Subspace bracket_span(const QLieAlgebra& g, const Subspace& u, const Subspace& v) {
  Subspace s(g.dim());
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) s.insert(g.bracket(x, y));
  return s;
}

std::vector<Subspace> derived_series(const QLieAlgebra& g) {
  std::vector<Subspace> series{Subspace::full(g.dim())};
  while (true) {
    const Subspace& prev = series.back();
    Subspace next = bracket_span(g, prev, prev);
    if (next == prev) break;
    series.push_back(next);
    if (next.is_zero()) break;
  }
  return series;
}

Subspace subalgebra_generated(const QLieAlgebra& g, const std::vector<QVec>& seeds) {
  Subspace s(g.dim());
  std::vector<QVec> frontier;
  for (const auto& v : seeds) {
    if (s.insert(v)) frontier.push_back(v);
  }
  int passes = 0;
  while (!frontier.empty()) {
    if (++passes > g.dim() + 1)
      throw std::logic_error("subalgebra_generated: closure failed to stabilize");
    std::vector<QVec> next;
    std::vector<QVec> basis_snapshot = s.basis();
    for (const auto& x : frontier) {
      for (const auto& y : basis_snapshot) {
        QVec b = g.bracket(x, y);
        if (s.insert(b)) next.push_back(std::move(b));
      }
    }
    frontier = std::move(next);
  }
  return s;
}

QuotientAction quotient_module(const QLieAlgebra& g, const Subspace& sub, const Subspace& inside,
                               const QVec& actor) {
  if (!inside.contains(sub)) throw std::domain_error("quotient_module: sub not inside");
  auto check_invariant = [&](const Subspace& space, const char* name) {
    for (const auto& v : space.basis()) {
      QVec image = g.bracket(actor, v);
      if (!space.contains(image)) {
        std::string witness;
        for (int i = 0; i < v.size(); ++i) {
          if (v[i].is_zero()) continue;
          if (!witness.empty()) witness += " + ";
          witness += "(" + v[i].to_token() + ")e" + std::to_string(i + 1);
        }
        throw std::domain_error(std::string("quotient_module: ") + name +
                                " not invariant under the actor, witness " + witness);
      }
    }
  };
  check_invariant(sub, "sub");
  check_invariant(inside, "inside");

  // Complement basis: rows of `inside` whose pivot is not a pivot of `sub`.
  // Pivot sets nest for nested RREF spans, so this is a genuine complement.
  QuotientAction qa{QMat(0, 0), {}};
  const auto& sub_pivots = sub.pivots();
  for (size_t k = 0; k < inside.basis().size(); ++k) {
    int p = inside.pivots()[k];
    if (!std::count(sub_pivots.begin(), sub_pivots.end(), p))
      qa.complement.push_back(inside.basis()[k]);
  }
  const int q = static_cast<int>(qa.complement.size());
  qa.action = QMat(q, q);
  if (q == 0) return qa;

  // Express [actor, w] in the basis (sub basis | complement) and read off the
  // complement coordinates.
  const int n = g.dim();
  const int rows = n;
  const int cols = sub.dim() + q;
  QMat basis_matrix(rows, cols);
  for (int c = 0; c < sub.dim(); ++c)
    for (int r = 0; r < n; ++r) basis_matrix.at(r, c) = sub.basis()[static_cast<size_t>(c)][r];
  for (int c = 0; c < q; ++c)
    for (int r = 0; r < n; ++r)
      basis_matrix.at(r, sub.dim() + c) = qa.complement[static_cast<size_t>(c)][r];

  for (int col = 0; col < q; ++col) {
    QVec image = g.bracket(actor, qa.complement[static_cast<size_t>(col)]);
    auto coords = solve(basis_matrix, image);
    if (!coords) throw std::logic_error("quotient_module: image escaped the span");
    for (int r = 0; r < q; ++r) qa.action.at(r, col) = (*coords)[sub.dim() + r];
  }
  return qa;
}

}  // namespace g2holo
