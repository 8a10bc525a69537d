#include "g2holo/linalg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace g2holo {

RrefResult rref(QMat m) {
  const int rows = m.rows(), cols = m.cols();
  RrefResult r;
  int lead = 0;
  for (int col = 0; col < cols && lead < rows; ++col) {
    int pivot = -1;
    for (int i = lead; i < rows; ++i) {
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != lead) {
      for (int j = col; j < cols; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    }
    QSqrt2 inv = m.at(lead, col).inverse();
    for (int j = col; j < cols; ++j) m.at(lead, j) = m.at(lead, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == lead) continue;
      const QSqrt2 f = m.at(i, col);
      if (f.is_zero()) continue;
      for (int j = col; j < cols; ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    r.pivots.push_back(col);
    ++lead;
  }
  r.rank = lead;
  r.mat = std::move(m);
  return r;
}

Subspace Subspace::full(int ambient) {
  Subspace s(ambient);
  for (int i = 0; i < ambient; ++i) {
    s.basis_.push_back(QVec::basis(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<QVec>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

QVec Subspace::reduce(QVec v) const {
  for (size_t k = 0; k < basis_.size(); ++k) {
    const QSqrt2& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    const QSqrt2 f = c;  // pivot entries are 1
    for (int j = 0; j < ambient_; ++j) {
      if (!basis_[k][j].is_zero()) v[j] -= f * basis_[k][j];
    }
  }
  return v;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

bool Subspace::insert(QVec v) {
  v = reduce(std::move(v));
  int pivot = -1;
  for (int j = 0; j < ambient_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) return false;
  QSqrt2 inv = v[pivot].inverse();
  for (int j = pivot; j < ambient_; ++j) v[j] = v[j] * inv;
  // Back-eliminate the new pivot column from existing rows.
  for (size_t k = 0; k < basis_.size(); ++k) {
    const QSqrt2 f = basis_[k][pivot];
    if (f.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) basis_[k][j] -= f * v[j];
  }
  auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  basis_.insert(basis_.begin() + static_cast<long>(idx), std::move(v));
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.basis_) s.insert(v);
  return s;
}

Subspace Subspace::perp(const QMat& gram) const {
  if (basis_.empty()) return Subspace::full(ambient_);
  QMat m(dim(), ambient_);
  for (int i = 0; i < dim(); ++i) {
    QVec gb = gram.transpose() * basis_[static_cast<size_t>(i)];
    for (int j = 0; j < ambient_; ++j) m.at(i, j) = gb[j];
  }
  return kernel(m);
}

Subspace kernel(const QMat& m) {
  const int cols = m.cols();
  RrefResult r = rref(m);
  std::set<int> pivot_cols(r.pivots.begin(), r.pivots.end());
  Subspace s(cols);
  for (int j = 0; j < cols; ++j) {
    if (pivot_cols.count(j)) continue;
    QVec v(cols);
    v[j] = QSqrt2(1);
    for (int k = 0; k < r.rank; ++k) v[r.pivots[static_cast<size_t>(k)]] = -r.mat.at(k, j);
    s.insert(std::move(v));
  }
  return s;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
  const int rows = m.rows(), cols = m.cols();
  QMat aug(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, cols) = b[i];
  }
  RrefResult r = rref(std::move(aug));
  QVec x(cols);
  for (int k = 0; k < r.rank; ++k) {
    if (r.pivots[static_cast<size_t>(k)] == cols) return std::nullopt;  // 0 = 1 row
    x[r.pivots[static_cast<size_t>(k)]] = r.mat.at(k, cols);
  }
  return x;
}

QSqrt2 determinant(QMat m) {
  if (!m.is_square()) throw std::domain_error("determinant: matrix not square");
  const int n = m.rows();
  QSqrt2 det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i) {
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return QSqrt2(0);
    if (pivot != col) {
      for (int j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    QSqrt2 inv = m.at(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      QSqrt2 f = m.at(i, col) * inv;
      if (f.is_zero()) continue;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return det;
}

std::optional<QMat> inverse(const QMat& m) {
  if (!m.is_square()) throw std::domain_error("inverse: matrix not square");
  const int n = m.rows();
  QMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = QSqrt2(1);
  }
  RrefResult r = rref(std::move(aug));
  if (r.rank < n || r.pivots[static_cast<size_t>(n - 1)] != n - 1) return std::nullopt;
  QMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

std::tuple<int, int, int> gram_signature(QMat g) {
  if (!g.is_square()) throw std::domain_error("gram_signature: matrix not square");
  const int n = g.rows();
  int pos = 0, neg = 0, zero = 0;
  for (int k = 0; k < n; ++k) {
    if (g.at(k, k).is_zero()) {
      int l = -1;
      for (int i = k + 1; i < n; ++i) {
        if (!g.at(i, i).is_zero()) {
          l = i;
          break;
        }
      }
      if (l >= 0) {
        // Congruence swap of rows/cols k and l.
        for (int j = 0; j < n; ++j) std::swap(g.at(k, j), g.at(l, j));
        for (int i = 0; i < n; ++i) std::swap(g.at(i, k), g.at(i, l));
      } else {
        int p = -1;
        for (int j = k + 1; j < n; ++j) {
          if (!g.at(k, j).is_zero()) {
            p = j;
            break;
          }
        }
        if (p < 0) {
          ++zero;
          continue;
        }
        // Hyperbolic entry: add row/col p into row/col k, making g(k,k) = 2 g(k,p).
        for (int j = 0; j < n; ++j) g.at(k, j) += g.at(p, j);
        for (int i = 0; i < n; ++i) g.at(i, k) += g.at(i, p);
      }
    }
    const QSqrt2 d = g.at(k, k);
    if (d.sign() > 0)
      ++pos;
    else
      ++neg;
    const QSqrt2 inv = d.inverse();
    for (int i = k + 1; i < n; ++i) {
      const QSqrt2 f = g.at(i, k) * inv;
      if (f.is_zero()) continue;
      for (int j = k; j < n; ++j) g.at(i, j) -= f * g.at(k, j);
      for (int j = k; j < n; ++j) g.at(j, i) -= f * g.at(j, k);
    }
  }
  return {pos, neg, zero};
}

MatrixSpan matrix_span(int n, const std::vector<QMat>& matrices) {
  MatrixSpan s{Subspace(n * n), {}};
  for (const auto& m : matrices) s.flat.insert(m.flatten());
  for (const auto& row : s.flat.basis()) s.basis.push_back(QMat::unflatten(row, n, n));
  return s;
}

MatrixSpan span_close(int n, const std::vector<QMat>& generators,
                      const std::function<QMat(const QMat&, const QMat&)>& product) {
  MatrixSpan s = matrix_span(n, generators);
  std::vector<QMat> frontier = s.basis;
  const int max_passes = n * n + 1;
  int pass = 0;
  while (!frontier.empty()) {
    if (++pass > max_passes)
      throw std::logic_error("span_close: failed to stabilize within the dimension bound");
    std::vector<QMat> next;
    for (const auto& b : frontier) {
      for (const auto& g : generators) {
        for (const QMat& p : {product(b, g), product(g, b)}) {
          if (s.flat.insert(p.flatten())) next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  s.basis.clear();
  for (const auto& row : s.flat.basis()) s.basis.push_back(QMat::unflatten(row, n, n));
  return s;
}

UniPoly characteristic_polynomial(const QMat& m) {
  if (!m.is_square()) throw std::domain_error("characteristic_polynomial: matrix not square");
  const int n = m.rows();
  // Faddeev-LeVerrier: exact over a field of characteristic zero.
  std::vector<QSqrt2> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = QSqrt2(1);
  QMat mk = m;
  for (int k = 1; k <= n; ++k) {
    QSqrt2 ck = div_int(-mk.trace(), k);
    c[static_cast<size_t>(n - k)] = ck;
    if (k < n) {
      QMat adj = mk;
      for (int i = 0; i < n; ++i) adj.at(i, i) += ck;
      mk = m * adj;
    }
  }
  return c;
}

QSqrt2 eval_poly(const UniPoly& p, const QSqrt2& x) {
  QSqrt2 r(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

std::optional<Rational> sqrt_rational(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (x.is_zero()) return Rational(0);
  BigInt num = numerator(x), den = denominator(x);
  BigInt ns = boost::multiprecision::sqrt(num);
  BigInt ds = boost::multiprecision::sqrt(den);
  if (ns * ns != num || ds * ds != den) return std::nullopt;
  return Rational(ns, ds);
}

UniPoly deflate(const UniPoly& p, const QSqrt2& root) {
  // Synthetic division by (lambda - root); remainder is known to vanish.
  const size_t deg = p.size() - 1;
  UniPoly q(deg);
  QSqrt2 carry(0);
  for (size_t k = deg; k >= 1; --k) {
    carry = p[k] + root * carry;
    q[k - 1] = carry;
  }
  return q;
}

std::vector<BigInt> positive_divisors(BigInt x) {
  if (x < 0) x = -x;
  std::vector<BigInt> divs;
  if (x == 0) return divs;
  const BigInt scan_limit = 1000000;
  for (BigInt d = 1; d * d <= x && d <= scan_limit; ++d) {
    if (x % d == 0) {
      divs.push_back(d);
      divs.push_back(x / d);
    }
    if (divs.size() > 4096) break;  // candidate search bail-out, stays exact
  }
  return divs;
}

// All rational roots of p (coefficients in Q(sqrt 2)), via integer
// root candidates on the rational polynomial p * conj(p).
std::vector<Rational> rational_roots(const UniPoly& p) {
  UniPoly conj;
  for (const auto& c : p) conj.emplace_back(c.rational_part(), -c.sqrt2_part());
  // norm(lambda) = p * conj has rational coefficients.
  std::vector<Rational> norm(p.size() * 2 - 1);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < conj.size(); ++j) {
      QSqrt2 prod = p[i] * conj[j];
      norm[i + j] += prod.rational_part();
    }
  while (!norm.empty() && norm.back().is_zero()) norm.pop_back();
  if (norm.size() <= 1) return {};
  BigInt scale = 1;
  for (const auto& c : norm) scale = lcm(scale, denominator(c));
  std::vector<BigInt> ic;
  for (const auto& c : norm) ic.push_back(numerator(Rational(c * scale)));
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;  // zero roots handled by caller
  std::vector<Rational> roots;
  for (const BigInt& dn : positive_divisors(ic[low])) {
    for (const BigInt& dd : positive_divisors(ic.back())) {
      for (int s : {1, -1}) {
        Rational cand(s * dn, dd);
        if (eval_poly(p, QSqrt2(cand)).is_zero()) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
    }
  }
  return roots;
}

}  // namespace

std::optional<QSqrt2> sqrt_in_qsqrt2(const QSqrt2& x) {
  if (x.sign() < 0) return std::nullopt;
  if (x.is_zero()) return QSqrt2(0);
  const Rational& a = x.rational_part();
  const Rational& b = x.sqrt2_part();
  if (b.is_zero()) {
    // sqrt(a): rational, or of the form y*sqrt2 when a/2 is a square.
    if (auto r = sqrt_rational(a)) return QSqrt2(*r);
    if (auto r = sqrt_rational(a / 2)) return QSqrt2(Rational(0), *r);
    return std::nullopt;
  }
  // (u + v r2)^2 = u^2 + 2 v^2 + 2 u v r2: solve u^4 - a u^2 + b^2/2 = 0.
  Rational disc = a * a - 2 * b * b;
  auto sd = sqrt_rational(disc);
  if (!sd) return std::nullopt;
  for (const Rational& u2 : {Rational((a + *sd) / 2), Rational((a - *sd) / 2)}) {
    auto u = sqrt_rational(u2);
    if (!u || u->is_zero()) continue;
    Rational v = b / (2 * *u);
    QSqrt2 cand(*u, v);
    if (cand * cand == x) return cand.sign() >= 0 ? cand : -cand;
  }
  return std::nullopt;
}

EigenResult eigenlines(const QMat& m) {
  const int n = m.rows();
  UniPoly p = characteristic_polynomial(m);
  std::vector<QSqrt2> values;

  // Zero roots first.
  while (p.size() > 1 && p.front().is_zero()) {
    if (values.empty() || values.back() != QSqrt2(0)) values.push_back(QSqrt2(0));
    p = deflate(p, QSqrt2(0));
    // keep deflating; multiplicity does not add new lines
  }
  bool progress = true;
  while (progress && p.size() > 1) {
    progress = false;
    for (const Rational& r : rational_roots(p)) {
      QSqrt2 root(r);
      while (p.size() > 1 && eval_poly(p, root).is_zero()) {
        p = deflate(p, root);
        progress = true;
      }
      if (std::find(values.begin(), values.end(), root) == values.end())
        values.push_back(root);
    }
    if (p.size() == 2) {
      values.push_back(-p[0] / p[1]);
      p = {QSqrt2(1)};
      progress = true;
    } else if (p.size() == 3) {
      // Quadratic formula; roots exist in Q(sqrt 2) iff the discriminant is
      // a square there.
      QSqrt2 a = p[2], b = p[1], c = p[0];
      QSqrt2 disc = b * b - QSqrt2(4) * a * c;
      if (auto sq = sqrt_in_qsqrt2(disc)) {
        QSqrt2 twoa = QSqrt2(2) * a;
        for (const QSqrt2& root : {(-b + *sq) / twoa, (-b - *sq) / twoa}) {
          if (std::find(values.begin(), values.end(), root) == values.end())
            values.push_back(root);
        }
        p = {QSqrt2(1)};
        progress = true;
      }
    }
  }

  EigenResult result;
  result.unresolved = p;
  std::sort(values.begin(), values.end(),
            [](const QSqrt2& x, const QSqrt2& y) { return x < y; });
  for (const auto& v : values) {
    QMat shifted = m;
    for (int i = 0; i < n; ++i) shifted.at(i, i) -= v;
    result.lines.push_back({v, kernel(shifted)});
  }
  return result;
}

}  // namespace g2holo
