#pragma once

#include "g2holo/matrix.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace g2holo {

/// Alternating 3-form on a 7-dimensional space, stored densely on the 35
/// ordered triples i < j < k (0-based indices).
template <class R>
class ThreeForm {
 public:
  static constexpr int kDim = 7;
  static constexpr int kSlots = 35;

  ThreeForm() = default;

  static int slot(int i, int j, int k) {
    // Position of (i,j,k), 0 <= i < j < k < 7, in lexicographic order.
    int s = 0;
    for (int a = 0; a < kDim; ++a)
      for (int b = a + 1; b < kDim; ++b)
        for (int c = b + 1; c < kDim; ++c) {
          if (a == i && b == j && c == k) return s;
          ++s;
        }
    throw std::domain_error("ThreeForm: indices not strictly increasing");
  }

  R& coeff(int i, int j, int k) { return c_[static_cast<size_t>(slot(i, j, k))]; }
  const R& coeff(int i, int j, int k) const { return c_[static_cast<size_t>(slot(i, j, k))]; }

  /// Value on basis vectors in any order, with the alternating sign.
  R on_basis(int i, int j, int k) const {
    if (i == j || j == k || i == k) return R(0);
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    const R& c = coeff(i, j, k);
    return sign > 0 ? c : -c;
  }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!scalar_is_zero(c)) return false;
    return true;
  }

  ThreeForm operator-() const {
    ThreeForm r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  ThreeForm& operator+=(const ThreeForm& o) {
    for (size_t s = 0; s < kSlots; ++s) c_[s] += o.c_[s];
    return *this;
  }
  ThreeForm& operator-=(const ThreeForm& o) {
    for (size_t s = 0; s < kSlots; ++s) c_[s] -= o.c_[s];
    return *this;
  }
  ThreeForm& operator*=(const R& x) {
    for (auto& c : c_) c = c * x;
    return *this;
  }
  friend ThreeForm operator+(ThreeForm a, const ThreeForm& b) { return a += b; }
  friend ThreeForm operator-(ThreeForm a, const ThreeForm& b) { return a -= b; }
  friend ThreeForm operator*(const R& x, ThreeForm a) { return a *= x; }
  friend bool operator==(const ThreeForm& a, const ThreeForm& b) { return a.c_ == b.c_; }
  friend bool operator!=(const ThreeForm& a, const ThreeForm& b) { return !(a == b); }

  /// Trilinear alternating evaluation.
  R eval(const Vec<R>& x, const Vec<R>& y, const Vec<R>& z) const {
    if (x.size() != kDim || y.size() != kDim || z.size() != kDim)
      throw std::domain_error("ThreeForm: dimension mismatch");
    R total(0);
    int s = 0;
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        for (int k = j + 1; k < kDim; ++k, ++s) {
          const R& c = c_[static_cast<size_t>(s)];
          if (scalar_is_zero(c)) continue;
          // 3x3 determinant of the (i,j,k) components of (x,y,z).
          R det = x[i] * (y[j] * z[k] - y[k] * z[j]) - y[i] * (x[j] * z[k] - x[k] * z[j]) +
                  z[i] * (x[j] * y[k] - x[k] * y[j]);
          total += c * det;
        }
    return total;
  }

  template <class R2, class Fn>
  ThreeForm<R2> map(Fn&& fn) const {
    ThreeForm<R2> r;
    int s = 0;
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j)
        for (int k = j + 1; k < kDim; ++k, ++s) r.coeff(i, j, k) = fn(c_[static_cast<size_t>(s)]);
    return r;
  }

 private:
  std::array<R, kSlots> c_{};
};

/// Infinitesimal action (X . w)(x,y,z) = -w(Xx,y,z) - w(x,Xy,z) - w(x,y,Xz);
/// vanishes exactly on the stabilizer algebra of w.
template <class R>
ThreeForm<R> endo_action(const Mat<R>& x, const ThreeForm<R>& w) {
  if (x.rows() != ThreeForm<R>::kDim || x.cols() != ThreeForm<R>::kDim)
    throw std::domain_error("endo_action: matrix must be 7x7");
  ThreeForm<R> r;
  for (int i = 0; i < ThreeForm<R>::kDim; ++i)
    for (int j = i + 1; j < ThreeForm<R>::kDim; ++j)
      for (int k = j + 1; k < ThreeForm<R>::kDim; ++k) {
        R v(0);
        for (int m = 0; m < ThreeForm<R>::kDim; ++m) {
          if (!scalar_is_zero(x.at(m, i))) v += x.at(m, i) * w.on_basis(m, j, k);
          if (!scalar_is_zero(x.at(m, j))) v += x.at(m, j) * w.on_basis(i, m, k);
          if (!scalar_is_zero(x.at(m, k))) v += x.at(m, k) * w.on_basis(i, j, m);
        }
        r.coeff(i, j, k) = -v;
      }
  return r;
}

/// Pullback (P^* w)(x,y,z) = w(Px, Py, Pz).
template <class R>
ThreeForm<R> pullback(const Mat<R>& p, const ThreeForm<R>& w) {
  if (p.rows() != ThreeForm<R>::kDim || p.cols() != ThreeForm<R>::kDim)
    throw std::domain_error("pullback: matrix must be 7x7");
  ThreeForm<R> r;
  std::array<Vec<R>, ThreeForm<R>::kDim> cols;
  for (int j = 0; j < ThreeForm<R>::kDim; ++j) cols[static_cast<size_t>(j)] = p.column(j);
  for (int i = 0; i < ThreeForm<R>::kDim; ++i)
    for (int j = i + 1; j < ThreeForm<R>::kDim; ++j)
      for (int k = j + 1; k < ThreeForm<R>::kDim; ++k)
        r.coeff(i, j, k) = w.eval(cols[static_cast<size_t>(i)], cols[static_cast<size_t>(j)],
                                  cols[static_cast<size_t>(k)]);
  return r;
}

}  // namespace g2holo
