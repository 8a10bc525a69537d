#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace g2holo {

/// ADL hook so the container templates can test scalars from any of the
/// supported rings for zero.
template <class R>
inline bool scalar_is_zero(const R& x) {
  return is_zero(x);
}

/// Dense column vector over an exact scalar ring.
template <class R>
class Vec {
 public:
  Vec() = default;
  explicit Vec(int n) : e_(static_cast<size_t>(n)) {}
  Vec(std::initializer_list<R> init) : e_(init) {}

  static Vec basis(int n, int i) {
    Vec v(n);
    v[i] = R(1);
    return v;
  }

  int size() const { return static_cast<int>(e_.size()); }
  R& operator[](int i) { return e_[static_cast<size_t>(i)]; }
  const R& operator[](int i) const { return e_[static_cast<size_t>(i)]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!scalar_is_zero(x)) return false;
    return true;
  }

  Vec operator-() const {
    Vec r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  Vec& operator+=(const Vec& o) {
    assert(size() == o.size());
    for (int i = 0; i < size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    assert(size() == o.size());
    for (int i = 0; i < size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  Vec& operator*=(const R& c) {
    for (auto& x : e_) x = x * c;
    return *this;
  }
  friend Vec operator+(Vec x, const Vec& y) { return x += y; }
  friend Vec operator-(Vec x, const Vec& y) { return x -= y; }
  friend Vec operator*(const R& c, Vec x) { return x *= c; }
  friend bool operator==(const Vec& x, const Vec& y) { return x.e_ == y.e_; }
  friend bool operator!=(const Vec& x, const Vec& y) { return !(x == y); }

 private:
  std::vector<R> e_;
};

/// Dense rectangular matrix over an exact scalar ring, row-major.
template <class R>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  R& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const R& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!scalar_is_zero(x)) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  Vec<R> column(int j) const {
    Vec<R> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }
  Vec<R> row(int i) const {
    Vec<R> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
  }

  /// Row-major flattening, for matrices viewed as vectors of length rows*cols.
  Vec<R> flatten() const {
    Vec<R> v(rows_ * cols_);
    for (int k = 0; k < rows_ * cols_; ++k) v[k] = a_[static_cast<size_t>(k)];
    return v;
  }
  static Mat unflatten(const Vec<R>& v, int rows, int cols) {
    Mat m(rows, cols);
    for (int k = 0; k < rows * cols; ++k) m.a_[static_cast<size_t>(k)] = v[k];
    return m;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }
  Mat& operator+=(const Mat& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Mat& operator*=(const R& c) {
    for (auto& x : a_) x = x * c;
    return *this;
  }
  friend Mat operator+(Mat x, const Mat& y) { return x += y; }
  friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
  friend Mat operator*(const R& c, Mat x) { return x *= c; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.cols_ == y.rows_);
    Mat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i) {
      for (int k = 0; k < x.cols_; ++k) {
        const R& xik = x.at(i, k);
        if (scalar_is_zero(xik)) continue;
        for (int j = 0; j < y.cols_; ++j) {
          if (scalar_is_zero(y.at(k, j))) continue;
          r.at(i, j) += xik * y.at(k, j);
        }
      }
    }
    return r;
  }

  friend Vec<R> operator*(const Mat& m, const Vec<R>& v) {
    assert(m.cols_ == v.size());
    Vec<R> r(m.rows_);
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < m.cols_; ++j) {
        if (scalar_is_zero(m.at(i, j))) continue;
        r[i] += m.at(i, j) * v[j];
      }
    return r;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  R trace() const {
    assert(is_square());
    R t{};
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  template <class R2, class Fn>
  Mat<R2> map(Fn&& fn) const {
    Mat<R2> m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m.at(i, j) = fn(at(i, j));
    return m;
  }

 private:
  int rows_, cols_;
  std::vector<R> a_;
};

template <class R>
Mat<R> commutator(const Mat<R>& x, const Mat<R>& y) {
  return x * y - y * x;
}

/// Exponential of a nilpotent matrix as the exact finite series.
/// Throws std::domain_error if the argument is not nilpotent of index <= n.
template <class R>
Mat<R> exp_nilpotent(const Mat<R>& m) {
  assert(m.is_square());
  const int n = m.rows();
  Mat<R> result = Mat<R>::identity(n);
  Mat<R> power = m;
  long long factorial = 1;
  for (int k = 1; k <= n; ++k) {
    if (power.is_zero()) return result;
    factorial *= k;
    result += power.template map<R>([&](const R& x) { return div_int(x, factorial); });
    power = power * m;
  }
  if (!power.is_zero()) throw std::domain_error("exp_nilpotent: matrix is not nilpotent");
  return result;
}

}  // namespace g2holo
