#pragma once

#include "g2holo/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace g2holo {

/// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
/// The coordinate pair (a, b) is a canonical form: two values are equal
/// iff both coordinates are equal.
class QSqrt2 {
 public:
  QSqrt2() = default;
  QSqrt2(int n) : a_(n) {}  // NOLINT: implicit by design, constants appear everywhere
  QSqrt2(long long n) : a_(n) {}
  QSqrt2(Rational a) : a_(std::move(a)) {}
  QSqrt2(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt2 sqrt2() { return QSqrt2(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt2_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

  QSqrt2& operator+=(const QSqrt2& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QSqrt2& operator-=(const QSqrt2& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  QSqrt2& operator*=(const QSqrt2& o);
  QSqrt2& operator/=(const QSqrt2& o);

  friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
  friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
  friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
  friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }

  friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QSqrt2& x, const QSqrt2& y) { return !(x == y); }

  /// Multiplicative inverse. Throws std::domain_error on zero.
  QSqrt2 inverse() const;

  /// Exact sign (-1, 0, +1) of the real number a + b*sqrt(2), decided by
  /// comparing a^2 with 2 b^2; no radical is ever approximated.
  int sign() const;

  /// Total order induced by the real embedding.
  friend bool operator<(const QSqrt2& x, const QSqrt2& y) { return (x - y).sign() < 0; }

  std::string to_token() const;

 private:
  Rational a_;
  Rational b_;
};

inline bool is_zero(const QSqrt2& x) { return x.is_zero(); }
inline QSqrt2 div_int(const QSqrt2& x, long long n) { return x / QSqrt2(n); }

std::string to_token(const QSqrt2& x);

/// Parses the grammar "p/q", "r/s*r2", "p/q + r/s*r2", "p/q - r/s*r2"
/// (whitespace optional, bare "r2" accepted for a unit sqrt-2 coefficient).
QSqrt2 parse_qsqrt2(std::string_view s);

std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

}  // namespace g2holo
