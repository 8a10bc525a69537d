#pragma once

#include "g2holo/qsqrt2.hpp"

#include <map>
#include <string>

namespace g2holo {

/// Laurent polynomial in the formal variable E = e^{t/2} over Q(sqrt 2).
///
/// This ring carries every t-dependent quantity of the R x N model:
/// e^{t/2} = E, e^{-t} = E^-2, e^{3t/2} = E^3. Differentiation in t acts as
/// E^k -> (k/2) E^k.
class LaurentExp {
 public:
  LaurentExp() = default;
  LaurentExp(int n) : LaurentExp(QSqrt2(n)) {}  // NOLINT: implicit constants
  LaurentExp(QSqrt2 c);

  /// c * E^k
  static LaurentExp monomial(QSqrt2 c, int k);
  static LaurentExp e_power(int k) { return monomial(QSqrt2(1), k); }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  const std::map<int, QSqrt2>& coefficients() const { return c_; }
  QSqrt2 coefficient(int k) const;

  /// Value at t = 0, i.e. E = 1.
  QSqrt2 at_t_zero() const;

  /// d/dt, acting as E^k -> (k/2) E^k.
  LaurentExp ddt() const;

  LaurentExp operator-() const;
  LaurentExp& operator+=(const LaurentExp& o);
  LaurentExp& operator-=(const LaurentExp& o);
  LaurentExp& operator*=(const LaurentExp& o);

  friend LaurentExp operator+(LaurentExp x, const LaurentExp& y) { return x += y; }
  friend LaurentExp operator-(LaurentExp x, const LaurentExp& y) { return x -= y; }
  friend LaurentExp operator*(LaurentExp x, const LaurentExp& y) { return x *= y; }

  friend bool operator==(const LaurentExp& x, const LaurentExp& y) { return x.c_ == y.c_; }
  friend bool operator!=(const LaurentExp& x, const LaurentExp& y) { return !(x == y); }

  std::string to_token() const;

 private:
  void add_term(int k, const QSqrt2& c);

  std::map<int, QSqrt2> c_;
};

inline bool is_zero(const LaurentExp& x) { return x.is_zero(); }
LaurentExp div_int(const LaurentExp& x, long long n);

std::string to_token(const LaurentExp& x);

/// Inverse of to_token: sums of "c*E^k" terms, plain scalars allowed.
LaurentExp parse_laurent(std::string_view s);

std::ostream& operator<<(std::ostream& os, const LaurentExp& x);

}  // namespace g2holo
