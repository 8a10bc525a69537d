#pragma once

#include "g2holo/qsqrt2.hpp"

#include <map>
#include <set>
#include <string>

namespace g2holo {

/// Monomial: variable name -> positive exponent.
using Monomial = std::map<std::string, int>;

/// Multivariate polynomial over Q(sqrt 2) with named variables.
///
/// The variable set is explicit and sticky: it survives arithmetic even when
/// terms cancel, so that a substitution can be validated against the names a
/// polynomial was built from. Zero coefficients are never stored. Term order
/// is lexicographic over the variable names, which fixes printing and
/// comparison.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(int n) : MultiPoly(QSqrt2(n)) {}  // NOLINT: implicit constants
  MultiPoly(QSqrt2 c);

  static MultiPoly variable(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; the whole value when is_constant().
  QSqrt2 constant_value() const;

  const std::set<std::string>& variables() const { return vars_; }
  const std::map<Monomial, QSqrt2>& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);

  friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
  friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
  friend MultiPoly operator*(MultiPoly x, const MultiPoly& y) { return x *= y; }

  friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const MultiPoly& x, const MultiPoly& y) { return !(x == y); }

  /// Substitutes values for a subset of the variables. Binding a name this
  /// polynomial does not know is reported as a domain error; unbound
  /// variables stay symbolic.
  MultiPoly substitute(const std::map<std::string, QSqrt2>& binding) const;

  /// Full evaluation; requires the binding to cover every variable that
  /// still occurs.
  QSqrt2 evaluate(const std::map<std::string, QSqrt2>& binding) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const QSqrt2& c);

  std::map<Monomial, QSqrt2> terms_;
  std::set<std::string> vars_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
MultiPoly div_int(const MultiPoly& p, long long n);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace g2holo
