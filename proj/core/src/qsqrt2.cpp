#include "g2holo/qsqrt2.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace g2holo {

std::string to_token(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += "/";
    s += denominator(x).str();
  }
  return s;
}

Rational parse_rational(std::string_view s) {
  size_t slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::runtime_error("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::runtime_error("malformed rational token: '" + std::string(s) + "'");
  }
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QSqrt2 QSqrt2::inverse() const {
  if (is_zero()) throw std::domain_error("QSqrt2: inverse of zero");
  // (a + b r2)(a - b r2) = a^2 - 2 b^2, nonzero for (a,b) != (0,0).
  Rational n = a_ * a_ - 2 * b_ * b_;
  return QSqrt2(a_ / n, -b_ / n);
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

int QSqrt2::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: a + b r2 has the sign of the dominant term,
  // decided by a^2 vs 2 b^2 (equality cannot happen, r2 is irrational).
  Rational d = a_ * a_ - 2 * b_ * b_;
  return sa * d.sign();
}

std::string QSqrt2::to_token() const {
  if (b_.is_zero()) return g2holo::to_token(a_);
  std::string sq = g2holo::to_token(b_ < 0 ? Rational(-b_) : b_) + "*r2";
  if (a_.is_zero()) return (b_ < 0 ? "-" : "") + sq;
  return g2holo::to_token(a_) + (b_ < 0 ? " - " : " + ") + sq;
}

std::string to_token(const QSqrt2& x) { return x.to_token(); }

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses one signed term: either a rational or "coef*r2" / "r2".
void parse_term(std::string_view term, bool negate, Rational& a, Rational& b) {
  term = trim(term);
  if (term.empty()) throw std::runtime_error("malformed scalar token: empty term");
  bool sqrt2 = false;
  Rational coef;
  size_t star = term.find('*');
  if (term == "r2") {
    sqrt2 = true;
    coef = 1;
  } else if (star != std::string_view::npos) {
    if (trim(term.substr(star + 1)) != "r2")
      throw std::runtime_error("malformed scalar token: '" + std::string(term) + "'");
    sqrt2 = true;
    coef = parse_rational(trim(term.substr(0, star)));
  } else if (term.size() > 2 && term.substr(term.size() - 2) == "r2") {
    // "-r2" or "3r2" style without '*'
    std::string_view head = trim(term.substr(0, term.size() - 2));
    sqrt2 = true;
    coef = (head == "-") ? Rational(-1) : (head.empty() ? Rational(1) : parse_rational(head));
  } else {
    coef = parse_rational(term);
  }
  if (negate) coef = -coef;
  (sqrt2 ? b : a) += coef;
}

}  // namespace

QSqrt2 parse_qsqrt2(std::string_view s) {
  s = trim(s);
  if (s.empty()) throw std::runtime_error("malformed scalar token: empty");
  Rational a, b;
  size_t start = 0;
  bool negate = false;
  if (s[0] == '+' || s[0] == '-') {
    negate = (s[0] == '-');
    start = 1;
  }
  size_t i = start;
  for (; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && i > start && s[i - 1] != '/' && s[i - 1] != '*') {
      parse_term(s.substr(start, i - start), negate, a, b);
      negate = (s[i] == '-');
      start = i + 1;
    }
  }
  parse_term(s.substr(start), negate, a, b);
  return QSqrt2(std::move(a), std::move(b));
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.to_token(); }

}  // namespace g2holo
