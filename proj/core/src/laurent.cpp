#include "g2holo/laurent.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace g2holo {

LaurentExp::LaurentExp(QSqrt2 c) {
  if (!c.is_zero()) c_.emplace(0, std::move(c));
}

LaurentExp LaurentExp::monomial(QSqrt2 c, int k) {
  LaurentExp x;
  if (!c.is_zero()) x.c_.emplace(k, std::move(c));
  return x;
}

bool LaurentExp::is_constant() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

QSqrt2 LaurentExp::coefficient(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? QSqrt2(0) : it->second;
}

QSqrt2 LaurentExp::at_t_zero() const {
  QSqrt2 s(0);
  for (const auto& [k, c] : c_) s += c;
  return s;
}

LaurentExp LaurentExp::ddt() const {
  LaurentExp r;
  for (const auto& [k, c] : c_) {
    if (k != 0) r.c_.emplace(k, c * QSqrt2(Rational(k, 2)));
  }
  return r;
}

void LaurentExp::add_term(int k, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

LaurentExp LaurentExp::operator-() const {
  LaurentExp r = *this;
  for (auto& [k, c] : r.c_) c = -c;
  return r;
}

LaurentExp& LaurentExp::operator+=(const LaurentExp& o) {
  for (const auto& [k, c] : o.c_) add_term(k, c);
  return *this;
}

LaurentExp& LaurentExp::operator-=(const LaurentExp& o) {
  for (const auto& [k, c] : o.c_) add_term(k, -c);
  return *this;
}

LaurentExp& LaurentExp::operator*=(const LaurentExp& o) {
  std::map<int, QSqrt2> result;
  for (const auto& [k1, c1] : c_) {
    for (const auto& [k2, c2] : o.c_) {
      QSqrt2 c = c1 * c2;
      auto [it, inserted] = result.emplace(k1 + k2, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) result.erase(it);
      }
    }
  }
  c_ = std::move(result);
  return *this;
}

std::string LaurentExp::to_token() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : c_) {
    if (!first) s += " + ";
    first = false;
    if (k == 0) {
      s += c.to_token();
    } else {
      std::string coef = c.to_token();
      if (coef.find(' ') != std::string::npos) coef = "(" + coef + ")";
      s += coef + "*E^" + std::to_string(k);
    }
  }
  return s;
}

std::string to_token(const LaurentExp& x) { return x.to_token(); }

LaurentExp parse_laurent(std::string_view s) {
  // Terms are separated by " + " at parenthesis depth zero; signs inside
  // coefficients are handled by parse_qsqrt2.
  LaurentExp r;
  const std::string str(s);
  std::vector<std::string> terms;
  size_t start = 0;
  int depth = 0;
  for (size_t i = 0; i < str.size(); ++i) {
    if (str[i] == '(') ++depth;
    if (str[i] == ')') --depth;
    if (depth == 0 && str.compare(i, 3, " + ") == 0) {
      terms.push_back(str.substr(start, i - start));
      i += 2;
      start = i + 1;
    }
  }
  terms.push_back(str.substr(start));
  for (std::string term : terms) {
    size_t ecaret = term.rfind("E^");
    if (ecaret == std::string::npos) {
      r += LaurentExp(parse_qsqrt2(term));
      continue;
    }
    int k = std::stoi(term.substr(ecaret + 2));
    std::string coef = term.substr(0, ecaret);
    while (!coef.empty() && (coef.back() == '*' || coef.back() == ' ')) coef.pop_back();
    if (!coef.empty() && coef.front() == '(' && coef.back() == ')')
      coef = coef.substr(1, coef.size() - 2);
    r += LaurentExp::monomial(coef.empty() ? QSqrt2(1) : parse_qsqrt2(coef), k);
  }
  return r;
}

LaurentExp div_int(const LaurentExp& x, long long n) {
  if (n == 0) throw std::domain_error("LaurentExp: division by zero");
  return x * LaurentExp(QSqrt2(Rational(1, n)));
}

std::ostream& operator<<(std::ostream& os, const LaurentExp& x) { return os << x.to_token(); }

}  // namespace g2holo
