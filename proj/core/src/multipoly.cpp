#include "g2holo/multipoly.hpp"

#include <ostream>
#include <stdexcept>

namespace g2holo {

MultiPoly::MultiPoly(QSqrt2 c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

MultiPoly MultiPoly::variable(const std::string& name) {
  MultiPoly p;
  p.terms_.emplace(Monomial{{name, 1}}, QSqrt2(1));
  p.vars_.insert(name);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

QSqrt2 MultiPoly::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? QSqrt2(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const QSqrt2& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  vars_.insert(o.vars_.begin(), o.vars_.end());
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  vars_.insert(o.vars_.begin(), o.vars_.end());
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  std::map<Monomial, QSqrt2> result;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1;
      for (const auto& [v, e] : m2) m[v] += e;
      QSqrt2 c = c1 * c2;
      auto [it, inserted] = result.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) result.erase(it);
      }
    }
  }
  terms_ = std::move(result);
  vars_.insert(o.vars_.begin(), o.vars_.end());
  return *this;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, QSqrt2>& binding) const {
  for (const auto& [name, value] : binding) {
    (void)value;
    if (!vars_.count(name))
      throw std::domain_error("MultiPoly: unknown variable '" + name + "'");
  }
  MultiPoly r;
  r.vars_ = vars_;
  for (const auto& [name, value] : binding) {
    (void)value;
    r.vars_.erase(name);
  }
  for (const auto& [m, c] : terms_) {
    QSqrt2 coef = c;
    Monomial rest;
    for (const auto& [v, e] : m) {
      auto it = binding.find(v);
      if (it == binding.end()) {
        rest[v] = e;
      } else {
        for (int k = 0; k < e; ++k) coef *= it->second;
      }
    }
    r.add_term(rest, coef);
  }
  return r;
}

QSqrt2 MultiPoly::evaluate(const std::map<std::string, QSqrt2>& binding) const {
  MultiPoly r = substitute(binding);
  if (!r.is_constant())
    throw std::domain_error("MultiPoly: evaluation left free variables: " + r.to_string());
  return r.constant_value();
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) s += " + ";
    first = false;
    std::string mono;
    for (const auto& [v, e] : m) {
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += c.to_token();
    } else if (c == QSqrt2(1)) {
      s += mono;
    } else {
      s += "(" + c.to_token() + ")*" + mono;
    }
  }
  return s;
}

MultiPoly div_int(const MultiPoly& p, long long n) {
  if (n == 0) throw std::domain_error("MultiPoly: division by zero");
  return p * MultiPoly(QSqrt2(Rational(1, n)));
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace g2holo
