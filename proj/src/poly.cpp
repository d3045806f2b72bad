#include "liekit/poly.hpp"

#include <cmath>

namespace liekit {

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw InputError("Poly::variable: index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  Poly p(nvars);
  p.add_term(m, 1);
  return p;
}

Poly Poly::monomial(const Monomial& exponents, const Rational& c) {
  Poly p(exponents.size());
  p.add_term(exponents, c);
  return p;
}

unsigned Poly::degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) {
    unsigned s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw InputError("Poly: monomial has wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Poly::check_same(const Poly& o) const {
  if (o.nvars_ != nvars_) throw InputError("Poly: variable count mismatch");
}

Poly Poly::derivative(std::size_t i) const {
  if (i >= nvars_) throw InputError("Poly::derivative: index out of range");
  Poly d(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    --dm[i];
    d.add_term(dm, c * m[i]);
  }
  return d;
}

double Poly::evaluate(const std::vector<double>& x) const {
  if (x.size() != nvars_) throw InputError("Poly::evaluate: point has wrong dimension");
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = to_double(c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < m[i]; ++e) term *= x[i];
    }
    acc += term;
  }
  return acc;
}

Rational Poly::evaluate(const RatVector& x) const {
  if (x.size() != nvars_) throw InputError("Poly::evaluate: point has wrong dimension");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned e = 0; e < m[i]; ++e) term *= x[i];
    }
    acc += term;
  }
  return acc;
}

Poly Poly::compose(const Poly& u, const Poly& f) {
  if (u.nvars() != 1) throw InputError("Poly::compose: outer polynomial must be univariate");
  Poly out(f.nvars());
  Poly power = constant(f.nvars(), 1);
  unsigned current = 0;
  for (const auto& [m, c] : u.terms()) {  // ascending exponent order
    while (current < m[0]) {
      power = power * f;
      ++current;
    }
    out += c * power;
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator-(const Poly& a) { return Rational(-1) * a; }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly p(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(a.nvars_);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      p.add_term(m, ca * cb);
    }
  return p;
}

Poly operator*(const Rational& s, const Poly& a) {
  Poly p(a.nvars_);
  if (sgn(s) == 0) return p;
  for (const auto& [m, c] : a.terms_) p.terms_.emplace(m, s * c);
  return p;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + "*" + mono;
  }
  return out;
}

}  // namespace liekit
