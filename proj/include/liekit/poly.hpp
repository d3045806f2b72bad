#pragma once

#include <map>
#include <string>
#include <vector>

#include "liekit/rational.hpp"

namespace liekit {

using Monomial = std::vector<unsigned>;

/// Multivariate polynomial with rational coefficients. Terms are kept in
/// lexicographic exponent order with no zero coefficients.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(const Monomial& exponents, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  Poly derivative(std::size_t i) const;
  double evaluate(const std::vector<double>& x) const;
  Rational evaluate(const RatVector& x) const;

  /// u(f) for a univariate u.
  static Poly compose(const Poly& u, const Poly& f);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Human-readable form such as "2*x1^2 - 1/3*x2".
  std::string to_string() const;

 private:
  void check_same(const Poly& o) const;

  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace liekit
