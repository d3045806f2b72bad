#include "liekit/deformation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "liekit/catalog.hpp"
#include "liekit/sampling.hpp"

namespace liekit {

double TransitionProfile::operator()(double t) const {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  return std::exp(-std::exp(-1.0 / t) / (1.0 - t));
}

double profile_eval(const TransitionProfile& sigma, double t) { return sigma(t); }

std::vector<std::vector<int>> cocycle_exponents(std::size_t n) {
  std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) e[i][j] = static_cast<int>(j - i);
  return e;
}

bool cocycle_check(const std::vector<std::vector<int>>& e) {
  const std::size_t n = e.size();
  auto at = [&](std::size_t i, std::size_t j) { return i == j ? 0 : e[i][j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = j; k < n; ++k) {
        if (at(i, j) + at(j, k) != at(i, k)) return false;
      }
  return true;
}

bool cocycle_check(std::size_t n) {
  if (n < 2) throw InputError("cocycle_check: n must be at least 2");
  return cocycle_check(cocycle_exponents(n));
}

AlgebraDeformation::AlgebraDeformation(std::string label, LieAlgebra parent, std::vector<DeformationStage> stages)
    : label_(std::move(label)), parent_(std::move(parent)), stages_(std::move(stages)) {
  for (const auto& s : stages_) {
    if (s.exponents.size() != parent_.dim()) throw InputError("deformation stage has wrong exponent count");
    if (sgn(s.scale) <= 0) throw InputError("deformation stage must run forward in time");
  }
}

std::vector<double> AlgebraDeformation::factors(double t) const {
  const TransitionProfile sigma;
  std::vector<double> f(parent_.dim(), 1.0);
  for (const auto& s : stages_) {
    const double tau = to_double(s.scale) * t + to_double(s.shift);
    const double v = sigma(tau);
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (s.exponents[k] != 0) f[k] *= std::pow(v, static_cast<double>(s.exponents[k]));
    }
  }
  return f;
}

std::vector<double> AlgebraDeformation::apply(double t, const std::vector<double>& x) const {
  auto f = factors(t);
  for (std::size_t k = 0; k < f.size(); ++k) f[k] *= x.at(k);
  return f;
}

bool AlgebraDeformation::killed_at_one(std::size_t k) const {
  for (const auto& s : stages_) {
    if (s.exponents.at(k) > 0 && s.scale + s.shift >= 1) return true;
  }
  return false;
}

std::vector<Rational> AlgebraDeformation::breakpoints() const {
  std::vector<Rational> b;
  for (const auto& s : stages_) {
    b.push_back(-s.shift / s.scale);
    b.push_back((1 - s.shift) / s.scale);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

namespace {

std::vector<unsigned> exponents_for(const MatrixBasis& basis, unsigned diagonal, bool offdiag_by_distance) {
  std::vector<unsigned> e;
  for (const auto& name : basis.names) {
    if (name[0] == 'H') {
      e.push_back(diagonal);
    } else {
      // names are T<i><j> with single-digit indices for n <= 9
      const unsigned i = static_cast<unsigned>(name[1] - '0');
      const unsigned j = static_cast<unsigned>(name[2] - '0');
      e.push_back(offdiag_by_distance ? j - i : 0);
    }
  }
  return e;
}

void require_size(std::size_t n) {
  if (n < 2) throw InputError("deformation: n must be at least 2");
  if (n > 9) throw InputError("deformation: n must be at most 9");
}

}  // namespace

AlgebraDeformation st_deformation(std::size_t n) {
  require_size(n);
  return AlgebraDeformation("st" + std::to_string(n), st(n), {{1, 0, exponents_for(st_basis(n), 0, true)}});
}

AlgebraDeformation st_prime_deformation(std::size_t n) {
  require_size(n);
  return AlgebraDeformation("st_prime" + std::to_string(n), st_prime(n),
                            {{1, 0, exponents_for(strict_upper_basis(n), 0, true)}});
}

AlgebraDeformation diag_contraction(std::size_t n) {
  require_size(n);
  return AlgebraDeformation("diag" + std::to_string(n), diagonal(n),
                            {{1, 0, std::vector<unsigned>(n - 1, 1)}});
}

AlgebraDeformation identity_deformation(const LieAlgebra& g) {
  return AlgebraDeformation("identity", g, {});
}

AlgebraDeformation concatenate(const AlgebraDeformation& psi, const AlgebraDeformation& theta,
                               const std::vector<std::size_t>& embedding) {
  const LieAlgebra& g = theta.parent();
  const std::size_t n = g.dim();
  if (embedding.size() != psi.parent().dim()) throw InputError("concatenate: embedding size mismatch");
  std::vector<bool> in_sub(n, false);
  for (auto idx : embedding) {
    if (idx >= n || in_sub[idx]) throw InputError("concatenate: invalid embedding");
    in_sub[idx] = true;
  }
  // The embedded basis must span a subalgebra with psi's structure constants.
  for (std::size_t a = 0; a < embedding.size(); ++a)
    for (std::size_t b = a + 1; b < embedding.size(); ++b) {
      const RatVector r = g.basis_bracket(embedding[a], embedding[b]);
      const RatVector expect = psi.parent().basis_bracket(a, b);
      RatVector lifted(n);
      for (std::size_t c = 0; c < expect.size(); ++c) lifted[embedding[c]] = expect[c];
      if (r != lifted) throw InputError("concatenate: psi's algebra is not the embedded subalgebra");
    }
  // theta_1 must land in the subalgebra; theta_t preserves it since it is diagonal.
  for (std::size_t k = 0; k < n; ++k) {
    if (!in_sub[k] && !theta.killed_at_one(k)) {
      throw InputError("concatenate: theta is not a retraction into psi's algebra (basis element " +
                       g.basis_names()[k] + " survives theta_1)");
    }
  }
  std::vector<DeformationStage> stages;
  for (const auto& s : theta.stages()) stages.push_back({2 * s.scale, s.shift, s.exponents});
  for (const auto& s : psi.stages()) {
    DeformationStage lifted{2 * s.scale, s.shift - s.scale, std::vector<unsigned>(n, 0)};
    for (std::size_t a = 0; a < embedding.size(); ++a) lifted.exponents[embedding[a]] = s.exponents[a];
    stages.push_back(std::move(lifted));
  }
  return AlgebraDeformation(psi.label() + "#" + theta.label(), g, std::move(stages));
}

AlgebraDeformation concatenate(const AlgebraDeformation& psi, const AlgebraDeformation& theta) {
  std::vector<std::size_t> embedding;
  const auto& names = theta.parent().basis_names();
  for (const auto& name : psi.parent().basis_names()) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InputError("concatenate: basis element " + name + " not found in theta's algebra");
    embedding.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  return concatenate(psi, theta, embedding);
}

namespace {

// Symbolic value of a factor on an open interval (or at a point): zero, or a
// product of sigma(stage time)^exponent keyed by the stage's time map.
struct SymbolicFactor {
  bool zero = false;
  std::map<std::pair<Rational, Rational>, unsigned> powers;

  void absorb(const SymbolicFactor& o) {
    zero = zero || o.zero;
    for (const auto& [key, e] : o.powers) powers[key] += e;
  }
  friend bool operator==(const SymbolicFactor& a, const SymbolicFactor& b) {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.powers == b.powers;
  }
};

SymbolicFactor symbolic_factor(const AlgebraDeformation& d, std::size_t k, const Rational& t) {
  SymbolicFactor f;
  for (const auto& s : d.stages()) {
    const unsigned e = s.exponents[k];
    if (e == 0) continue;
    const Rational tau = s.scale * t + s.shift;
    if (tau >= 1) f.zero = true;
    else if (tau > 0) f.powers[{s.scale, s.shift}] += e;
  }
  return f;
}

}  // namespace

std::optional<EndomorphismFailure> exact_endomorphism_check(const AlgebraDeformation& d) {
  const auto bps = d.breakpoints();
  std::vector<Rational> probes;
  if (bps.empty()) {
    probes.push_back(0);
  } else {
    probes.push_back(bps.front() - 1);
    for (std::size_t i = 0; i < bps.size(); ++i) {
      probes.push_back(bps[i]);
      if (i + 1 < bps.size()) probes.push_back((bps[i] + bps[i + 1]) / 2);
    }
    probes.push_back(bps.back() + 1);
  }
  const LieAlgebra& g = d.parent();
  const auto table = g.upper_table();
  for (const auto& t : probes) {
    std::vector<SymbolicFactor> f;
    for (std::size_t k = 0; k < g.dim(); ++k) f.push_back(symbolic_factor(d, k, t));
    for (const auto& [key, r] : table) {
      SymbolicFactor lhs = f[key.first];
      lhs.absorb(f[key.second]);
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (sgn(r[k]) == 0) continue;
        if (!(lhs == f[k])) return EndomorphismFailure{key.first, key.second, k, t};
      }
    }
  }
  return std::nullopt;
}

std::optional<AlgebraDeformation> find_graded_contraction(const LieAlgebra& g, unsigned search_bound) {
  const std::size_t n = g.dim();
  if (n == 0) return std::nullopt;
  std::vector<RatVector> rows;
  for (const auto& [key, r] : g.upper_table())
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(r[k]) == 0) continue;
      RatVector row(n);
      row[key.first] += 1;
      row[key.second] += 1;
      row[k] -= 1;
      rows.push_back(std::move(row));
    }
  const Subspace gradings = rows.empty() ? Subspace::full(n) : nullspace(RatMatrix::from_rows(rows, n));
  const std::size_t m = gradings.dim();
  if (m == 0) return std::nullopt;
  const int b = static_cast<int>(search_bound);
  std::size_t combos = 1;
  for (std::size_t i = 0; i < m && combos <= 2000000; ++i) combos *= static_cast<std::size_t>(2 * b + 1);
  if (combos > 2000000) combos = 2000000;
  const auto basis = gradings.basis_vectors();
  std::vector<std::vector<double>> approx(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < n; ++k) approx[i][k] = to_double(basis[i][k]);
  std::vector<int> coefs(m);
  std::vector<double> w(n);
  for (std::size_t c = 0; c < combos; ++c) {
    std::size_t code = c;
    for (std::size_t i = 0; i < m; ++i) {
      coefs[i] = static_cast<int>(code % static_cast<std::size_t>(2 * b + 1)) - b;
      code /= static_cast<std::size_t>(2 * b + 1);
    }
    std::fill(w.begin(), w.end(), 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < n && coefs[i] != 0; ++k) w[k] += coefs[i] * approx[i][k];
    if (!std::all_of(w.begin(), w.end(), [](double x) { return x > 1e-9; })) continue;
    RatVector v(n);
    for (std::size_t i = 0; i < m; ++i) {
      if (coefs[i] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] += coefs[i] * basis[i][k];
    }
    if (!std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) > 0; })) continue;
    mpz_class scale = 1;
    for (const auto& x : v) scale = lcm(scale, x.get_den());
    std::vector<unsigned> e;
    for (const auto& x : v) {
      const mpz_class z = x.get_num() * (scale / x.get_den());
      if (!z.fits_uint_p()) return std::nullopt;
      e.push_back(static_cast<unsigned>(z.get_ui()));
    }
    const unsigned common = std::accumulate(e.begin(), e.end(), 0u, [](unsigned a, unsigned x) { return std::gcd(a, x); });
    for (auto& x : e) x /= common;
    return AlgebraDeformation("graded_" + g.name(), g, {{1, 0, std::move(e)}});
  }
  return std::nullopt;
}

std::vector<double> bracket_numeric(const LieAlgebra& g, const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = g.dim();
  std::vector<double> out(n, 0.0);
  for (const auto& [key, r] : g.upper_table()) {
    const double w = x[key.first] * y[key.second] - x[key.second] * y[key.first];
    if (w == 0.0) continue;
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(r[k]) != 0) out[k] += w * to_double(r[k]);
    }
  }
  return out;
}

bool DeformationReport::passed() const {
  return d1_residual == 0.0 && d2_residual == 0.0 && endomorphism_exact &&
         endomorphism_residual <= endomorphism_tolerance && smoothness_residual <= smoothness_tolerance;
}

DeformationReport verify_deformation(const AlgebraDeformation& d, std::size_t samples, std::uint64_t seed) {
  DeformationReport rep;
  rep.label = d.label();
  rep.samples = samples;
  rep.seed = seed;
  const std::size_t n = d.parent().dim();

  for (double t : {-1.0, 0.0}) {
    for (double f : d.factors(t)) rep.d1_residual = std::max(rep.d1_residual, std::abs(f - 1.0));
  }
  const auto f1 = d.factors(1.0), f2 = d.factors(2.0);
  for (std::size_t k = 0; k < n; ++k) {
    rep.d2_residual = std::max(rep.d2_residual, std::abs(f1[k] - f2[k]));
    rep.contraction_residual = std::max(rep.contraction_residual, std::abs(f1[k]));
  }
  rep.is_contraction = true;
  for (std::size_t k = 0; k < n; ++k) rep.is_contraction = rep.is_contraction && d.killed_at_one(k);

  rep.endomorphism_exact = !exact_endomorphism_check(d).has_value();

  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(seed, i);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    std::vector<double> x(n), y(n);
    for (std::size_t k = 0; k < n; ++k) {
      x[k] = to_double(Rational(num(rng), den(rng)));
      y[k] = to_double(Rational(num(rng), den(rng)));
    }
    const double t = 0.1 * static_cast<double>(1 + i % 9);
    const auto lhs = d.apply(t, bracket_numeric(d.parent(), x, y));
    const auto rhs = bracket_numeric(d.parent(), d.apply(t, x), d.apply(t, y));
    for (std::size_t k = 0; k < n; ++k) {
      rep.endomorphism_residual = std::max(rep.endomorphism_residual, std::abs(lhs[k] - rhs[k]));
    }
  }

  // Flatness: forward/backward differences of orders 1..3 in stage-local time, scaled by h^order.
  constexpr double h = 1e-3;
  double max_scale = 1.0;
  for (const auto& st : d.stages()) max_scale = std::max(max_scale, std::abs(to_double(st.scale)));
  for (const auto& bp : d.breakpoints()) {
    const double b = to_double(bp);
    for (double dir : {-1.0, 1.0}) {
      std::vector<std::vector<double>> vals;
      for (int s = 0; s <= 3; ++s) vals.push_back(d.factors(b + dir * s * h / max_scale));
      for (std::size_t k = 0; k < n; ++k) {
        const double d1 = (vals[1][k] - vals[0][k]) / h;
        const double d2 = (vals[2][k] - 2 * vals[1][k] + vals[0][k]) / (h * h);
        const double d3 = (vals[3][k] - 3 * vals[2][k] + 3 * vals[1][k] - vals[0][k]) / (h * h * h);
        rep.smoothness_residual = std::max({rep.smoothness_residual, std::abs(d1), std::abs(d2), std::abs(d3)});
      }
    }
  }
  return rep;
}

}  // namespace liekit
