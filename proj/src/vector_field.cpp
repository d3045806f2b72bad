#include "liekit/vector_field.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>

#include "liekit/catalog.hpp"

namespace liekit {

PolyVectorField::PolyVectorField(std::vector<Poly> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.nvars() != components_.size()) throw InputError("vector field: component count must equal variable count");
  }
}

PolyVectorField PolyVectorField::zero(std::size_t n) { return PolyVectorField(std::vector<Poly>(n, Poly(n))); }

bool PolyVectorField::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::vector<double> PolyVectorField::evaluate(const std::vector<double>& x) const {
  std::vector<double> out;
  out.reserve(dim());
  for (const auto& c : components_) out.push_back(c.evaluate(x));
  return out;
}

PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.dim() != b.dim()) throw InputError("vector field sum: dimension mismatch");
  std::vector<Poly> c;
  for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] + b[i]);
  return PolyVectorField(std::move(c));
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
  if (a.dim() != b.dim()) throw InputError("vector field difference: dimension mismatch");
  std::vector<Poly> c;
  for (std::size_t i = 0; i < a.dim(); ++i) c.push_back(a[i] - b[i]);
  return PolyVectorField(std::move(c));
}

PolyVectorField operator*(const Rational& s, const PolyVectorField& a) {
  std::vector<Poly> c;
  for (const auto& p : a.components_) c.push_back(s * p);
  return PolyVectorField(std::move(c));
}

PolyVectorField operator*(const Poly& u, const PolyVectorField& a) {
  std::vector<Poly> c;
  for (const auto& p : a.components_) c.push_back(u * p);
  return PolyVectorField(std::move(c));
}

Poly directional_derivative(const PolyVectorField& v, const Poly& f) {
  if (f.nvars() != v.dim()) throw InputError("directional_derivative: dimension mismatch");
  Poly out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out += v[i] * f.derivative(i);
  return out;
}

PolyVectorField vf_bracket(const PolyVectorField& v, const PolyVectorField& w) {
  if (v.dim() != w.dim()) throw InputError("vf_bracket: dimension mismatch");
  std::vector<Poly> c;
  for (std::size_t i = 0; i < v.dim(); ++i) c.push_back(directional_derivative(v, w[i]) - directional_derivative(w, v[i]));
  return PolyVectorField(std::move(c));
}

PolyVectorField hamiltonian_field(const Poly& f) {
  if (f.nvars() != 2) throw InputError("hamiltonian_field: f must have exactly 2 variables");
  return PolyVectorField({f.derivative(1), -f.derivative(0)});
}

bool annihilation_check(const Poly& f, const PolyVectorField& v) { return directional_derivative(v, f).is_zero(); }

CommutingFamily commuting_family(const Poly& f, const PolyVectorField& x, const std::vector<Poly>& u) {
  const Poly residual = directional_derivative(x, f);
  if (!residual.is_zero()) {
    throw InputError("commuting_family: X does not annihilate df; residual df(X) = " + residual.to_string());
  }
  CommutingFamily fam;
  unsigned max_degree = 0;
  for (const auto& uj : u) {
    if (uj.nvars() != 1) throw InputError("commuting_family: each u_j must be univariate");
    max_degree = std::max(max_degree, uj.degree());
    fam.fields.push_back(Poly::compose(uj, f) * x);
  }
  fam.commute = true;
  for (std::size_t j = 0; j < fam.fields.size(); ++j)
    for (std::size_t k = j + 1; k < fam.fields.size(); ++k) {
      if (!vf_bracket(fam.fields[j], fam.fields[k]).is_zero()) {
        fam.commute = false;
        fam.noncommuting_pairs.emplace_back(j, k);
      }
    }
  RatMatrix coeffs(u.size(), max_degree + 1);
  for (std::size_t j = 0; j < u.size(); ++j)
    for (const auto& [m, c] : u[j].terms()) coeffs(j, m[0]) = c;
  fam.coefficient_rank = rank(coeffs);
  fam.independent = fam.coefficient_rank == u.size();
  return fam;
}

PolyVectorField projective_infinitesimal(const RatMatrix& a) {
  if (a.rows() != a.cols() || a.rows() < 2) throw InputError("projective_infinitesimal: need a square matrix of size >= 2");
  const std::size_t n = a.rows() - 1;
  // linear form c.x + d
  Poly affine = Poly::constant(n, a(n, n));
  for (std::size_t j = 0; j < n; ++j) affine += a(n, j) * Poly::variable(n, j);
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < n; ++i) {
    Poly c = Poly::constant(n, a(i, n));
    for (std::size_t j = 0; j < n; ++j) c += a(i, j) * Poly::variable(n, j);
    c -= Poly::variable(n, i) * affine;
    comps.push_back(std::move(c));
  }
  return PolyVectorField(std::move(comps));
}

ProjectiveKernel projective_kernel(std::size_t n) {
  const std::size_t m = n + 1;
  std::vector<PolyVectorField> images;
  std::set<Monomial> monomials;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      images.push_back(projective_infinitesimal(elementary(m, i, j)));
      for (const auto& comp : images.back().components())
        for (const auto& [mono, c] : comp.terms()) monomials.insert(mono);
    }
  const std::vector<Monomial> mono_list(monomials.begin(), monomials.end());
  RatMatrix map(n * mono_list.size(), m * m);
  for (std::size_t col = 0; col < images.size(); ++col)
    for (std::size_t comp = 0; comp < n; ++comp)
      for (std::size_t k = 0; k < mono_list.size(); ++k) {
        map(comp * mono_list.size() + k, col) = images[col][comp].coefficient(mono_list[k]);
      }
  ProjectiveKernel out;
  out.rank = rank(map);
  out.kernel = nullspace(map);
  out.kernel_is_scalars = out.kernel == Subspace::span({RatMatrix::identity(m).entries()}, m * m);
  return out;
}

VFAction projective_action(std::size_t n) {
  const MatrixBasis basis = sl_basis(n + 1);
  VFAction rho{sl(n + 1), {}, 1};
  for (const auto& mat : basis.matrices) rho.images.push_back(projective_infinitesimal(mat));
  rho.sign = action_homomorphism_check(rho).sign;
  return rho;
}

namespace {

PolyVectorField image_of(const VFAction& rho, const RatVector& x) {
  PolyVectorField out = PolyVectorField::zero(rho.images.front().dim());
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (sgn(x[k]) != 0) out = out + x[k] * rho.images[k];
  }
  return out;
}

}  // namespace

HomomorphismCheck action_homomorphism_check(const VFAction& rho) {
  const std::size_t n = rho.algebra.dim();
  if (rho.images.size() != n) throw InputError("action_homomorphism_check: need one image per basis element");
  HomomorphismCheck out;
  if (n == 0) {
    out.exact = out.either_sign = true;
    return out;
  }
  std::vector<std::pair<std::size_t, std::size_t>> bad_plus, bad_minus;
  bool all_zero = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const PolyVectorField lhs = image_of(rho, rho.algebra.basis_bracket(i, j));
      const PolyVectorField rhs = vf_bracket(rho.images[i], rho.images[j]);
      all_zero = all_zero && lhs.is_zero() && rhs.is_zero();
      if (!(lhs == rhs)) bad_plus.emplace_back(i, j);
      if (!(lhs == Rational(-1) * rhs)) bad_minus.emplace_back(i, j);
    }
  out.either_sign = all_zero;
  if (bad_plus.empty()) {
    out.sign = 1;
    out.exact = true;
  } else if (bad_minus.empty()) {
    out.sign = -1;
    out.exact = true;
  } else {
    out.sign = bad_plus.size() <= bad_minus.size() ? 1 : -1;
    out.violations = out.sign == 1 ? bad_plus : bad_minus;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool all_finite(const std::vector<double>& x) {
  for (double v : x) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

Trajectory flow(const PolyVectorField& v, const std::vector<double>& p, double duration, double h) {
  if (!(h > 0.0)) throw InputError("flow: step must be positive");
  if (p.size() != v.dim()) throw InputError("flow: point has wrong dimension");
  const auto steps = static_cast<std::size_t>(std::ceil(std::abs(duration) / h));
  const double dt = steps == 0 ? 0.0 : duration / static_cast<double>(steps);
  Trajectory tr;
  tr.times.push_back(0.0);
  tr.points.push_back(p);
  std::vector<double> x = p;
  const std::size_t n = x.size();
  auto shifted = [&](const std::vector<double>& k, double c) {
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + c * k[i];
    return y;
  };
  for (std::size_t s = 1; s <= steps; ++s) {
    const auto k1 = v.evaluate(x);
    const auto k2 = v.evaluate(shifted(k1, dt / 2));
    const auto k3 = v.evaluate(shifted(k2, dt / 2));
    const auto k4 = v.evaluate(shifted(k3, dt));
    for (std::size_t i = 0; i < n; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    const double t = dt * static_cast<double>(s);
    if (!all_finite(x)) {
      tr.ok = false;
      tr.failure_time = t;
      return tr;
    }
    tr.times.push_back(t);
    tr.points.push_back(x);
  }
  return tr;
}

FlowCheck flow_checks(const PolyVectorField& v, const PolyVectorField& w, const std::vector<double>& p, double s,
                      double t, double h, const std::optional<Poly>& f) {
  FlowCheck out;
  auto fail = [&](const Trajectory& tr) {
    out.ok = false;
    out.failure_time = tr.failure_time;
    return out;
  };
  const Trajectory w_first = flow(w, p, t, h);
  if (!w_first.ok) return fail(w_first);
  const Trajectory vw = flow(v, w_first.end(), s, h);
  if (!vw.ok) return fail(vw);
  const Trajectory v_first = flow(v, p, s, h);
  if (!v_first.ok) return fail(v_first);
  const Trajectory wv = flow(w, v_first.end(), t, h);
  if (!wv.ok) return fail(wv);
  double sq = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sq += std::pow(vw.end()[i] - wv.end()[i], 2);
  out.commutation_residual = std::sqrt(sq);
  if (f) {
    const double f0 = f->evaluate(p);
    for (const Trajectory* tr : {&w_first, &vw, &v_first, &wv})
      for (const auto& x : tr->points) out.level_residual = std::max(out.level_residual, std::abs(f->evaluate(x) - f0));
  }
  return out;
}

OrbitDimension orbit_dimension(const VFAction& rho, const std::vector<double>& p) {
  OrbitDimension out;
  if (rho.images.empty()) return out;
  const auto rows = static_cast<Eigen::Index>(rho.images.size());
  const auto cols = static_cast<Eigen::Index>(p.size());
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto v = rho.images[static_cast<std::size_t>(i)].evaluate(p);
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = v[static_cast<std::size_t>(j)];
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) <= 1e-14) return out;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    const double rel = sv(i) / sv(0);
    if (rel > 1e-9) ++out.dim;
    if (rel > 1e-9 && rel < 1e-6) out.near_degenerate = true;
  }
  return out;
}

bool fixed_point_check(const VFAction& rho, const std::vector<double>& p) { return orbit_dimension(rho, p).dim == 0; }

}  // namespace liekit
