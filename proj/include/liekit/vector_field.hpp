#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekit/lie_algebra.hpp"
#include "liekit/poly.hpp"

namespace liekit {

/// Polynomial vector field on R^n: component i is the coefficient of d/dx_i.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::vector<Poly> components);
  static PolyVectorField zero(std::size_t n);

  std::size_t dim() const { return components_.size(); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](std::size_t i) const { return components_.at(i); }
  bool is_zero() const;

  std::vector<double> evaluate(const std::vector<double>& x) const;

  friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b);
  friend PolyVectorField operator*(const Rational& s, const PolyVectorField& a);
  /// Multiplication by a function.
  friend PolyVectorField operator*(const Poly& u, const PolyVectorField& a);
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) = default;

 private:
  std::vector<Poly> components_;
};

/// [V, W] = (DW) V - (DV) W, i.e. [V,W]_i = sum_j V_j dW_i/dx_j - W_j dV_i/dx_j.
PolyVectorField vf_bracket(const PolyVectorField& v, const PolyVectorField& w);

/// Directional derivative V(f) = sum_i V_i df/dx_i.
Poly directional_derivative(const PolyVectorField& v, const Poly& f);

/// (df/dx2, -df/dx1) for f in two variables.
PolyVectorField hamiltonian_field(const Poly& f);

/// True iff df(V) is the zero polynomial.
bool annihilation_check(const Poly& f, const PolyVectorField& v);

struct CommutingFamily {
  std::vector<PolyVectorField> fields;  // L_j = u_j(f) X
  bool commute = false;                 // every [L_j, L_k] is exactly zero
  std::vector<std::pair<std::size_t, std::size_t>> noncommuting_pairs;
  bool independent = false;             // u_j linearly independent over Q
  std::size_t coefficient_rank = 0;
};

/// Requires annihilation_check(f, x); otherwise throws InputError naming the residual df(X).
CommutingFamily commuting_family(const Poly& f, const PolyVectorField& x, const std::vector<Poly>& u);

/// Infinitesimal projective action of an (n+1)x(n+1) matrix A = [[M, b], [c^T, d]] on R^n:
/// X_A(x) = M x + b - x (c.x + d).
PolyVectorField projective_infinitesimal(const RatMatrix& a);

/// Rank of A -> X_A on gl(n+1); the kernel is the scalar matrices.
struct ProjectiveKernel {
  std::size_t rank = 0;
  Subspace kernel;  // in gl(n+1) coordinates, row-major entries
  bool kernel_is_scalars = false;
};
ProjectiveKernel projective_kernel(std::size_t n);

/// Linear map from a Lie algebra to vector fields, one image per basis element.
struct VFAction {
  LieAlgebra algebra;
  std::vector<PolyVectorField> images;
  int sign = 1;  // measured: rho[x,y] = sign * [rho x, rho y]
};

/// sl(n+1) acting on R^n through projective_infinitesimal of its matrix basis.
VFAction projective_action(std::size_t n);

struct HomomorphismCheck {
  int sign = 1;
  bool exact = false;
  bool either_sign = false;  // both sides vanish for every pair
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

HomomorphismCheck action_homomorphism_check(const VFAction& rho);

// ---------------------------------------------------------------------------
// Numerical flows
// ---------------------------------------------------------------------------

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> points;
  bool ok = true;
  std::optional<double> failure_time;  // first time a non-finite value appeared
  const std::vector<double>& end() const { return points.back(); }
};

/// Classical fourth-order Runge-Kutta with ceil(|T|/h) equal steps (T may be negative).
Trajectory flow(const PolyVectorField& v, const std::vector<double>& p, double duration, double h);

struct FlowCheck {
  double commutation_residual = 0;  // |phi_V^s(phi_W^t(p)) - phi_W^t(phi_V^s(p))|
  double level_residual = 0;        // max over both trajectories of |f - f(p)| (when f given)
  bool ok = true;
  std::optional<double> failure_time;
};

FlowCheck flow_checks(const PolyVectorField& v, const PolyVectorField& w, const std::vector<double>& p, double s,
                      double t, double h, const std::optional<Poly>& f = std::nullopt);

struct OrbitDimension {
  std::size_t dim = 0;
  bool near_degenerate = false;  // a singular value sits between the rank threshold and 1e-6 relative
};

/// Numerical rank of the evaluations rho(e_i)(p), relative threshold 1e-9.
OrbitDimension orbit_dimension(const VFAction& rho, const std::vector<double>& p);
bool fixed_point_check(const VFAction& rho, const std::vector<double>& p);

}  // namespace liekit
