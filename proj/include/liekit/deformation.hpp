#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liekit/lie_algebra.hpp"

namespace liekit {

// ---------------------------------------------------------------------------
// Transition profile
// ---------------------------------------------------------------------------

enum class ProfileKind { flat_step };

/// sigma(t) = 1 for t <= 0, 0 for t >= 1 and exp(-exp(-1/t) / (1 - t)) in between.
/// Smooth, nonincreasing, flat at both ends, analytic on (0, 1).
struct TransitionProfile {
  ProfileKind kind = ProfileKind::flat_step;
  double operator()(double t) const;
};

double profile_eval(const TransitionProfile& sigma, double t);

/// Checks s(i,j) s(j,k) = s(i,k) for exponent tables, i.e. e(i,j) + e(j,k) = e(i,k)
/// for all i <= j <= k, with e(i,i) = 0. `exponents[i][j]` is read for i < j only.
bool cocycle_check(const std::vector<std::vector<int>>& exponents);
/// Default table e(i,j) = j - i for n x n matrices.
bool cocycle_check(std::size_t n);
std::vector<std::vector<int>> cocycle_exponents(std::size_t n);

// ---------------------------------------------------------------------------
// Algebra deformations diagonal in the parent basis
// ---------------------------------------------------------------------------

/// One factor of a deformation: basis element k is scaled by sigma(tau)^exponents[k]
/// with local time tau = scale * t + shift.
struct DeformationStage {
  Rational scale = 1;
  Rational shift = 0;
  std::vector<unsigned> exponents;
};

/// theta_t(e_k) = prod over stages of sigma(tau_s(t))^e_{s,k} * e_k.
class AlgebraDeformation {
 public:
  AlgebraDeformation(std::string label, LieAlgebra parent, std::vector<DeformationStage> stages);

  const std::string& label() const { return label_; }
  const LieAlgebra& parent() const { return parent_; }
  const std::vector<DeformationStage>& stages() const { return stages_; }

  /// Per-basis scale factors of theta_t.
  std::vector<double> factors(double t) const;
  std::vector<double> apply(double t, const std::vector<double>& x) const;

  /// Factor of basis element k at t = 1 decided exactly (0 or 1 or sigma^e strictly inside).
  bool killed_at_one(std::size_t k) const;

  /// Times where some stage enters or leaves its transition window.
  std::vector<Rational> breakpoints() const;

 private:
  std::string label_;
  LieAlgebra parent_;
  std::vector<DeformationStage> stages_;
};

/// theta on st(n): diagonal basis fixed, T(ij) scaled by sigma^(j-i).
AlgebraDeformation st_deformation(std::size_t n);
/// The same family restricted to st(n)' (a Lie contraction of the commutator ideal).
AlgebraDeformation st_prime_deformation(std::size_t n);
/// psi on the traceless diagonal algebra d(n): every basis element scaled by sigma.
AlgebraDeformation diag_contraction(std::size_t n);
AlgebraDeformation identity_deformation(const LieAlgebra& g);

/// psi # theta: theta on (-inf, 1/2], psi o theta_1 on [1/2, inf).
/// `embedding[a]` is the index in theta's parent of psi's a-th basis element.
/// Throws InputError unless theta retracts onto the embedded subalgebra.
AlgebraDeformation concatenate(const AlgebraDeformation& psi, const AlgebraDeformation& theta,
                               const std::vector<std::size_t>& embedding);
/// Embedding matched by basis names.
AlgebraDeformation concatenate(const AlgebraDeformation& psi, const AlgebraDeformation& theta);

/// Exact check that theta_t is an endomorphism for every t, by comparing stage
/// exponents on each interval between breakpoints. Returns the first failing
/// (i, j, k) with c[i][j][k] != 0, or nullopt.
struct EndomorphismFailure {
  std::size_t i, j, k;
  Rational at_time;
};
std::optional<EndomorphismFailure> exact_endomorphism_check(const AlgebraDeformation& d);

/// Searches for a positive integer grading (exponents in 1..max_exponent)
/// compatible with every nonzero structure constant. Such a grading yields
/// a one-stage Lie contraction; nullopt when none exists in range.
std::optional<AlgebraDeformation> find_graded_contraction(const LieAlgebra& g, unsigned max_exponent = 6);

struct DeformationReport {
  std::string label;
  double d1_residual = 0;           // max |factor - 1| at t in {-1, 0}
  double d2_residual = 0;           // max |factor(1) - factor(2)|
  double endomorphism_residual = 0; // sampled, floating point
  bool endomorphism_exact = false;
  double smoothness_residual = 0;   // max one-sided difference quotient (orders 1..3, stage-local step) at breakpoints
  double contraction_residual = 0;  // max |factor(1)|
  bool is_contraction = false;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double endomorphism_tolerance = 1e-9;
  double smoothness_tolerance = 1e-6;
  bool passed() const;
};

DeformationReport verify_deformation(const AlgebraDeformation& d, std::size_t samples, std::uint64_t seed);

std::vector<double> bracket_numeric(const LieAlgebra& g, const std::vector<double>& x, const std::vector<double>& y);

}  // namespace liekit
