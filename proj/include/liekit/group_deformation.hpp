#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liekit/deformation.hpp"

namespace liekit {

/// Matrix groups acted on by the group-level deformations.
///   st: ST0(n,R), upper triangular, positive diagonal, det 1
///   unipotent: U(n), upper triangular with unit diagonal
enum class GroupTag { st, unipotent };

std::string to_string(GroupTag tag);
GroupTag parse_group_tag(const std::string& text);

enum class GroupStageKind {
  off_diagonal_scaling,  // entry (i,j) scaled by s^(j-i); s = 0 is the diagonal projection
  diagonal_power,        // diagonal entry d mapped to d^rho
};

/// value(t) = sigma(scale t + shift) when falling, 1 - sigma(...) when rising.
struct GroupStage {
  GroupStageKind kind;
  double scale = 1;
  double shift = 0;
  bool rising = false;
  double value(double t) const;
};

enum class GroupFamilyKind {
  contraction,  // identity for t <= 0, trivial for t >= 1
  bump,         // trivial for t outside (0,1), identity on [middle_begin, middle_end]
};

/// Theta_t(g)(i,j) = s(t)^(j-i) g(i,j) for i < j and Theta_t(g)(i,i) = g(i,i)^rho(t),
/// where s and rho are the products of the scaling and power stage values.
/// Schedules keep rho(t) < 1 only where s(t) = 0, so each Theta_t is a homomorphism.
class GroupDeformation {
 public:
  GroupDeformation(std::string label, GroupTag group, std::size_t n, GroupFamilyKind kind,
                   std::vector<GroupStage> stages, double middle_begin = 0, double middle_end = 0);

  const std::string& label() const { return label_; }
  GroupTag group() const { return group_; }
  std::size_t n() const { return n_; }
  GroupFamilyKind kind() const { return kind_; }
  const std::vector<GroupStage>& stages() const { return stages_; }
  double middle_begin() const { return middle_begin_; }
  double middle_end() const { return middle_end_; }

  double scaling(double t) const;
  double power(double t) const;
  Eigen::MatrixXd apply(double t, const Eigen::MatrixXd& g) const;
  std::vector<double> breakpoints() const;

 private:
  std::string label_;
  GroupTag group_;
  std::size_t n_;
  GroupFamilyKind kind_;
  std::vector<GroupStage> stages_;
  double middle_begin_, middle_end_;
};

/// Off-diagonal cocycle scaling on [0, 1/2], then diagonal power rho: 1 -> 0 on [1/2, 1].
/// Lifts concatenate(diag_contraction(n), st_deformation(n)) to ST0(n,R).
GroupDeformation group_contraction_st(std::size_t n);

/// Family trivial for t outside (0,1) and the identity on a middle interval.
/// U(n): off-diagonal scaling up on [0,1/3], down on [2/3,1].
/// ST0(n): power up [0,.2], scaling up [.2,.4], identity [.4,.6], scaling down [.6,.8], power down [.8,1].
GroupDeformation bump_group_deformation(GroupTag group, std::size_t n);

/// Random element of the tagged group: off-diagonal entries in [-2,2], diagonal
/// in [0.5,2] renormalized to det 1 (unit diagonal for U(n)).
Eigen::MatrixXd random_group_element(GroupTag group, std::size_t n, std::mt19937_64& rng);

/// Max violation of: upper triangular, positive diagonal, det = 1 (relative), unit diagonal for U(n).
double group_membership_residual(GroupTag group, const Eigen::MatrixXd& g);

/// One-parameter-subgroup generators exp(X) for the basis of the group's Lie algebra.
std::vector<Eigen::MatrixXd> group_generators(GroupTag group, std::size_t n);

struct GroupDeformationReport {
  std::string label;
  double homomorphism_residual = 0;
  double membership_residual = 0;   // triangularity, positive diagonal, det 1 of sampled images
  double endpoint_residual = 0;     // contraction: identity at t<=0, trivial at t>=1; bump: trivial outside, identity inside
  double smoothness_residual = 0;   // difference quotients at breakpoints, stage-local step
  double d2_residual = 0;           // |Theta_1 - Theta_2|
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  double smoothness_tolerance = 1e-6;
  bool passed() const;
};

GroupDeformationReport verify_deformation(const GroupDeformation& d, std::size_t samples, std::uint64_t seed);

}  // namespace liekit
