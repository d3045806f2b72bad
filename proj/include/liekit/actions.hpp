#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekit/group_deformation.hpp"
#include "liekit/sampling.hpp"

namespace liekit {

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Displacement threshold (sup norm) above which a point counts as moved.
constexpr double kEffectivenessThreshold = 1e-6;

/// Projective action on the unit sphere: x -> gx / |gx|. Throws on singular g.
Point sphere_action(const Matrix& g, const Point& x);

/// (Lambda_t(g) . x, t) on the cylinder S^{n-1} x R.
std::pair<Point, double> suspension_act(const GroupDeformation& lambda, const Matrix& g, const Point& x, double t);

/// (x, t) -> e^{-t} x, and its inverse y -> (y/|y|, -ln|y|). Inverse throws for y = 0.
Point cylinder_transfer(const Point& x, double t);
std::pair<Point, double> cylinder_inverse(const Point& y);

enum class BallVariant {
  /// Contraction family transferred by (x,t) -> e^{-t}x: identity for |z| <= 1/e, full action for |z| >= 1.
  radial,
  /// Bump family supported in the annulus r0 < |z| < r1; identity elsewhere.
  compact,
};

std::string to_string(BallVariant v);

/// Action on R^n supported in a coordinate ball (center, radius); z = (y - center) / radius.
class BallAction {
 public:
  static BallAction compact(GroupTag group, std::size_t n, double r0, double r1, Point center, double radius);
  static BallAction radial(std::size_t n, Point center, double radius);

  GroupTag group() const { return deformation_.group(); }
  std::size_t n() const { return deformation_.n(); }
  BallVariant variant() const { return variant_; }
  double r0() const { return r0_; }
  double r1() const { return r1_; }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  const GroupDeformation& deformation() const { return deformation_; }

  /// Points that may move: the open annulus (compact) or 1/e < |z| (radial).
  bool in_support(const Point& y) const;

 private:
  BallAction(BallVariant variant, GroupDeformation d, double r0, double r1, Point center, double radius);

  BallVariant variant_;
  GroupDeformation deformation_;
  double r0_, r1_;
  Point center_;
  double radius_;
};

Point ball_action(const BallAction& b, const Matrix& g, const Point& y);

/// k balls with disjoint closures; factor j acts in ball j.
struct MultiBall {
  std::vector<BallAction> balls;
  static MultiBall make(std::vector<BallAction> balls);  // throws InputError on overlap
};

Point multiball_action(const MultiBall& mb, const std::vector<Matrix>& elements, const Point& y);

// ---------------------------------------------------------------------------
// Universal-cover lift of the projective SL(2,R) action on the circle R/piZ
// ---------------------------------------------------------------------------

/// Homeomorphism F(theta) = f_A(theta) + k pi of R, where f_A lifts the
/// action of A on line directions and f_A(0) lies in [0, pi).
struct CoverElement {
  Eigen::Matrix2d a = Eigen::Matrix2d::Identity();
  long k = 0;
};

double lift_base(const Eigen::Matrix2d& a, double theta);
double cover_apply(const CoverElement& e, double theta);
CoverElement cover_compose(const CoverElement& a, const CoverElement& b);
CoverElement cover_identity();

/// Conjugate of the cover action by s -> ln(s/(1-s)); endpoints fixed exactly.
double interval_action(const CoverElement& a, double s);
/// Radial extension to the closed unit disk: each radius carries the interval action.
Point disk_action(const CoverElement& a, const Point& y);

Eigen::Matrix2d random_sl2(std::mt19937_64& rng);
CoverElement random_cover_element(std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Action-axiom verification
// ---------------------------------------------------------------------------

struct EffectivenessWitness {
  std::size_t generator = 0;
  bool found = false;
  Point point;
  double displacement = 0;
};

struct ActionReport {
  double identity_residual = 0;
  double composition_residual = 0;
  std::vector<EffectivenessWitness> witnesses;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 1e-6;
  bool all_generators_effective() const;
  bool passed() const { return identity_residual <= tolerance && composition_residual <= tolerance; }
};

/// A group action on points, described by its evaluation map and group law.
template <class Element>
struct ActionUnderTest {
  std::function<Point(const Element&, const Point&)> act;
  std::function<Element(const Element&, const Element&)> compose;
  Element identity;
};

template <class Element>
ActionReport verify_action(const ActionUnderTest<Element>& action,
                           const std::function<Element(std::mt19937_64&)>& element_sampler,
                           const std::function<Point(std::mt19937_64&)>& point_sampler,
                           const std::vector<Element>& generators, std::size_t count, std::uint64_t seed,
                           double tolerance = 1e-6) {
  ActionReport rep;
  rep.samples = count;
  rep.seed = seed;
  rep.tolerance = tolerance;
  auto sup = [](const Point& a, const Point& b) { return (a - b).cwiseAbs().maxCoeff(); };
  std::vector<Point> points;
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = sample_rng(seed, i);
    const Element g = element_sampler(rng);
    const Element h = element_sampler(rng);
    const Point y = point_sampler(rng);
    points.push_back(y);
    rep.identity_residual = std::max(rep.identity_residual, sup(action.act(action.identity, y), y));
    const Point lhs = action.act(action.compose(g, h), y);
    const Point rhs = action.act(g, action.act(h, y));
    rep.composition_residual = std::max(rep.composition_residual, sup(lhs, rhs));
  }
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    EffectivenessWitness w;
    w.generator = gi;
    for (const auto& y : points) {
      const double d = sup(action.act(generators[gi], y), y);
      if (d > w.displacement) {
        w.displacement = d;
        w.point = y;
      }
    }
    w.found = w.displacement >= kEffectivenessThreshold;
    rep.witnesses.push_back(std::move(w));
  }
  return rep;
}

/// Uniform point on the unit sphere S^{n-1}.
Point random_unit_vector(std::size_t n, std::mt19937_64& rng);
/// Uniform direction with radius uniform in (lo, hi), around `center`.
Point random_shell_point(const Point& center, double lo, double hi, std::mt19937_64& rng);

}  // namespace liekit
