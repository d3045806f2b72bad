#include "liekit/actions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace liekit {

Point sphere_action(const Matrix& g, const Point& x) {
  if (g.rows() != g.cols() || g.cols() != x.size()) throw InputError("sphere_action: dimension mismatch");
  const Point y = g * x;
  const double norm = y.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InputError("sphere_action: singular group element");
  return y / norm;
}

std::pair<Point, double> suspension_act(const GroupDeformation& lambda, const Matrix& g, const Point& x, double t) {
  return {sphere_action(lambda.apply(t, g), x), t};
}

Point cylinder_transfer(const Point& x, double t) { return std::exp(-t) * x; }

std::pair<Point, double> cylinder_inverse(const Point& y) {
  const double r = y.norm();
  if (r == 0.0) throw InputError("cylinder_inverse: the origin has no cylinder preimage");
  return {y / r, -std::log(r)};
}

std::string to_string(BallVariant v) { return v == BallVariant::radial ? "radial" : "compact"; }

BallAction::BallAction(BallVariant variant, GroupDeformation d, double r0, double r1, Point center, double radius)
    : variant_(variant), deformation_(std::move(d)), r0_(r0), r1_(r1), center_(std::move(center)), radius_(radius) {
  if (static_cast<std::size_t>(center_.size()) != deformation_.n()) throw InputError("ball: center has wrong dimension");
  if (!(radius_ > 0.0)) throw InputError("ball: radius must be positive");
}

BallAction BallAction::compact(GroupTag group, std::size_t n, double r0, double r1, Point center, double radius) {
  if (!(0.0 < r0 && r0 < r1 && r1 <= 1.0)) throw InputError("ball: annulus radii must satisfy 0 < r0 < r1 <= 1");
  return BallAction(BallVariant::compact, bump_group_deformation(group, n), r0, r1, std::move(center), radius);
}

BallAction BallAction::radial(std::size_t n, Point center, double radius) {
  return BallAction(BallVariant::radial, group_contraction_st(n), std::exp(-1.0), 1.0, std::move(center), radius);
}

bool BallAction::in_support(const Point& y) const {
  const double r = ((y - center_) / radius_).norm();
  if (variant_ == BallVariant::radial) return r > std::exp(-1.0);
  return r0_ < r && r < r1_;
}

Point ball_action(const BallAction& b, const Matrix& g, const Point& y) {
  if (static_cast<std::size_t>(g.rows()) != b.n() || y.size() != g.rows()) {
    throw InputError("ball_action: dimension mismatch");
  }
  const Point z = (y - b.center()) / b.radius();
  const double r = z.norm();
  double t = 0.0;
  if (b.variant() == BallVariant::compact) {
    if (r <= b.r0() || r >= b.r1()) return y;
    t = (std::log(b.r1()) - std::log(r)) / (std::log(b.r1()) - std::log(b.r0()));
  } else {
    if (r == 0.0) return y;
    t = -std::log(r);
    if (t >= 1.0) return y;
  }
  const Point x = sphere_action(b.deformation().apply(t, g), z / r);
  return b.center() + b.radius() * r * x;
}

MultiBall MultiBall::make(std::vector<BallAction> balls) {
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (std::size_t j = i + 1; j < balls.size(); ++j) {
      if (balls[i].n() != balls[j].n()) throw InputError("multiball: balls live in different dimensions");
      const double dist = (balls[i].center() - balls[j].center()).norm();
      if (!(dist > balls[i].radius() + balls[j].radius())) {
        throw InputError("multiball: balls " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  return MultiBall{std::move(balls)};
}

Point multiball_action(const MultiBall& mb, const std::vector<Matrix>& elements, const Point& y) {
  if (elements.size() != mb.balls.size()) throw InputError("multiball_action: need one element per ball");
  for (std::size_t j = 0; j < mb.balls.size(); ++j) {
    const auto& b = mb.balls[j];
    if ((y - b.center()).norm() < b.radius()) return ball_action(b, elements[j], y);
  }
  return y;
}

// ---------------------------------------------------------------------------

namespace {

constexpr double kPi = std::numbers::pi;

double mod_pi(double a) { return a - kPi * std::floor(a / kPi); }

}  // namespace

double lift_base(const Eigen::Matrix2d& a, double theta) {
  const double m = std::floor(theta / kPi);
  const double r = theta - m * kPi;
  const Eigen::Vector2d w0 = a.col(0);
  const Eigen::Vector2d v = a * Eigen::Vector2d(std::cos(r), std::sin(r));
  const double base = mod_pi(std::atan2(w0.y(), w0.x()));
  // oriented angle from A e1 to A u(r); det A > 0 keeps it in [0, pi]
  const double sweep = std::atan2(a.determinant() * std::sin(r), w0.dot(v));
  return base + sweep + m * kPi;
}

double cover_apply(const CoverElement& e, double theta) {
  return lift_base(e.a, theta) + static_cast<double>(e.k) * kPi;
}

CoverElement cover_compose(const CoverElement& a, const CoverElement& b) {
  const Eigen::Matrix2d ab = a.a * b.a;
  const double gap = lift_base(a.a, lift_base(b.a, 0.0)) - lift_base(ab, 0.0);
  const long delta = std::lround(gap / kPi);
  return {ab, a.k + b.k + delta};
}

CoverElement cover_identity() { return {}; }

double interval_action(const CoverElement& a, double s) {
  if (!(s >= 0.0 && s <= 1.0)) throw InputError("interval_action: s must lie in [0,1]");
  if (s == 0.0 || s == 1.0) return s;
  const double theta = std::log(s / (1.0 - s));
  const double image = cover_apply(a, theta);
  return 1.0 / (1.0 + std::exp(-image));
}

Point disk_action(const CoverElement& a, const Point& y) {
  constexpr double kBoundarySlack = 4 * std::numeric_limits<double>::epsilon();
  const double r = y.norm();
  if (r > 1.0 + kBoundarySlack) throw InputError("disk_action: point outside the unit disk");
  if (r == 0.0 || r >= 1.0 - kBoundarySlack) return y;
  const double r2 = interval_action(a, r);
  if (r2 == r) return y;
  return (r2 / r) * y;
}

Eigen::Matrix2d random_sl2(std::mt19937_64& rng) {
  const double sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
  const double a = sign * uniform(rng, 0.5, 2.0);
  const double b = uniform(rng, -2.0, 2.0);
  const double c = uniform(rng, -2.0, 2.0);
  Eigen::Matrix2d m;
  m << a, b, c, (1.0 + b * c) / a;
  return m;
}

CoverElement random_cover_element(std::mt19937_64& rng) {
  const long k = std::uniform_int_distribution<long>(-2, 2)(rng);
  return {random_sl2(rng), k};
}

// ---------------------------------------------------------------------------

bool ActionReport::all_generators_effective() const {
  for (const auto& w : witnesses) {
    if (!w.found) return false;
  }
  return true;
}

Point random_unit_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Point x(static_cast<Eigen::Index>(n));
  do {
    for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = gauss(rng);
  } while (x.norm() < 1e-8);
  return x / x.norm();
}

Point random_shell_point(const Point& center, double lo, double hi, std::mt19937_64& rng) {
  const Point dir = random_unit_vector(static_cast<std::size_t>(center.size()), rng);
  return center + uniform(rng, lo, hi) * dir;
}

}  // namespace liekit
