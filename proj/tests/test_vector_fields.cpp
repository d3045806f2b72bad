#include <gtest/gtest.h>

#include <cmath>

#include "liekit/catalog.hpp"
#include "liekit/vector_field.hpp"
#include "support/oracles.hpp"

using namespace liekit;

namespace {

Poly x(std::size_t n, std::size_t i) { return Poly::variable(n, i); }
Poly c(std::size_t n, const Rational& v) { return Poly::constant(n, v); }

Poly random_quadratic(std::mt19937_64& rng, std::size_t n) {
  Poly p = c(n, oracle::random_rational(rng, 3));
  for (std::size_t i = 0; i < n; ++i) {
    p += oracle::random_rational(rng, 3) * x(n, i);
    for (std::size_t j = i; j < n; ++j) p += oracle::random_rational(rng, 3) * (x(n, i) * x(n, j));
  }
  return p;
}

PolyVectorField random_field(std::mt19937_64& rng, std::size_t n) {
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < n; ++i) comps.push_back(random_quadratic(rng, n));
  return PolyVectorField(comps);
}

}  // namespace

TEST(Poly, ArithmeticAndDerivatives) {
  const Poly f = x(2, 0) * x(2, 0) + Rational(3) * x(2, 0) * x(2, 1) - c(2, 1);
  EXPECT_EQ(f.derivative(0), Rational(2) * x(2, 0) + Rational(3) * x(2, 1));
  EXPECT_EQ(f.derivative(1), Rational(3) * x(2, 0));
  EXPECT_EQ(f.degree(), 2u);
  EXPECT_EQ(f.evaluate(RatVector{2, Rational(1, 3)}), Rational(5));
  EXPECT_DOUBLE_EQ(f.evaluate(std::vector<double>{2.0, 1.0 / 3.0}), 5.0);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ(f.to_string(), "-1 + 3*x1*x2 + x1^2");
  const Poly u = c(1, 1) + Rational(2) * x(1, 0) * x(1, 0);  // 1 + 2s^2
  EXPECT_EQ(Poly::compose(u, x(2, 1)), c(2, 1) + Rational(2) * x(2, 1) * x(2, 1));
}

TEST(Bracket, BilinearAntisymmetricJacobi) {
  for (std::uint64_t i = 0; i < 25; ++i) {
    auto rng = sample_rng(61, i);
    const std::size_t n = 1 + i % 3;
    const auto u = random_field(rng, n), v = random_field(rng, n), w = random_field(rng, n);
    const Rational a = oracle::random_rational(rng);
    EXPECT_EQ(vf_bracket(u, v), Rational(-1) * vf_bracket(v, u));
    EXPECT_EQ(vf_bracket(a * u + w, v), a * vf_bracket(u, v) + vf_bracket(w, v));
    const auto jac = vf_bracket(u, vf_bracket(v, w)) + vf_bracket(v, vf_bracket(w, u)) + vf_bracket(w, vf_bracket(u, v));
    EXPECT_TRUE(jac.is_zero());
  }
}

TEST(Bracket, SignConvention) {
  // [d/dx1, x1 d/dx2] = (DW)V - (DV)W = d/dx2
  const PolyVectorField d1({c(2, 1), c(2, 0)});
  const PolyVectorField w({c(2, 0), x(2, 0)});
  EXPECT_EQ(vf_bracket(d1, w), PolyVectorField({c(2, 0), c(2, 1)}));
}

TEST(Hamiltonian, FieldAnnihilatesItsFunction) {
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto rng = sample_rng(62, i);
    const Poly f = random_quadratic(rng, 2) * random_quadratic(rng, 2);
    EXPECT_TRUE(annihilation_check(f, hamiltonian_field(f)));
    EXPECT_TRUE(directional_derivative(hamiltonian_field(f), f).is_zero());
  }
  // f = x1 (x2^2 + 1) is constant on x1 = 0 and its field is tangent there.
  const Poly f = x(2, 0) * (x(2, 1) * x(2, 1) + c(2, 1));
  const auto h = hamiltonian_field(f);
  EXPECT_TRUE(h[0].evaluate(RatVector{0, 3}) == 0);
}

TEST(CommutingFamily, CircleFunction) {
  const Poly f = x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
  std::vector<Poly> u;
  Poly s_pow = c(1, 1);
  for (int k = 0; k < 4; ++k) {
    u.push_back(s_pow);
    s_pow = s_pow * x(1, 0);
  }
  const auto fam = commuting_family(f, hamiltonian_field(f), u);
  EXPECT_TRUE(fam.commute);
  EXPECT_TRUE(fam.noncommuting_pairs.empty());
  EXPECT_TRUE(fam.independent);
  EXPECT_EQ(fam.coefficient_rank, 4u);
  for (std::size_t a = 0; a < fam.fields.size(); ++a)
    for (std::size_t b = 0; b < fam.fields.size(); ++b) EXPECT_TRUE(vf_bracket(fam.fields[a], fam.fields[b]).is_zero());
}

TEST(CommutingFamily, DependentCoefficientsAndBadFields) {
  const Poly f = x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
  const auto fam = commuting_family(f, hamiltonian_field(f), {c(1, 1), c(1, 2)});
  EXPECT_TRUE(fam.commute);
  EXPECT_FALSE(fam.independent);
  EXPECT_EQ(fam.coefficient_rank, 1u);
  const PolyVectorField d1({c(2, 1), c(2, 0)});
  EXPECT_THROW(commuting_family(f, d1, {c(1, 1)}), InputError);
}

TEST(Projective, InfinitesimalGenerators) {
  // T12 in sl(3) acts on R^2 as x2 d/dx1.
  EXPECT_EQ(projective_infinitesimal(elementary(3, 0, 1)), PolyVectorField({x(2, 1), c(2, 0)}));
  // sl(2) on the line: E12 -> 1, H -> 2x, E21 -> -x^2.
  const VFAction rho = projective_action(1);
  const auto names = sl_basis(2).names;
  ASSERT_EQ(names, (std::vector<std::string>{"H1", "E12", "E21"}));
  EXPECT_EQ(rho.images[0], PolyVectorField({Rational(2) * x(1, 0)}));
  EXPECT_EQ(rho.images[1], PolyVectorField({c(1, 1)}));
  EXPECT_EQ(rho.images[2], PolyVectorField({Rational(-1) * x(1, 0) * x(1, 0)}));
}

TEST(Projective, LinearInTheMatrix) {
  for (std::uint64_t i = 0; i < 10; ++i) {
    auto rng = sample_rng(63, i);
    const RatMatrix a = oracle::random_matrix(rng, 3, 3), b = oracle::random_matrix(rng, 3, 3);
    const Rational s = oracle::random_rational(rng);
    EXPECT_EQ(projective_infinitesimal(s * a + b), s * projective_infinitesimal(a) + projective_infinitesimal(b));
  }
}

TEST(Projective, KernelIsScalars) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto k = projective_kernel(n);
    EXPECT_TRUE(k.kernel_is_scalars);
    EXPECT_EQ(k.rank, (n + 1) * (n + 1) - 1);
  }
}

TEST(Projective, HomomorphismWithSingleSign) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto check = action_homomorphism_check(projective_action(n));
    EXPECT_TRUE(check.exact) << n;
    EXPECT_TRUE(check.violations.empty());
    EXPECT_EQ(check.sign, -1);
    EXPECT_FALSE(check.either_sign);
  }
}

TEST(Projective, BrokenImageIsRejected) {
  VFAction rho = projective_action(1);
  rho.images[2] = Rational(2) * rho.images[2];
  const auto check = action_homomorphism_check(rho);
  EXPECT_FALSE(check.exact);
  EXPECT_FALSE(check.violations.empty());
}

TEST(OrbitDimension, RiccatiAndPlane) {
  const VFAction line = projective_action(1);
  for (double p : {-3.0, -0.5, 0.0, 0.7, 10.0}) EXPECT_EQ(orbit_dimension(line, {p}).dim, 1u);
  const VFAction plane = projective_action(2);
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(64, i);
    EXPECT_EQ(orbit_dimension(plane, {uniform(rng, -2, 2), uniform(rng, -2, 2)}).dim, 2u);
  }
  VFAction zero = line;
  for (auto& im : zero.images) im = PolyVectorField::zero(1);
  EXPECT_EQ(orbit_dimension(zero, {0.3}).dim, 0u);
  EXPECT_TRUE(fixed_point_check(zero, {0.3}));
  EXPECT_FALSE(fixed_point_check(line, {0.3}));
}

TEST(OrbitDimension, StrictUpperFixesTheAxis) {
  // Fields x2 d/dx1 (from T12) vanish on the x1-axis.
  VFAction rho{st_prime(2), {projective_infinitesimal(elementary(3, 0, 1))}, 1};
  EXPECT_TRUE(fixed_point_check(rho, {1.5, 0.0}));
  EXPECT_EQ(orbit_dimension(rho, {1.5, 2.0}).dim, 1u);
}

TEST(Flow, StepCountAndEndpoint) {
  const PolyVectorField rot({x(2, 1), Rational(-1) * x(2, 0)});
  const auto tr = flow(rot, {1.0, 0.0}, 1.0, 0.125);
  ASSERT_TRUE(tr.ok);
  EXPECT_EQ(tr.points.size(), 9u);
  EXPECT_EQ(tr.times.back(), 1.0);
  const auto back = flow(rot, tr.end(), -1.0, 0.125);
  EXPECT_NEAR(back.end()[0], 1.0, 1e-6);
  EXPECT_NEAR(tr.end()[0], std::cos(1.0), 1e-5);
  // Constant fields are integrated exactly.
  const PolyVectorField d1({c(2, 1), c(2, 0)});
  EXPECT_EQ(flow(d1, {0.0, 2.0}, 2.0, 0.25).end(), (std::vector<double>{2.0, 2.0}));
}

TEST(Flow, BlowUpIsReported) {
  const PolyVectorField sq({x(1, 0) * x(1, 0)});
  const auto tr = flow(sq, {1.0}, 2.0, 1e-2);  // exact solution 1/(1-t) blows up at t = 1
  EXPECT_FALSE(tr.ok);
  ASSERT_TRUE(tr.failure_time.has_value());
  EXPECT_GT(*tr.failure_time, 0.9);
}

TEST(Flow, CommutingFieldsCommuteAndPreserveLevels) {
  const Poly f = x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
  const auto fam = commuting_family(f, hamiltonian_field(f), {c(1, 1), x(1, 0), x(1, 0) * x(1, 0)});
  const auto same = flow_checks(fam.fields[1], fam.fields[1], {0.4, -0.2}, 0.3, 0.3, 1e-3, f);
  EXPECT_LE(same.commutation_residual, 1e-10);
  const auto check = flow_checks(fam.fields[0], fam.fields[2], {0.6, 0.3}, 0.3, 0.3, 1e-3, f);
  EXPECT_TRUE(check.ok);
  EXPECT_LE(check.commutation_residual, 1e-5);
  EXPECT_LE(check.level_residual, 1e-8);
}

TEST(Flow, NonCommutingPairMismatchIsST) {
  const PolyVectorField d1({c(2, 1), c(2, 0)});
  const PolyVectorField w({c(2, 0), x(2, 0)});
  for (double s : {1.0, 0.5}) {
    const auto check = flow_checks(d1, w, {0.2, -0.1}, s, 1.0, 1e-3);
    EXPECT_NEAR(check.commutation_residual, s * 1.0, 1e-9);
  }
}
