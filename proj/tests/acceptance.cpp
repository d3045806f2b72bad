// Acceptance runner: one line per criterion, nonzero exit when any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "liekit/actions.hpp"
#include "liekit/catalog.hpp"
#include "liekit/cli.hpp"
#include "liekit/deformation.hpp"
#include "liekit/derivations.hpp"
#include "liekit/group_deformation.hpp"
#include "liekit/obstructions.hpp"
#include "liekit/vector_field.hpp"
#include "support/oracles.hpp"

using namespace liekit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail.clear();
    if (!detail.empty()) detail += "; ";
    detail += what;
    pass = false;
  }
  void note(const std::string& what) {
    if (pass) detail = what;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::string fixture(const std::string& name) { return std::string(LIEKIT_FIXTURE_DIR) + "/" + name; }

bool has_tag(const std::vector<Finding>& fs, const std::string& tag) {
  for (const auto& f : fs)
    if (f.tag == tag) return true;
  return false;
}

Outcome catalog_validity() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& e : catalog_entries()) {
    const auto bad = jacobi_check(catalog_lookup(e.id));
    o.require(bad.empty(), e.id + " has " + std::to_string(bad.size()) + " Jacobi violations");
    ++count;
  }
  const LieAlgebra mr = mueller_roemer7();
  o.require(jacobi_check(mr).empty(), "mueller_roemer7 violates Jacobi");
  // [X1, Xk] = X(k+1) for k = 2..6
  for (std::size_t k = 1; k + 1 < 7; ++k)
    o.require(mr.basis_bracket(0, k) == unit_vector(7, k + 1), "mr7 bracket [X1,X" + std::to_string(k + 1) + "]");
  o.note(std::to_string(count) + " catalog algebras, all Jacobi sums vanish");
  return o;
}

Outcome derived_lengths() {
  Outcome o;
  const std::vector<std::size_t> expected{2, 3, 3, 4, 4};
  std::string got;
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto l = derived_length(st(m));
    const std::size_t brute = oracle::derived_length(oracle::eigen_basis(st_basis(m)));
    o.require(l.has_value() && *l == expected[m - 2], "st(" + std::to_string(m) + ") length mismatch");
    o.require(brute == expected[m - 2], "brute-force oracle disagrees for st(" + std::to_string(m) + ")");
    o.require(has_tag(convention_flags(st(m)), "derived_length_convention"),
              "st(" + std::to_string(m) + ") missing convention flag");
    got += (got.empty() ? "" : ",") + std::to_string(l.value_or(0));
  }
  o.note("l(st(2..6)) = [" + got + "], conflict with m+1 flagged");
  return o;
}

Outcome nilpotency_classes() {
  Outcome o;
  for (std::size_t m = 2; m <= 6; ++m) {
    const LieAlgebra g = st_prime(m);
    o.require(nilpotency_class(g) == oracle::graded_class_strict_upper(m), "class of n(" + std::to_string(m) + ")");
    const auto lcs = lower_central_series(g);
    for (std::size_t k = 0; k < lcs.terms.size(); ++k)
      o.require(lcs.terms[k].dim() == oracle::graded_lower_central_dim(m, k),
                "lower central term " + std::to_string(k) + " of n(" + std::to_string(m) + ")");
  }
  o.note("class(n(m)) = m-1 for m = 2..6, term dimensions match the grading");
  return o;
}

Outcome jacobson_equivalence() {
  Outcome o;
  std::vector<LieAlgebra> algebras;
  for (const auto& e : catalog_entries()) algebras.push_back(catalog_lookup(e.id));
  std::size_t checked = 0;
  auto check = [&](const LieAlgebra& g) {
    const LieAlgebra prime = subalgebra(g, commutator_ideal(g), g.name() + "'");
    o.require(predicates(g).is_solvable == predicates(prime).is_nilpotent, g.name());
    ++checked;
  };
  for (const auto& g : algebras) check(g);
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (std::size_t j = i; j < algebras.size(); ++j) check(direct_sum(algebras[i], algebras[j]));
  o.note(std::to_string(checked) + " algebras (catalog and pairwise sums)");
  return o;
}

Outcome mueller_roemer_obstruction() {
  Outcome o;
  const auto rep = contractibility_obstruction(mueller_roemer7());
  const auto& der = rep.derivations.basis;
  o.require(rep.verdict == ContractibilityVerdict::obstructed, "verdict is not obstructed");
  o.require(is_nil_family(der, 7), "derivation family is not nil");
  o.require(rep.flag.nil && !rep.flag.flag.empty(), "no flag certificate");
  // re-check the certificate: each derivation maps W(i+1) into W(i)
  const auto& flag = rep.flag.flag;
  o.require(flag.front().is_zero() && flag.back().dim() == 7, "flag does not run from 0 to V");
  for (std::size_t i = 0; i + 1 < flag.size(); ++i)
    for (const auto& d : der)
      for (const auto& w : flag[i + 1].basis_vectors()) o.require(flag[i].contains(d.apply(w)), "flag step broken");
  for (const auto& d : der) o.require(is_derivation(mueller_roemer7(), d), "basis element is not a derivation");
  for (std::size_t m = 2; m <= 3; ++m)
    o.require(derivation_algebra(abelian(m)).dim() == m * m, "der(abelian(" + std::to_string(m) + "))");
  o.note("dim der(mr7) = " + std::to_string(der.size()) + ", flag length " + std::to_string(flag.size() - 1) +
         ", obstructed; der(abelian(2,3)) = 4, 9");
  return o;
}

Outcome cocycle_and_profile() {
  Outcome o;
  o.require(cocycle_check(std::size_t{8}), "cocycle_check(8)");
  const auto e = cocycle_exponents(8);
  auto ex = [&](std::size_t i, std::size_t j) { return i == j ? 0 : e[i][j]; };
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i; j < 8; ++j)
      for (std::size_t k = j; k < 8; ++k) o.require(ex(i, j) + ex(j, k) == ex(i, k), "exponent table");
  const TransitionProfile sigma;
  for (double t : {-10.0, -1.0, -1e-12, 0.0}) o.require(sigma(t) == 1.0, "sigma(" + fmt(t) + ") != 1");
  for (double t : {1.0, 1.0 + 1e-12, 3.0}) o.require(sigma(t) == 0.0, "sigma(" + fmt(t) + ") != 0");
  o.note("cocycle identity for 1 <= i <= j <= k <= 8, profile boundaries exact");
  return o;
}

Outcome deformation_verification() {
  Outcome o;
  double worst = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto cat = concatenate(diag_contraction(n), st_deformation(n));
    for (const AlgebraDeformation& theta : {st_deformation(n), cat}) {
      const auto rep = verify_deformation(theta, 100, kDefaultSeed);
      const std::string tag = theta.label() + " n=" + std::to_string(n);
      o.require(rep.d1_residual == 0.0 && rep.d2_residual == 0.0, tag + " D1/D2");
      o.require(rep.endomorphism_residual <= 1e-9, tag + " endomorphism " + fmt(rep.endomorphism_residual));
      o.require(!exact_endomorphism_check(theta).has_value(), tag + " exact endomorphism");
      worst = std::max(worst, rep.endomorphism_residual);
    }
    for (std::size_t k = 0; k < cat.parent().dim(); ++k) o.require(cat.killed_at_one(k), "concat not trivial at 1");
    for (double f : cat.factors(1.0)) o.require(f == 0.0, "concat factor at 1 nonzero");
  }
  o.note("n = 2..5, D1/D2 exact, max endomorphism residual " + fmt(worst) + ", concatenation trivial at 1");
  return o;
}

Outcome group_deformation() {
  Outcome o;
  double hom = 0, mem = 0;
  const std::vector<GroupDeformation> families{group_contraction_st(3), bump_group_deformation(GroupTag::st, 3),
                                               bump_group_deformation(GroupTag::unipotent, 3)};
  for (const auto& d : families) {
    const auto rep = verify_deformation(d, 200, kDefaultSeed);
    o.require(rep.homomorphism_residual <= 1e-9, d.label() + " homomorphism " + fmt(rep.homomorphism_residual));
    o.require(rep.membership_residual <= 1e-9, d.label() + " membership " + fmt(rep.membership_residual));
    hom = std::max(hom, rep.homomorphism_residual);
    mem = std::max(mem, rep.membership_residual);
  }
  o.note("n=3 contraction and bumps: homomorphism " + fmt(hom) + ", det/triangularity " + fmt(mem));
  return o;
}

Outcome ball_actions() {
  Outcome o;
  auto compose = [](const Matrix& g, const Matrix& h) -> Matrix { return g * h; };
  double worst = 0;
  for (GroupTag tag : {GroupTag::st, GroupTag::unipotent}) {
    const Point c(Eigen::Vector3d(0.5, -1.0, 2.0));
    const BallAction b = BallAction::compact(tag, 3, 0.25, 0.75, c, 2.0);
    auto elem = [tag](std::mt19937_64& rng) { return random_group_element(tag, 3, rng); };
    auto points = [&c](std::mt19937_64& rng) { return random_shell_point(c, 0.0, 2.5, rng); };
    ActionUnderTest<Matrix> a{[&b](const Matrix& g, const Point& y) { return ball_action(b, g, y); }, compose,
                              Matrix::Identity(3, 3)};
    const auto rep = verify_action<Matrix>(a, elem, points, group_generators(tag, 3), 200, kDefaultSeed);
    const std::string name = to_string(tag) + "(3)";
    o.require(rep.composition_residual <= 1e-6, name + " composition " + fmt(rep.composition_residual));
    o.require(rep.identity_residual <= 1e-6, name + " identity element");
    o.require(rep.all_generators_effective(), name + " generator without witness");
    worst = std::max(worst, rep.composition_residual);
    for (std::uint64_t i = 0; i < 200; ++i) {
      auto rng = sample_rng(kDefaultSeed + 1, i);
      const Point y = points(rng);
      const Matrix g = elem(rng);
      if (!b.in_support(y)) o.require((ball_action(b, g, y).array() == y.array()).all(), name + " moves outside annulus");
    }
  }

  std::vector<BallAction> balls;
  balls.push_back(BallAction::compact(GroupTag::st, 3, 0.25, 0.75, Point::Zero(3), 1.0));
  balls.push_back(BallAction::compact(GroupTag::st, 3, 0.25, 0.75, Point(Eigen::Vector3d(3, 0, 0)), 1.0));
  balls.push_back(BallAction::compact(GroupTag::st, 3, 0.25, 0.75, Point(Eigen::Vector3d(0, 4, 0)), 1.5));
  const MultiBall mb = MultiBall::make(balls);
  using Tuple = std::vector<Matrix>;
  ActionUnderTest<Tuple> a;
  a.act = [&mb](const Tuple& g, const Point& y) { return multiball_action(mb, g, y); };
  a.compose = [](const Tuple& g, const Tuple& h) {
    Tuple r;
    for (std::size_t i = 0; i < g.size(); ++i) r.push_back(g[i] * h[i]);
    return r;
  };
  a.identity = Tuple(3, Matrix::Identity(3, 3));
  std::vector<Tuple> gens;
  for (std::size_t k = 0; k < 3; ++k)
    for (const auto& x : group_generators(GroupTag::st, 3)) {
      Tuple t(3, Matrix::Identity(3, 3));
      t[k] = x;
      gens.push_back(t);
    }
  auto st3 = [](std::mt19937_64& rng) { return random_group_element(GroupTag::st, 3, rng); };
  auto pick = [&mb](std::mt19937_64& rng) {
    const auto& b = mb.balls[rng() % 3];
    return random_shell_point(b.center(), 0.0, 1.2 * b.radius(), rng);
  };
  const auto rep = verify_action<Tuple>(
      a, [&](std::mt19937_64& rng) { return Tuple{st3(rng), st3(rng), st3(rng)}; }, pick, gens, 200, kDefaultSeed);
  o.require(rep.composition_residual <= 1e-6, "multiball composition " + fmt(rep.composition_residual));
  o.require(rep.identity_residual <= 1e-6, "multiball identity element");
  o.require(rep.all_generators_effective(), "multiball generator without witness");
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto rng = sample_rng(kDefaultSeed + 2, i);
    const Point y = pick(rng);
    const Tuple g{st3(rng), st3(rng), st3(rng)};
    bool inside = false;
    for (const auto& b : mb.balls) inside = inside || b.in_support(y);
    if (!inside) o.require((multiball_action(mb, g, y).array() == y.array()).all(), "multiball moves outside support");
  }
  worst = std::max(worst, rep.composition_residual);
  o.note("ST(3), U(3), multiball k=3: max composition residual " + fmt(worst) + ", all generators effective");
  return o;
}

Outcome projective_actions() {
  Outcome o;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto check = action_homomorphism_check(projective_action(n));
    const std::string name = "sl(" + std::to_string(n + 1) + ")";
    o.require(check.exact && check.violations.empty(), name + " not a homomorphism");
    o.require(!check.either_sign, name + " sign undetermined");
    const auto k = projective_kernel(n);
    o.require(k.kernel_is_scalars && k.rank == (n + 1) * (n + 1) - 1, name + " kernel");
    // independent: the kernel is spanned by the identity in row-major gl(n+1) coordinates
    RatVector id((n + 1) * (n + 1));
    for (std::size_t i = 0; i <= n; ++i) id[i * (n + 1) + i] = 1;
    o.require(k.kernel == Subspace::span({id}, id.size()), name + " kernel is not the scalars");
  }
  o.note("sl(2), sl(3), sl(4): exact with sign -1, kernels are the scalar matrices");
  return o;
}

Outcome commuting_families() {
  Outcome o;
  const Poly x1 = Poly::variable(2, 0), x2 = Poly::variable(2, 1), s = Poly::variable(1, 0);
  const Poly f = x1 * x1 + x2 * x2;
  const std::vector<Poly> u{Poly::constant(1, 1), s, s * s, s * s * s};
  const auto fam = commuting_family(f, hamiltonian_field(f), u);
  o.require(fam.commute, "family reports a nonzero bracket");
  o.require(fam.independent && fam.coefficient_rank == 4, "independence certificate");
  for (std::size_t a = 0; a < fam.fields.size(); ++a)
    for (std::size_t b = 0; b < fam.fields.size(); ++b)
      o.require(vf_bracket(fam.fields[a], fam.fields[b]).is_zero(), "bracket not exactly zero");
  double comm = 0, level = 0;
  std::size_t runs = 0;
  for (std::size_t a = 0; a < fam.fields.size(); ++a)
    for (std::size_t b = a + 1; b < fam.fields.size(); ++b)
      for (std::uint64_t i = 0; i < 3; ++i) {
        auto rng = sample_rng(kDefaultSeed, 10 * (4 * a + b) + i);
        const std::vector<double> p{uniform(rng, -1, 1), uniform(rng, -1, 1)};
        const double ss = uniform(rng, -0.5, 0.5), tt = uniform(rng, -0.5, 0.5);
        const auto check = flow_checks(fam.fields[a], fam.fields[b], p, ss, tt, 1e-3, f);
        o.require(check.ok, "flow failed");
        comm = std::max(comm, check.commutation_residual);
        level = std::max(level, check.level_residual);
        ++runs;
      }
  o.require(comm <= 1e-5, "commutation residual " + fmt(comm));
  o.require(level <= 1e-8, "level residual " + fmt(level));
  o.note("brackets exactly zero, rank 4; " + std::to_string(runs) + " flow pairs: commutation " + fmt(comm) +
         ", level " + fmt(level));
  return o;
}

Outcome obstruction_verdicts() {
  Outcome o;
  o.require(n_action_verdict(heisenberg(3), 1).verdict == ActionVerdict::impossible, "h3 on R^1");
  const LieAlgebra big = big_n(3);
  o.require(n_action_verdict(big, 2).verdict == ActionVerdict::degenerate, "N(3) in dimension 2");
  const auto rep = borderline_analysis(big);
  o.require(rep.last_term_central && rep.center.contains(rep.last_derived_term), "N(3) central certificate");
  o.require(rep.center_dim == 2, "dim C(N(3)) = " + std::to_string(rep.center_dim));
  const auto h = borderline_analysis(heisenberg(3));
  o.require(has_tag(h.verdicts, "no_central_obstruction") && !has_tag(h.verdicts, "degenerate"),
            "h3 borderline verdict");
  o.require(h.center_dim == 1 && h.last_derived_term.dim() == 1, "h3 dims");
  o.note("h3/R^1 impossible, N(3)/R^2 degenerate (dim C = 2), h3 no central obstruction (dim C = 1)");
  return o;
}

Outcome cover_action() {
  Outcome o;
  constexpr double pi = std::numbers::pi;
  double comp = 0, deck = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    auto rng = sample_rng(kDefaultSeed, i);
    const CoverElement a = random_cover_element(rng), b = random_cover_element(rng);
    const double th = uniform(rng, -2 * pi, 2 * pi);
    const CoverElement ab = cover_compose(a, b);
    comp = std::max(comp, std::abs(cover_apply(ab, th) - cover_apply(a, cover_apply(b, th))));
    deck = std::max(deck, std::abs(cover_apply(a, th + pi) - (cover_apply(a, th) + pi)));
  }
  o.require(comp <= 1e-9, "composition " + fmt(comp));
  o.require(deck <= 1e-9, "deck equivariance " + fmt(deck));
  const double c = std::cos(0.5), s = std::sin(0.5);
  const std::vector<CoverElement> gens{
      {(Eigen::Matrix2d() << c, -s, s, c).finished(), 0},
      {(Eigen::Matrix2d() << 2, 0, 0, 0.5).finished(), 0},
      {(Eigen::Matrix2d() << 1, 1, 0, 1).finished(), 0},
      {Eigen::Matrix2d::Identity(), 1},
  };
  bool moved = false;
  for (const auto& g : gens) {
    o.require(interval_action(g, 0.0) == 0.0 && interval_action(g, 1.0) == 1.0, "interval endpoints moved");
    moved = moved || std::abs(interval_action(g, 0.5) - 0.5) >= kEffectivenessThreshold;
  }
  o.require(moved, "no generator moves s = 1/2");
  o.note("composition " + fmt(comp) + ", deck " + fmt(deck) + ", interval endpoints fixed, midpoint moved");
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"act", "verify", "--scenario", fixture("ball_st3.json")},
      {"act", "verify", "--scenario", fixture("multiball_st3.json"), "--seed", "11"},
      {"act", "verify", "--scenario", fixture("cover.json")},
      {"deform", "verify", "--family", "concat", "--n", "4"},
      {"deform", "verify", "--family", "group-bump", "--group", "ST", "--n", "3"},
      {"vf", "verify", "--scenario", fixture("commuting_family.json")},
      {"vf", "verify", "--scenario", fixture("projective_sl3.json")},
      {"algebra", "analyze", "catalog:mr7"},
  };
  for (const auto& cmd : commands) {
    std::ostringstream a, b, ea, eb;
    const int ca = run(cmd, a, ea), cb = run(cmd, b, eb);
    o.require(ca == 0 && cb == 0, cmd[0] + " " + cmd[1] + " exited nonzero");
    o.require(!a.str().empty() && a.str() == b.str(), cmd[0] + " " + cmd[1] + " output differs");
  }
  o.note(std::to_string(commands.size()) + " commands, byte-identical reports");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"catalog validity", catalog_validity},
      {"derived lengths", derived_lengths},
      {"nilpotency classes", nilpotency_classes},
      {"Jacobson equivalence", jacobson_equivalence},
      {"Mueller-Roemer obstruction", mueller_roemer_obstruction},
      {"cocycle identity and profile", cocycle_and_profile},
      {"deformation verification", deformation_verification},
      {"group deformation", group_deformation},
      {"ball actions", ball_actions},
      {"projective actions", projective_actions},
      {"commuting families", commuting_families},
      {"obstruction verdicts", obstruction_verdicts},
      {"cover action", cover_action},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
