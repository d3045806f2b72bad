#include "liekit/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <numbers>
#include <sstream>

#include "liekit/catalog.hpp"
#include "liekit/io.hpp"

namespace liekit {

namespace {

/// A verification that ran to completion; `ok` selects exit code 0 or 1.
struct Outcome {
  Json report;
  bool ok = true;
};

std::uint64_t env_seed() {
  const char* v = std::getenv(kSeedEnvVar);
  if (v == nullptr || *v == '\0') return kDefaultSeed;
  const std::string s(v);
  if (s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError(std::string(kSeedEnvVar) + " must be a nonnegative integer");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw InputError(std::string(kSeedEnvVar) + " is out of range");
  }
}

Json header(const std::string& command, std::uint64_t seed) {
  return Json{{"tool", "liekit"}, {"version", kToolVersion}, {"command", command}, {"seed", seed}};
}

template <class T>
T field_or(const Json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc[key].get<T>();
  } catch (const Json::exception&) {
    throw InputError(std::string("scenario field '") + key + "' has the wrong type");
  }
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("scenario: missing field '") + key + "'");
  return doc[key];
}

Point point_from_json(const Json& v) {
  if (!v.is_array()) throw InputError("scenario: expected a point as an array of numbers");
  Point p(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) throw InputError("scenario: point coordinates must be numbers");
    p[static_cast<Eigen::Index>(i)] = v[i].get<double>();
  }
  return p;
}

std::vector<double> std_point(const Json& v) {
  const Point p = point_from_json(v);
  return {p.data(), p.data() + p.size()};
}

LieAlgebra resolve_algebra(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog_lookup(source.substr(prefix.size()));
  return load_algebra_file(source);
}

Json jacobi_violations_json(const LieAlgebra& g, const std::vector<std::array<std::size_t, 3>>& bad) {
  Json list = Json::array();
  for (const auto& t : bad) {
    list.push_back(Json{{"i", g.basis_names()[t[0]]}, {"j", g.basis_names()[t[1]]}, {"k", g.basis_names()[t[2]]}});
  }
  return list;
}

// ---------------------------------------------------------------------------
// algebra
// ---------------------------------------------------------------------------

Outcome algebra_analyze(const std::string& source, std::uint64_t seed) {
  const LieAlgebra g = resolve_algebra(source);
  Outcome o{header("algebra analyze", seed)};
  o.report["algebra"] = Json{{"name", g.name()}, {"dim", g.dim()}, {"basis", g.basis_names()}};
  const auto bad = jacobi_check(g);
  o.report["jacobi_violations"] = jacobi_violations_json(g, bad);
  if (!bad.empty()) {
    o.report["passed"] = false;
    o.ok = false;
    return o;
  }
  const auto p = predicates(g);
  o.report["solvable"] = p.is_solvable;
  o.report["nilpotent"] = p.is_nilpotent;
  o.report["derived_series"] = series_to_json(derived_series(g));
  o.report["lower_central_series"] = series_to_json(lower_central_series(g));
  o.report["derived_length"] = optional_count(derived_length(g));
  o.report["nilpotency_class"] = optional_count(nilpotency_class(g));
  o.report["center"] = subspace_to_json(center(g));
  o.report["contractibility"] = contractibility_to_json(contractibility_obstruction(g));
  if (auto c = find_graded_contraction(g)) {
    o.report["graded_contraction"] = deformation_descriptor(*c);
  } else {
    o.report["graded_contraction"] = nullptr;
  }
  Json findings = Json::array();
  for (const auto& f : convention_flags(g)) findings.push_back(Json{{"tag", f.tag}, {"message", f.message}});
  o.report["findings"] = findings;
  o.report["passed"] = true;
  return o;
}

Outcome algebra_obstruct(const std::string& source, std::size_t dim, std::uint64_t seed) {
  const LieAlgebra g = resolve_algebra(source);
  Outcome o{header("algebra obstruct", seed)};
  o.report["algebra"] = Json{{"name", g.name()}, {"dim", g.dim()}, {"basis", g.basis_names()}};
  const auto bad = jacobi_check(g);
  o.report["jacobi_violations"] = jacobi_violations_json(g, bad);
  if (!bad.empty()) {
    o.report["passed"] = false;
    o.ok = false;
    return o;
  }
  const auto verdict = n_action_verdict(g, dim);
  o.report["manifold_dim"] = dim;
  o.report["verdict"] = to_string(verdict.verdict);
  o.report["reason"] = verdict.reason;
  o.report["obstruction"] = obstruction_to_json(obstruction_report(g));
  Json findings = Json::array();
  for (const auto& f : convention_flags(g)) findings.push_back(Json{{"tag", f.tag}, {"message", f.message}});
  o.report["findings"] = findings;
  o.report["passed"] = true;
  return o;
}

// ---------------------------------------------------------------------------
// deform
// ---------------------------------------------------------------------------

Outcome deform_verify(const std::string& family, std::size_t n, const std::string& group, std::size_t samples,
                      std::uint64_t seed) {
  Outcome o{header("deform verify", seed)};
  o.report["family"] = family;
  o.report["n"] = n;
  if (family == "group-contraction" || family == "group-bump") {
    const GroupTag tag = parse_group_tag(group);
    if (family == "group-contraction" && tag != GroupTag::st) {
      throw InputError("group-contraction is defined for the ST group only");
    }
    const GroupDeformation d = family == "group-contraction" ? group_contraction_st(n) : bump_group_deformation(tag, n);
    const auto rep = verify_deformation(d, samples, seed);
    o.report["deformation"] = deformation_descriptor(d);
    o.report["checks"] = deformation_report_to_json(rep);
    o.ok = rep.passed();
    o.report["passed"] = o.ok;
    return o;
  }
  AlgebraDeformation d = [&] {
    if (family == "st") return st_deformation(n);
    if (family == "st-prime") return st_prime_deformation(n);
    if (family == "concat") return concatenate(diag_contraction(n), st_deformation(n));
    throw InputError("unknown deformation family '" + family + "' (st, st-prime, concat, group-contraction, group-bump)");
  }();
  const auto rep = verify_deformation(d, samples, seed);
  const auto failure = exact_endomorphism_check(d);
  o.report["deformation"] = deformation_descriptor(d);
  o.report["checks"] = deformation_report_to_json(rep);
  if (failure) {
    o.report["exact_failure"] = Json{{"i", failure->i + 1}, {"j", failure->j + 1}, {"k", failure->k + 1},
                                     {"at_time", to_string(failure->at_time)}};
  }
  o.ok = rep.passed() && !failure;
  if (family != "st") {
    Json killed = Json::array();
    bool all = true;
    for (std::size_t k = 0; k < d.parent().dim(); ++k) {
      const bool z = d.killed_at_one(k);
      all = all && z;
      killed.push_back(z);
    }
    o.report["trivial_at_one"] = killed;
    o.ok = o.ok && all;
  }
  o.report["passed"] = o.ok;
  return o;
}

// ---------------------------------------------------------------------------
// act
// ---------------------------------------------------------------------------

GroupTag scenario_group(const Json& sc) { return parse_group_tag(field_or<std::string>(sc, "group", "ST")); }

std::size_t scenario_n(const Json& sc, std::size_t fallback) {
  const auto n = field_or<std::size_t>(sc, "n", fallback);
  if (n < 2 || n > 8) throw InputError("scenario: n must lie in 2..8");
  return n;
}

BallAction ball_from_json(const Json& b, GroupTag group, std::size_t n) {
  const std::string variant = field_or<std::string>(b, "variant", "compact");
  Point center = b.contains("center") ? point_from_json(b["center"]) : Point::Zero(static_cast<Eigen::Index>(n));
  if (static_cast<std::size_t>(center.size()) != n) throw InputError("scenario: ball center has the wrong dimension");
  const double radius = field_or<double>(b, "radius", 1.0);
  if (!(radius > 0)) throw InputError("scenario: ball radius must be positive");
  if (variant == "radial") {
    if (group != GroupTag::st) throw InputError("scenario: the radial ball variant uses the ST group");
    return BallAction::radial(n, std::move(center), radius);
  }
  if (variant != "compact") throw InputError("scenario: unknown ball variant '" + variant + "'");
  const auto annulus = field_or<std::vector<double>>(b, "annulus", {0.25, 0.75});
  if (annulus.size() != 2) throw InputError("scenario: annulus must be [r0, r1]");
  return BallAction::compact(group, n, annulus[0], annulus[1], std::move(center), radius);
}

std::vector<Eigen::Matrix2d> sl2_generators() {
  Eigen::Matrix2d rot, diag, shear;
  rot << std::cos(0.5), -std::sin(0.5), std::sin(0.5), std::cos(0.5);
  diag << 2.0, 0.0, 0.0, 0.5;
  shear << 1.0, 1.0, 0.0, 1.0;
  return {rot, diag, shear};
}

std::vector<CoverElement> cover_generators() {
  std::vector<CoverElement> gens;
  for (const auto& a : sl2_generators()) gens.push_back(CoverElement{a, 0});
  gens.push_back(CoverElement{Eigen::Matrix2d::Identity(), 1});
  return gens;
}

Outcome act_verify(const Json& sc, std::uint64_t seed) {
  const std::string kind = require(sc, "kind").is_string() ? sc["kind"].get<std::string>() : "";
  const auto samples = field_or<std::size_t>(sc, "samples", 200);
  const double tol = field_or<double>(sc, "tolerance", 1e-6);
  if (!(tol > 0)) throw InputError("scenario: tolerance must be positive");
  Outcome o{header("act verify", seed)};
  o.report["kind"] = kind;
  Json extra = Json::object();
  bool extra_ok = true;
  ActionReport rep;

  if (kind == "sphere" || kind == "suspension" || kind == "ball") {
    const GroupTag group = scenario_group(sc);
    const std::size_t n = scenario_n(sc, 3);
    o.report["group"] = to_string(group);
    o.report["n"] = n;
    auto elem = [group, n](std::mt19937_64& rng) { return random_group_element(group, n, rng); };
    const auto gens = group_generators(group, n);
    ActionUnderTest<Matrix> a;
    a.compose = [](const Matrix& g, const Matrix& h) -> Matrix { return g * h; };
    a.identity = Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    if (kind == "sphere") {
      a.act = [](const Matrix& g, const Point& x) { return sphere_action(g, x); };
      rep = verify_action<Matrix>(
          a, elem, [n](std::mt19937_64& rng) { return random_unit_vector(n, rng); }, gens, samples, seed, tol);
    } else if (kind == "suspension") {
      const std::string family = field_or<std::string>(sc, "family", "bump");
      if (family != "bump" && family != "contraction") throw InputError("scenario: family must be bump or contraction");
      if (family == "contraction" && group != GroupTag::st) {
        throw InputError("scenario: the contraction family is defined for the ST group only");
      }
      const GroupDeformation lambda = family == "bump" ? bump_group_deformation(group, n) : group_contraction_st(n);
      o.report["deformation"] = deformation_descriptor(lambda);
      a.act = [lambda, n](const Matrix& g, const Point& xt) {
        const auto [x, t] = suspension_act(lambda, g, xt.head(static_cast<Eigen::Index>(n)), xt[static_cast<Eigen::Index>(n)]);
        Point r(xt.size());
        r << x, t;
        return r;
      };
      rep = verify_action<Matrix>(
          a, elem,
          [n](std::mt19937_64& rng) {
            Point r(static_cast<Eigen::Index>(n + 1));
            r << random_unit_vector(n, rng), uniform(rng, -0.5, 1.5);
            return r;
          },
          gens, samples, seed, tol);
    } else {
      const BallAction ball = ball_from_json(sc, group, n);
      o.report["variant"] = to_string(ball.variant());
      o.report["annulus"] = Json::array({ball.r0(), ball.r1()});
      o.report["center"] = point_to_json(ball.center());
      o.report["radius"] = ball.radius();
      a.act = [ball](const Matrix& g, const Point& y) { return ball_action(ball, g, y); };
      const double reach = ball.variant() == BallVariant::compact ? 1.25 : 2.0;
      auto points = [&ball, reach](std::mt19937_64& rng) {
        return random_shell_point(ball.center(), 0.0, reach * ball.radius(), rng);
      };
      rep = verify_action<Matrix>(a, elem, points, gens, samples, seed, tol);
      std::size_t outside = 0, outside_moved = 0, witnesses_outside = 0;
      for (std::size_t i = 0; i < samples; ++i) {
        auto rng = sample_rng(seed, samples + i);
        const Point y = points(rng);
        if (ball.in_support(y)) continue;
        ++outside;
        const Matrix g = elem(rng);
        if (!(ball_action(ball, g, y).array() == y.array()).all()) ++outside_moved;
      }
      for (const auto& w : rep.witnesses) {
        if (w.found && !ball.in_support(w.point)) ++witnesses_outside;
      }
      extra["outside_support_samples"] = outside;
      extra["outside_support_moved"] = outside_moved;
      extra["witnesses_outside_support"] = witnesses_outside;
      extra_ok = outside_moved == 0 && witnesses_outside == 0;
    }
  } else if (kind == "multiball") {
    const GroupTag group = scenario_group(sc);
    const std::size_t n = scenario_n(sc, 3);
    o.report["group"] = to_string(group);
    o.report["n"] = n;
    const Json& list = require(sc, "balls");
    if (!list.is_array() || list.empty()) throw InputError("scenario: balls must be a nonempty array");
    std::vector<BallAction> balls;
    for (const auto& b : list) balls.push_back(ball_from_json(b, group, n));
    const MultiBall mb = MultiBall::make(std::move(balls));
    const std::size_t k = mb.balls.size();
    o.report["balls"] = k;
    using Tuple = std::vector<Matrix>;
    ActionUnderTest<Tuple> a;
    a.act = [mb](const Tuple& g, const Point& y) { return multiball_action(mb, g, y); };
    a.compose = [](const Tuple& g, const Tuple& h) {
      Tuple r;
      for (std::size_t i = 0; i < g.size(); ++i) r.push_back(g[i] * h[i]);
      return r;
    };
    const Matrix id = Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    a.identity = Tuple(k, id);
    std::vector<Tuple> gens;
    for (std::size_t b = 0; b < k; ++b) {
      for (const auto& x : group_generators(group, n)) {
        Tuple t(k, id);
        t[b] = x;
        gens.push_back(std::move(t));
      }
    }
    rep = verify_action<Tuple>(
        a,
        [group, n, k](std::mt19937_64& rng) {
          Tuple t;
          for (std::size_t i = 0; i < k; ++i) t.push_back(random_group_element(group, n, rng));
          return t;
        },
        [&mb, k](std::mt19937_64& rng) {
          const auto b = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
          return random_shell_point(mb.balls[b].center(), 0.0, 1.25 * mb.balls[b].radius(), rng);
        },
        gens, samples, seed, tol);
  } else if (kind == "cover" || kind == "interval") {
    ActionUnderTest<CoverElement> a;
    a.compose = cover_compose;
    a.identity = cover_identity();
    const auto gens = cover_generators();
    if (kind == "cover") {
      a.act = [](const CoverElement& e, const Point& x) { return Point::Constant(1, cover_apply(e, x[0])); };
      rep = verify_action<CoverElement>(
          a, random_cover_element,
          [](std::mt19937_64& rng) { return Point::Constant(1, uniform(rng, -2 * std::numbers::pi, 2 * std::numbers::pi)); },
          gens, samples, seed, tol);
      double deck = 0;
      for (std::size_t i = 0; i < samples; ++i) {
        auto rng = sample_rng(seed, samples + i);
        const CoverElement e = random_cover_element(rng);
        const double th = uniform(rng, -2 * std::numbers::pi, 2 * std::numbers::pi);
        deck = std::max(deck, std::abs(cover_apply(e, th + std::numbers::pi) - cover_apply(e, th) - std::numbers::pi));
      }
      extra["deck_equivariance_residual"] = deck;
      extra_ok = deck <= tol;
    } else {
      a.act = [](const CoverElement& e, const Point& s) { return Point::Constant(1, interval_action(e, s[0])); };
      rep = verify_action<CoverElement>(
          a, random_cover_element, [](std::mt19937_64& rng) { return Point::Constant(1, uniform(rng, 0.0, 1.0)); },
          gens, samples, seed, tol);
      bool endpoints = true, midpoint_moved = false;
      for (std::size_t i = 0; i < samples; ++i) {
        auto rng = sample_rng(seed, samples + i);
        const CoverElement e = random_cover_element(rng);
        endpoints = endpoints && interval_action(e, 0.0) == 0.0 && interval_action(e, 1.0) == 1.0;
      }
      for (const auto& g : gens) {
        endpoints = endpoints && interval_action(g, 0.0) == 0.0 && interval_action(g, 1.0) == 1.0;
        midpoint_moved = midpoint_moved || std::abs(interval_action(g, 0.5) - 0.5) >= kEffectivenessThreshold;
      }
      extra["endpoints_fixed"] = endpoints;
      extra["midpoint_moved"] = midpoint_moved;
      extra_ok = endpoints && midpoint_moved;
    }
  } else if (kind == "disk") {
    const std::size_t n = scenario_n(sc, 2);
    o.report["n"] = n;
    ActionUnderTest<CoverElement> a;
    a.compose = cover_compose;
    a.identity = cover_identity();
    a.act = [](const CoverElement& e, const Point& y) { return disk_action(e, y); };
    auto points = [n](std::mt19937_64& rng) { return Point(uniform(rng, 0.0, 1.0) * random_unit_vector(n, rng)); };
    rep = verify_action<CoverElement>(a, random_cover_element, points, cover_generators(), samples, seed, tol);
    bool boundary = true;
    for (std::size_t i = 0; i < samples; ++i) {
      auto rng = sample_rng(seed, samples + i);
      const CoverElement e = random_cover_element(rng);
      const Point y = random_unit_vector(n, rng);
      const Point z = y / y.norm();
      boundary = boundary && (disk_action(e, z).array() == z.array()).all();
    }
    extra["boundary_fixed"] = boundary;
    extra_ok = boundary;
  } else {
    throw InputError("scenario: unknown action kind '" + kind +
                     "' (sphere, suspension, ball, multiball, cover, interval, disk)");
  }

  o.report["checks"] = action_report_to_json(rep);
  o.report["extra_checks"] = extra;
  o.ok = rep.passed() && extra_ok;
  o.report["passed"] = o.ok;
  return o;
}

// ---------------------------------------------------------------------------
// vf
// ---------------------------------------------------------------------------

Outcome vf_verify(const Json& sc, std::uint64_t seed) {
  const std::string kind = require(sc, "kind").is_string() ? sc["kind"].get<std::string>() : "";
  Outcome o{header("vf verify", seed)};
  o.report["kind"] = kind;
  if (kind == "commuting_family") {
    const Poly f = poly_from_json(require(sc, "f"), 2);
    const PolyVectorField x = sc.contains("field") ? field_from_json(sc["field"], 2) : hamiltonian_field(f);
    std::vector<Poly> u;
    const Json& us = require(sc, "u");
    if (!us.is_array() || us.empty()) throw InputError("scenario: u must be a nonempty array");
    for (const auto& p : us) u.push_back(poly_from_json(p, 1));
    const CommutingFamily fam = commuting_family(f, x, u);
    o.report["f"] = poly_to_json(f);
    Json fields = Json::array();
    for (const auto& l : fam.fields) {
      Json comps = Json::array();
      for (const auto& c : l.components()) comps.push_back(poly_to_json(c));
      fields.push_back(comps);
    }
    o.report["fields"] = fields;
    o.report["commute"] = fam.commute;
    o.report["independent"] = fam.independent;
    o.report["coefficient_rank"] = fam.coefficient_rank;
    o.ok = fam.commute && fam.independent;
    // Grid points where the base field is nonzero; the family acts effectively near each.
    {
      constexpr int kGrid = 9;
      const double extent = field_or<double>(sc, "witness_box", 1.0);
      Json points = Json::array();
      std::size_t nonvanishing = 0;
      for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
          const std::vector<double> p{extent * (2.0 * i / (kGrid - 1) - 1), extent * (2.0 * j / (kGrid - 1) - 1)};
          const auto v = x.evaluate(p);
          if (std::max(std::abs(v[0]), std::abs(v[1])) <= 1e-12) continue;
          ++nonvanishing;
          if (points.size() < 3) points.push_back(Json(p));
        }
      }
      o.report["support_witnesses"] =
          Json{{"grid_points", kGrid * kGrid}, {"nonvanishing", nonvanishing}, {"examples", points}};
    }
    if (sc.contains("flow")) {
      const Json& fl = sc["flow"];
      const double h = field_or<double>(fl, "h", 1e-3);
      const double s = field_or<double>(fl, "s", 0.3), t = field_or<double>(fl, "t", 0.3);
      if (!(h > 0)) throw InputError("scenario: flow step must be positive");
      const double comm_tol = field_or<double>(fl, "commutation_tolerance", 1e-5);
      const double level_tol = field_or<double>(fl, "level_tolerance", 1e-8);
      const auto samples = field_or<std::size_t>(fl, "samples", 10);
      const double box = field_or<double>(fl, "box", 1.0);
      double comm = 0, level = 0;
      bool flows_ok = true;
      for (std::size_t i = 0; i < samples; ++i) {
        auto rng = sample_rng(seed, i);
        const std::vector<double> p{uniform(rng, -box, box), uniform(rng, -box, box)};
        for (std::size_t a = 0; a < fam.fields.size(); ++a) {
          for (std::size_t b = a + 1; b < fam.fields.size(); ++b) {
            const FlowCheck c = flow_checks(fam.fields[a], fam.fields[b], p, s, t, h, f);
            flows_ok = flows_ok && c.ok;
            comm = std::max(comm, c.commutation_residual);
            level = std::max(level, c.level_residual);
          }
        }
      }
      o.report["flow"] = Json{{"samples", samples},     {"s", s},
                              {"t", t},                 {"h", h},
                              {"commutation_residual", comm}, {"commutation_tolerance", comm_tol},
                              {"level_residual", level},      {"level_tolerance", level_tol},
                              {"integration_ok", flows_ok}};
      o.ok = o.ok && flows_ok && comm <= comm_tol && level <= level_tol;
    }
  } else if (kind == "projective") {
    const auto n = field_or<std::size_t>(sc, "n", 2);
    if (n < 1 || n > 5) throw InputError("scenario: n must lie in 1..5");
    const VFAction rho = projective_action(n);
    const HomomorphismCheck hc = action_homomorphism_check(rho);
    const ProjectiveKernel pk = projective_kernel(n);
    o.report["n"] = n;
    o.report["algebra"] = rho.algebra.name();
    o.report["homomorphism"] = Json{{"exact", hc.exact}, {"sign", hc.sign}, {"violations", hc.violations.size()}};
    o.report["kernel"] = Json{{"rank", pk.rank}, {"kernel_dim", pk.kernel.dim()}, {"scalars", pk.kernel_is_scalars}};
    const auto samples = field_or<std::size_t>(sc, "samples", 100);
    Json dims = Json::object();
    std::map<std::size_t, std::size_t> histogram;
    std::size_t near = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      auto rng = sample_rng(seed, i);
      std::vector<double> p(n);
      for (auto& c : p) c = uniform(rng, -2.0, 2.0);
      const auto od = orbit_dimension(rho, p);
      ++histogram[od.dim];
      near += od.near_degenerate ? 1 : 0;
    }
    for (const auto& [d, c] : histogram) dims[std::to_string(d)] = c;
    o.report["orbit_dimensions"] = Json{{"samples", samples}, {"histogram", dims}, {"near_degenerate", near}};
    o.ok = hc.exact && pk.kernel_is_scalars;
  } else {
    throw InputError("scenario: unknown vector field kind '" + kind + "' (commuting_family, projective)");
  }
  o.report["passed"] = o.ok;
  return o;
}

/// CSV trajectory: header "t,x1,...,xn", one row per step.
Outcome vf_flow(const Json& sc, std::string& csv) {
  const auto nvars = require(sc, "nvars").get<std::size_t>();
  if (nvars == 0) throw InputError("scenario: nvars must be positive");
  const PolyVectorField v = field_from_json(require(sc, "field"), nvars);
  const std::vector<double> p = std_point(require(sc, "point"));
  if (p.size() != nvars) throw InputError("scenario: point has the wrong dimension");
  const double duration = field_or<double>(sc, "duration", 1.0);
  const double h = field_or<double>(sc, "step", 1e-2);
  if (!(h > 0)) throw InputError("scenario: step must be positive");
  const Trajectory tr = flow(v, p, duration, h);
  std::ostringstream os;
  os << "t";
  for (std::size_t i = 0; i < nvars; ++i) os << ",x" << i + 1;
  os << "\n";
  char buf[40];
  for (std::size_t r = 0; r < tr.points.size(); ++r) {
    std::snprintf(buf, sizeof buf, "%.17g", tr.times[r]);
    os << buf;
    for (double x : tr.points[r]) {
      std::snprintf(buf, sizeof buf, "%.17g", x);
      os << "," << buf;
    }
    os << "\n";
  }
  csv = os.str();
  Outcome o;
  o.ok = tr.ok;
  return o;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Lie algebra invariants, deformations and action checks"};
  app.name("liekit");
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed_flag;
  std::string out_path;
  app.add_option("--seed", seed_flag, "random seed (default: $" + std::string(kSeedEnvVar) + " or built-in)");
  app.add_option("--out", out_path, "write the report to this file instead of stdout");

  auto* catalog_cmd = app.add_subcommand("catalog", "catalog of built-in algebras")->require_subcommand(1);
  auto* catalog_list = catalog_cmd->add_subcommand("list", "list catalog identifiers");

  auto* algebra_cmd = app.add_subcommand("algebra", "structure of a Lie algebra")->require_subcommand(1);
  std::string source;
  std::size_t dim = 0;
  auto* analyze = algebra_cmd->add_subcommand("analyze", "series, center, derivations and contractibility");
  analyze->add_option("input", source, "JSON file or catalog:NAME")->required();
  auto* obstruct = algebra_cmd->add_subcommand("obstruct", "Epstein-Thurston verdict for a manifold dimension");
  obstruct->add_option("input", source, "JSON file or catalog:NAME")->required();
  obstruct->add_option("--dim", dim, "manifold dimension")->required();

  auto* deform_cmd = app.add_subcommand("deform", "deformation families")->require_subcommand(1);
  auto* deform_verify_cmd = deform_cmd->add_subcommand("verify", "check deformation axioms");
  std::string family, group = "ST";
  std::size_t n = 0, samples = 100;
  deform_verify_cmd->add_option("--family", family, "st, st-prime, concat, group-contraction, group-bump")->required();
  deform_verify_cmd->add_option("--n", n, "matrix size")->required();
  deform_verify_cmd->add_option("--group", group, "ST or U (group families)");
  deform_verify_cmd->add_option("--samples", samples, "number of random samples");

  std::string scenario;
  auto* act_cmd = app.add_subcommand("act", "group actions")->require_subcommand(1);
  auto* act_verify_cmd = act_cmd->add_subcommand("verify", "check action axioms and effectiveness");
  act_verify_cmd->add_option("--scenario", scenario, "scenario JSON")->required();

  auto* vf_cmd = app.add_subcommand("vf", "polynomial vector fields")->require_subcommand(1);
  auto* vf_verify_cmd = vf_cmd->add_subcommand("verify", "exact certificates");
  vf_verify_cmd->add_option("--scenario", scenario, "scenario JSON")->required();
  auto* vf_flow_cmd = vf_cmd->add_subcommand("flow", "integrate a field and print a CSV trajectory");
  vf_flow_cmd->add_option("--scenario", scenario, "scenario JSON")->required();

  for (auto* sub : {analyze, obstruct, deform_verify_cmd, act_verify_cmd, vf_verify_cmd, vf_flow_cmd}) {
    sub->add_option("--seed", seed_flag, "random seed");
    sub->add_option("--out", out_path, "output file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "liekit: " << e.what() << "\n";
    return 2;
  }

  try {
    if (catalog_list->parsed()) {
      std::ostringstream os;
      for (const auto& e : catalog_entries()) os << e.id << "\t" << e.description << "\n";
      emit(os.str(), out_path, out);
      return 0;
    }

    Json scenario_doc;
    if (!scenario.empty()) scenario_doc = read_json_file(scenario);
    if (!scenario.empty() && !scenario_doc.is_object()) throw InputError("scenario must be a JSON object");
    std::uint64_t seed = env_seed();
    if (scenario_doc.contains("seed")) seed = field_or<std::uint64_t>(scenario_doc, "seed", seed);
    if (seed_flag) seed = *seed_flag;

    Outcome o;
    if (analyze->parsed()) {
      o = algebra_analyze(source, seed);
    } else if (obstruct->parsed()) {
      o = algebra_obstruct(source, dim, seed);
    } else if (deform_verify_cmd->parsed()) {
      if (n < 2 || n > 8) throw InputError("--n must lie in 2..8");
      o = deform_verify(family, n, group, samples, seed);
    } else if (act_verify_cmd->parsed()) {
      o = act_verify(scenario_doc, seed);
    } else if (vf_verify_cmd->parsed()) {
      o = vf_verify(scenario_doc, seed);
    } else if (vf_flow_cmd->parsed()) {
      std::string csv;
      o = vf_flow(scenario_doc, csv);
      emit(csv, out_path, out);
      if (!o.ok) err << "liekit: trajectory left the finite range\n";
      return o.ok ? 0 : 1;
    }
    emit(dump_report(o.report), out_path, out);
    return o.ok ? 0 : 1;
  } catch (const InputError& e) {
    err << "liekit: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "liekit: invalid input: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace liekit
