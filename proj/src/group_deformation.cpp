#include "liekit/group_deformation.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "liekit/sampling.hpp"

namespace liekit {

std::string to_string(GroupTag tag) { return tag == GroupTag::st ? "ST" : "U"; }

GroupTag parse_group_tag(const std::string& text) {
  if (text == "ST" || text == "st") return GroupTag::st;
  if (text == "U" || text == "u") return GroupTag::unipotent;
  throw InputError("unknown group tag: " + text);
}

double GroupStage::value(double t) const {
  const double v = TransitionProfile{}(scale * t + shift);
  return rising ? 1.0 - v : v;
}

GroupDeformation::GroupDeformation(std::string label, GroupTag group, std::size_t n, GroupFamilyKind kind,
                                   std::vector<GroupStage> stages, double middle_begin, double middle_end)
    : label_(std::move(label)),
      group_(group),
      n_(n),
      kind_(kind),
      stages_(std::move(stages)),
      middle_begin_(middle_begin),
      middle_end_(middle_end) {
  if (n < 2) throw InputError("group deformation: n must be at least 2");
}

double GroupDeformation::scaling(double t) const {
  double s = 1.0;
  for (const auto& st : stages_) {
    if (st.kind == GroupStageKind::off_diagonal_scaling) s *= st.value(t);
  }
  return s;
}

double GroupDeformation::power(double t) const {
  double rho = 1.0;
  for (const auto& st : stages_) {
    if (st.kind == GroupStageKind::diagonal_power) rho *= st.value(t);
  }
  return rho;
}

Eigen::MatrixXd GroupDeformation::apply(double t, const Eigen::MatrixXd& g) const {
  const double s = scaling(t);
  const double rho = power(t);
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i, i) = rho == 1.0 ? g(i, i) : std::pow(g(i, i), rho);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      out(i, j) = s == 1.0 ? g(i, j) : std::pow(s, static_cast<double>(j - i)) * g(i, j);
    }
  }
  return out;
}

std::vector<double> GroupDeformation::breakpoints() const {
  std::vector<double> b;
  for (const auto& st : stages_) {
    b.push_back(-st.shift / st.scale);
    b.push_back((1 - st.shift) / st.scale);
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

GroupDeformation group_contraction_st(std::size_t n) {
  return GroupDeformation("contraction_ST" + std::to_string(n), GroupTag::st, n, GroupFamilyKind::contraction,
                          {{GroupStageKind::off_diagonal_scaling, 2.0, 0.0, false},
                           {GroupStageKind::diagonal_power, 2.0, -1.0, false}});
}

GroupDeformation bump_group_deformation(GroupTag group, std::size_t n) {
  if (group == GroupTag::unipotent) {
    return GroupDeformation("bump_U" + std::to_string(n), group, n, GroupFamilyKind::bump,
                            {{GroupStageKind::off_diagonal_scaling, 3.0, 0.0, true},
                             {GroupStageKind::off_diagonal_scaling, 3.0, -2.0, false}},
                            1.0 / 3.0, 2.0 / 3.0);
  }
  return GroupDeformation("bump_ST" + std::to_string(n), group, n, GroupFamilyKind::bump,
                          {{GroupStageKind::diagonal_power, 5.0, 0.0, true},
                           {GroupStageKind::off_diagonal_scaling, 5.0, -1.0, true},
                           {GroupStageKind::off_diagonal_scaling, 5.0, -3.0, false},
                           {GroupStageKind::diagonal_power, 5.0, -4.0, false}},
                          0.4, 0.6);
}

Eigen::MatrixXd random_group_element(GroupTag group, std::size_t n, std::mt19937_64& rng) {
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, m);
  double det = 1.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    g(i, i) = group == GroupTag::unipotent ? 1.0 : uniform(rng, 0.5, 2.0);
    det *= g(i, i);
    for (Eigen::Index j = i + 1; j < m; ++j) g(i, j) = uniform(rng, -2.0, 2.0);
  }
  if (group == GroupTag::st) {
    const double r = std::pow(det, -1.0 / static_cast<double>(n));
    for (Eigen::Index i = 0; i < m; ++i) g(i, i) *= r;
  }
  return g;
}

double group_membership_residual(GroupTag group, const Eigen::MatrixXd& g) {
  double worst = 0.0;
  double det = 1.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) worst = std::max(worst, std::abs(g(i, j)));
    if (g(i, i) <= 0.0) worst = std::max(worst, 1.0 - g(i, i));
    if (group == GroupTag::unipotent) worst = std::max(worst, std::abs(g(i, i) - 1.0));
    det *= g(i, i);
  }
  return std::max(worst, std::abs(det - 1.0));
}

std::vector<Eigen::MatrixXd> group_generators(GroupTag group, std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  std::vector<Eigen::MatrixXd> out;
  if (group == GroupTag::st) {
    for (Eigen::Index i = 0; i + 1 < m; ++i) {
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
      h(i, i) = 1.0;
      h(i + 1, i + 1) = -1.0;
      out.push_back(h.exp());
    }
  }
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j) {
      Eigen::MatrixXd g = Eigen::MatrixXd::Identity(m, m);
      g(i, j) = 1.0;
      out.push_back(g);
    }
  return out;
}

bool GroupDeformationReport::passed() const {
  return homomorphism_residual <= tolerance && membership_residual <= tolerance && endpoint_residual <= tolerance &&
         d2_residual <= tolerance && smoothness_residual <= smoothness_tolerance;
}

GroupDeformationReport verify_deformation(const GroupDeformation& d, std::size_t samples, std::uint64_t seed) {
  GroupDeformationReport rep;
  rep.label = d.label();
  rep.samples = samples;
  rep.seed = seed;
  const auto m = static_cast<Eigen::Index>(d.n());
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(m, m);
  auto sup = [](const Eigen::MatrixXd& a) { return a.cwiseAbs().maxCoeff(); };

  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = sample_rng(seed, i);
    const Eigen::MatrixXd g = random_group_element(d.group(), d.n(), rng);
    const Eigen::MatrixXd h = random_group_element(d.group(), d.n(), rng);
    const double t = uniform(rng, -0.5, 1.5);
    const Eigen::MatrixXd tg = d.apply(t, g), th = d.apply(t, h);
    rep.homomorphism_residual = std::max(rep.homomorphism_residual, sup(d.apply(t, g * h) - tg * th));
    rep.membership_residual = std::max(rep.membership_residual, group_membership_residual(d.group(), tg));

    // endpoint clauses
    if (d.kind() == GroupFamilyKind::contraction) {
      rep.endpoint_residual = std::max(rep.endpoint_residual, sup(d.apply(-uniform(rng, 0.0, 1.0), g) - g));
      rep.endpoint_residual = std::max(rep.endpoint_residual, sup(d.apply(1.0 + uniform(rng, 0.0, 1.0), g) - id));
    } else {
      rep.endpoint_residual = std::max(rep.endpoint_residual, sup(d.apply(-uniform(rng, 0.0, 1.0), g) - id));
      rep.endpoint_residual = std::max(rep.endpoint_residual, sup(d.apply(1.0 + uniform(rng, 0.0, 1.0), g) - id));
      const double mid = uniform(rng, d.middle_begin(), d.middle_end());
      rep.endpoint_residual = std::max(rep.endpoint_residual, sup(d.apply(mid, g) - g));
    }
    rep.d2_residual = std::max(rep.d2_residual, sup(d.apply(1.0, g) - d.apply(2.0, g)));
  }

  constexpr double h = 1e-3;
  std::mt19937_64 rng = sample_rng(seed, samples);
  const Eigen::MatrixXd g = random_group_element(d.group(), d.n(), rng);
  double max_scale = 1.0;
  for (const auto& st : d.stages()) max_scale = std::max(max_scale, std::abs(st.scale));
  for (double b : d.breakpoints()) {
    for (double dir : {-1.0, 1.0}) {
      std::vector<Eigen::MatrixXd> v;
      for (int s = 0; s <= 3; ++s) v.push_back(d.apply(b + dir * s * h / max_scale, g));
      rep.smoothness_residual = std::max({rep.smoothness_residual, sup(v[1] - v[0]) / h,
                                          sup(v[2] - 2 * v[1] + v[0]) / (h * h),
                                          sup(v[3] - 3 * v[2] + 3 * v[1] - v[0]) / (h * h * h)});
    }
  }
  return rep;
}

}  // namespace liekit
