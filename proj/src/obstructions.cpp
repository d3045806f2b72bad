#include "liekit/obstructions.hpp"

#include <cctype>

namespace liekit {

namespace {

std::optional<std::size_t> catalog_parameter(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  std::size_t p = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    p = p * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  return p;
}

std::string show(std::optional<std::size_t> v) { return v ? std::to_string(*v) : std::string("infinite"); }

}  // namespace

std::optional<std::size_t> min_effective_action_dim(const LieAlgebra& g) {
  const auto len = derived_length(g);
  if (!len) return std::nullopt;
  if (nilpotency_class(g)) return *len;
  return *len - 1;
}

std::optional<std::size_t> borderline_dimension(const LieAlgebra& g) { return min_effective_action_dim(g); }

ObstructionReport obstruction_report(const LieAlgebra& g) {
  ObstructionReport rep;
  rep.algebra = g.name();
  const SeriesReport ds = derived_series(g);
  const SeriesReport lcs = lower_central_series(g);
  rep.derived_length = ds.length;
  rep.nilpotency_class = lcs.length;
  rep.solvable = ds.length.has_value();
  rep.nilpotent = lcs.length.has_value();
  rep.center = center(g);
  rep.center_dim = rep.center.dim();
  rep.last_derived_term = Subspace::zero(g.dim());
  if (!rep.solvable) {
    rep.verdicts.push_back({"not_applicable", "algebra is not solvable; the dimension bound does not apply"});
  } else {
    const std::size_t l = *ds.length;
    rep.min_effective_dim = rep.nilpotent ? l : (l == 0 ? 0 : l - 1);
    if (l >= 1) rep.last_derived_term = ds.terms[l - 1];
    rep.last_term_central = l >= 1 && rep.center.contains(rep.last_derived_term);
    const std::string dim_text = std::to_string(*rep.min_effective_dim);
    if (rep.last_term_central && rep.center_dim > 1) {
      rep.verdicts.push_back(
          {"degenerate",
           "every analytic action in the borderline dimension " + dim_text +
               " has kernel containing a 1-dimensional central subalgebra; every such action is degenerate"});
    } else if (rep.last_term_central && rep.center_dim == 1) {
      rep.verdicts.push_back({"no_central_obstruction",
                              "last derived term equals the 1-dimensional center; no central obstruction in dimension " +
                                  dim_text});
    }
  }
  for (auto& f : convention_flags(g)) rep.verdicts.push_back(std::move(f));
  return rep;
}

ObstructionReport borderline_analysis(const LieAlgebra& g) {
  if (!predicates(g).is_solvable) throw InputError("borderline_analysis: " + g.name() + " is not solvable");
  return obstruction_report(g);
}

std::string to_string(ActionVerdict v) {
  switch (v) {
    case ActionVerdict::impossible: return "impossible";
    case ActionVerdict::degenerate: return "degenerate";
    case ActionVerdict::no_verdict: return "no verdict";
  }
  return "no verdict";
}

NActionFinding n_action_verdict(const LieAlgebra& g, std::size_t n) {
  const ObstructionReport rep = obstruction_report(g);
  if (!rep.min_effective_dim) return {ActionVerdict::no_verdict, "algebra is not solvable"};
  const std::size_t bound = *rep.min_effective_dim;
  if (n < bound) {
    return {ActionVerdict::impossible,
            "n = " + std::to_string(n) + " is below the Epstein-Thurston bound " + std::to_string(bound)};
  }
  if (n == bound && rep.last_term_central && rep.center_dim > 1) {
    return {ActionVerdict::degenerate, "borderline dimension with last derived term central and center of dimension " +
                                           std::to_string(rep.center_dim)};
  }
  return {ActionVerdict::no_verdict, "no obstruction applies in dimension " + std::to_string(n)};
}

std::vector<Finding> convention_flags(const LieAlgebra& g) {
  std::vector<Finding> out;
  const auto len = derived_length(g);
  if (auto m = catalog_parameter(g.name(), "st")) {
    if (len != *m + 1) {
      out.push_back({"derived_length_convention",
                     "computed derived length " + show(len) + " of st(" + std::to_string(*m) +
                         ") differs from the closed form m+1 = " + std::to_string(*m + 1)});
    }
  }
  if (auto m = catalog_parameter(g.name(), "N")) {
    if (len != *m) {
      out.push_back({"derived_length_convention",
                     "computed derived length " + show(len) + " of N(" + std::to_string(*m) +
                         ") differs from the value n = " + std::to_string(*m) +
                         " used for its borderline dimension; verdicts use the computed value"});
    }
  }
  return out;
}

}  // namespace liekit
