#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liekit/lie_algebra.hpp"

namespace liekit {

struct Finding {
  std::string tag;
  std::string message;
};

/// Epstein-Thurston style summary of a Lie algebra.
struct ObstructionReport {
  std::string algebra;
  bool solvable = false;
  bool nilpotent = false;
  std::optional<std::size_t> derived_length;
  std::optional<std::size_t> nilpotency_class;
  std::optional<std::size_t> min_effective_dim;  // nullopt: not applicable (non-solvable)
  Subspace last_derived_term;                    // g^(l-1)
  Subspace center;
  bool last_term_central = false;
  std::size_t center_dim = 0;
  std::vector<Finding> verdicts;
};

/// Lower bound on the dimension of a manifold carrying an effective (local)
/// action: l for nilpotent, l - 1 for solvable, nullopt for non-solvable.
std::optional<std::size_t> min_effective_action_dim(const LieAlgebra& g);

/// Dimension in which the borderline analysis applies (= min_effective_action_dim).
std::optional<std::size_t> borderline_dimension(const LieAlgebra& g);

/// Throws InputError for non-solvable input.
ObstructionReport borderline_analysis(const LieAlgebra& g);

/// Like borderline_analysis but accepts any algebra; non-solvable input
/// yields a report with no bound and no borderline data.
ObstructionReport obstruction_report(const LieAlgebra& g);

enum class ActionVerdict { impossible, degenerate, no_verdict };

std::string to_string(ActionVerdict v);

struct NActionFinding {
  ActionVerdict verdict;
  std::string reason;
};

NActionFinding n_action_verdict(const LieAlgebra& g, std::size_t n);

/// Known closed forms for catalog families that disagree with the values
/// computed from the recursive definitions (st(m): l = m+1; N(n): l = n).
std::vector<Finding> convention_flags(const LieAlgebra& g);

}  // namespace liekit
