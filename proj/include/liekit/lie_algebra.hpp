#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liekit/linalg.hpp"

namespace liekit {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Only pairs i < j are stored; the
/// rest of the table follows from antisymmetry.
class LieAlgebra {
 public:
  using UpperTable = std::map<std::pair<std::size_t, std::size_t>, RatVector>;

  LieAlgebra() = default;

  /// Builds and validates (index ranges, Jacobi). Throws InputError on failure.
  static LieAlgebra make(std::string name, std::vector<std::string> basis_names, const UpperTable& brackets);

  /// Builds without the Jacobi check, so broken tables can still be inspected.
  static LieAlgebra unchecked(std::string name, std::vector<std::string> basis_names, const UpperTable& brackets);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  /// [e_i, e_j] as a coordinate vector; antisymmetry synthesized.
  RatVector basis_bracket(std::size_t i, std::size_t j) const;
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// Nonzero brackets with i < j, in index order.
  UpperTable upper_table() const;

 private:
  std::size_t upper_index(std::size_t i, std::size_t j) const;

  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<RatVector> upper_;  // packed (i<j) rows
};

RatVector bracket(const LieAlgebra& g, const RatVector& x, const RatVector& y);

/// Matrix of ad_x acting on coordinate vectors.
RatMatrix ad(const LieAlgebra& g, const RatVector& x);

/// Basis triples (i < j < k) where the Jacobi sum is nonzero.
std::vector<std::array<std::size_t, 3>> jacobi_check(const LieAlgebra& g);

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v);

enum class SeriesKind { derived, lower_central };

/// Terms of the derived or lower central series, term 0 being the whole algebra.
/// `length` is the first index whose term is zero; nullopt when the series
/// stabilizes at a nonzero term.
struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace> terms;
  bool stabilized = false;
  std::optional<std::size_t> length;
};

SeriesReport derived_series(const LieAlgebra& g);
SeriesReport lower_central_series(const LieAlgebra& g);
std::optional<std::size_t> derived_length(const LieAlgebra& g);
std::optional<std::size_t> nilpotency_class(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);

struct Predicates {
  bool is_solvable;
  bool is_nilpotent;
};
Predicates predicates(const LieAlgebra& g);

/// Commutator ideal [g, g].
Subspace commutator_ideal(const LieAlgebra& g);

/// Restriction of g to a subalgebra, in the coordinates of the subspace's canonical basis.
LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& h, std::string name);

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

/// Realification of a complex algebra whose structure constants are rational:
/// basis e_1..e_n, i e_1..i e_n.
LieAlgebra realify(const LieAlgebra& g, std::string name);

/// Lie algebra spanned by linearly independent rational matrices closed under commutator.
LieAlgebra from_matrix_basis(std::string name, std::vector<std::string> basis_names,
                             const std::vector<RatMatrix>& basis);

}  // namespace liekit
