#pragma once

#include <optional>
#include <vector>

#include "liekit/lie_algebra.hpp"

namespace liekit {

/// Space of all derivations D[x,y] = [Dx,y] + [x,Dy], as n x n matrices acting on coordinates.
struct DerivationAlgebra {
  LieAlgebra parent;
  std::vector<RatMatrix> basis;
  std::size_t dim() const { return basis.size(); }
};

DerivationAlgebra derivation_algebra(const LieAlgebra& g);

bool is_derivation(const LieAlgebra& g, const RatMatrix& d);

/// Result of the common-kernel flag recursion. When `nil` is true, `flag`
/// is 0 = W0 < W1 < ... < Wr = V with every family member mapping W(i+1)
/// into W(i). Otherwise `flag` ends at the largest such subspace found.
struct NilFamilyCertificate {
  bool nil = false;
  std::vector<Subspace> flag;
};

/// True iff the span of `mats` acts strictly triangularly on some flag.
/// For Lie algebras of matrices (Engel) this is the same as every element of the span being nilpotent.
NilFamilyCertificate nil_family_certificate(const std::vector<RatMatrix>& mats, std::size_t ambient_dim);
bool is_nil_family(const std::vector<RatMatrix>& mats, std::size_t ambient_dim);

enum class ContractibilityVerdict { obstructed, inconclusive };

struct ContractibilityReport {
  ContractibilityVerdict verdict;
  DerivationAlgebra derivations;
  NilFamilyCertificate flag;
  /// A non-nilpotent derivation when inconclusive.
  std::optional<RatMatrix> witness;
};

ContractibilityReport contractibility_obstruction(const LieAlgebra& g);

}  // namespace liekit
