#pragma once

#include <string>
#include <vector>

#include "liekit/lie_algebra.hpp"

namespace liekit {

/// Elementary matrix with a single 1 at (row, col), zero-based.
RatMatrix elementary(std::size_t n, std::size_t row, std::size_t col);

/// A matrix Lie algebra basis together with display names.
struct MatrixBasis {
  std::vector<std::string> names;
  std::vector<RatMatrix> matrices;
};

// Basis orders:
//   st(n):  H1..H{n-1} with Hi = T(ii) - T(i+1,i+1), then Tij (i<j) row by row.
//   n(n):   Tij (i<j) row by row  (strictly upper triangular = st(n)')
//   t(n):   T11..Tnn, then Tij (i<j)
//   d(n):   H1..H{n-1}
//   sl(n):  H1..H{n-1}, Eij (i<j), Eji (i<j)
MatrixBasis st_basis(std::size_t n);
MatrixBasis strict_upper_basis(std::size_t n);
MatrixBasis upper_basis(std::size_t n);
MatrixBasis traceless_diagonal_basis(std::size_t n);
MatrixBasis sl_basis(std::size_t n);

LieAlgebra abelian(std::size_t m);
LieAlgebra heisenberg(std::size_t dim);  // dim = 2k + 1
LieAlgebra st(std::size_t n);
LieAlgebra st_prime(std::size_t n);
LieAlgebra upper_triangular(std::size_t n);
LieAlgebra diagonal(std::size_t n);
LieAlgebra sl(std::size_t n);
LieAlgebra big_n(std::size_t n);  // st_prime(n) + abelian(1)
LieAlgebra mueller_roemer7();

/// Looks up a family by name ("abelian", "heisenberg", "st", "st_prime", "t",
/// "d", "sl", "N", "mueller_roemer7", "st_c", "sl_c") and parameter.
LieAlgebra catalog(const std::string& family, std::size_t param);

/// Short identifiers such as "st3", "n4", "N3", "h3", "ab2", "sl2", "mr7",
/// "slc2", and the long forms "heisenberg3", "st_prime4", "mueller_roemer7".
LieAlgebra catalog_lookup(const std::string& id);

struct CatalogEntry {
  std::string id;
  std::string description;
};

/// Representative entries for listing and for whole-catalog property checks.
std::vector<CatalogEntry> catalog_entries();

}  // namespace liekit
