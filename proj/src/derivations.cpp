#include "liekit/derivations.hpp"

#include <random>

namespace liekit {

DerivationAlgebra derivation_algebra(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Unknown D(a, b) sits at column a * n + b; D e_b = sum_a D(a, b) e_a.
  auto col = [n](std::size_t a, std::size_t b) { return a * n + b; };
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RatVector cij = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        RatVector row(n * n);
        // D[e_i, e_j]_k
        for (std::size_t a = 0; a < n; ++a) row[col(k, a)] += cij[a];
        // - [D e_i, e_j]_k - [e_i, D e_j]_k
        for (std::size_t a = 0; a < n; ++a) {
          row[col(a, i)] -= g.constant(a, j, k);
          row[col(a, j)] -= g.constant(i, a, k);
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  const Subspace sol = rows.empty() ? Subspace::full(n * n) : nullspace(RatMatrix::from_rows(rows, n * n));
  DerivationAlgebra out{g, {}};
  for (const auto& v : sol.basis_vectors()) out.basis.emplace_back(n, n, v);
  return out;
}

bool is_derivation(const LieAlgebra& g, const RatMatrix& d) {
  const std::size_t n = g.dim();
  if (d.rows() != n || d.cols() != n) throw InputError("is_derivation: matrix size mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RatVector lhs = d.apply(g.basis_bracket(i, j));
      RatVector rhs = bracket(g, d.apply(unit_vector(n, i)), unit_vector(n, j));
      const RatVector r2 = bracket(g, unit_vector(n, i), d.apply(unit_vector(n, j)));
      for (std::size_t k = 0; k < n; ++k) rhs[k] += r2[k];
      if (lhs != rhs) return false;
    }
  return true;
}

NilFamilyCertificate nil_family_certificate(const std::vector<RatMatrix>& mats, std::size_t n) {
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) throw InputError("is_nil_family: matrix size mismatch");
  }
  NilFamilyCertificate cert;
  cert.flag.push_back(Subspace::zero(n));
  for (;;) {
    const Subspace& w = cert.flag.back();
    if (w.dim() == n) {
      cert.nil = true;
      return cert;
    }
    // next = {v : D v in w for every D}
    const RatMatrix ann = w.annihilator();
    std::vector<RatVector> constraints;
    for (const auto& d : mats) {
      const RatMatrix c = ann * d;
      for (std::size_t r = 0; r < c.rows(); ++r) {
        auto row = c.row_vector(r);
        if (!is_zero(row)) constraints.push_back(std::move(row));
      }
    }
    Subspace next = constraints.empty() ? Subspace::full(n) : nullspace(RatMatrix::from_rows(constraints, n));
    if (next == w) return cert;
    cert.flag.push_back(std::move(next));
  }
}

bool is_nil_family(const std::vector<RatMatrix>& mats, std::size_t ambient_dim) {
  return nil_family_certificate(mats, ambient_dim).nil;
}

namespace {

std::optional<RatMatrix> find_non_nilpotent(const std::vector<RatMatrix>& basis, std::size_t n) {
  for (const auto& d : basis) {
    if (!is_nilpotent(d)) return d;
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      RatMatrix s = basis[i] + basis[j];
      if (!is_nilpotent(s)) return s;
    }
  // The nilpotent elements form a proper algebraic subset, so integer combinations find a witness.
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int attempt = 0; attempt < 256; ++attempt) {
    RatMatrix s(n, n);
    for (const auto& d : basis) s = s + Rational(coef(rng)) * d;
    if (!is_nilpotent(s)) return s;
  }
  return std::nullopt;
}

}  // namespace

ContractibilityReport contractibility_obstruction(const LieAlgebra& g) {
  ContractibilityReport rep{ContractibilityVerdict::inconclusive, derivation_algebra(g), {}, std::nullopt};
  rep.flag = nil_family_certificate(rep.derivations.basis, g.dim());
  if (rep.flag.nil) {
    rep.verdict = ContractibilityVerdict::obstructed;
  } else {
    rep.witness = find_non_nilpotent(rep.derivations.basis, g.dim());
  }
  return rep;
}

}  // namespace liekit
