#include "liekit/lie_algebra.hpp"

namespace liekit {

std::size_t LieAlgebra::upper_index(std::size_t i, std::size_t j) const {
  // row-major packing of the strict upper triangle
  const std::size_t n = dim();
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

LieAlgebra LieAlgebra::unchecked(std::string name, std::vector<std::string> basis_names,
                                 const UpperTable& brackets) {
  LieAlgebra g;
  g.name_ = std::move(name);
  g.basis_names_ = std::move(basis_names);
  const std::size_t n = g.dim();
  g.upper_.assign(n * (n > 0 ? n - 1 : 0) / 2, RatVector(n));
  for (const auto& [key, result] : brackets) {
    const auto [i, j] = key;
    if (i >= j) throw InputError("structure constants must be given with i < j");
    if (j >= n) throw InputError("bracket index out of range");
    if (result.size() != n) throw InputError("bracket result has wrong length");
    g.upper_[g.upper_index(i, j)] = result;
  }
  return g;
}

LieAlgebra LieAlgebra::make(std::string name, std::vector<std::string> basis_names, const UpperTable& brackets) {
  LieAlgebra g = unchecked(std::move(name), std::move(basis_names), brackets);
  const auto bad = jacobi_check(g);
  if (!bad.empty()) {
    const auto& t = bad.front();
    throw InputError("Jacobi identity fails for " + g.name() + " at basis triple (" + std::to_string(t[0] + 1) +
                     "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")");
  }
  return g;
}

RatVector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i >= dim() || j >= dim()) throw InputError("basis index out of range");
  if (i == j) return RatVector(dim());
  if (i < j) return upper_[upper_index(i, j)];
  RatVector r = upper_[upper_index(j, i)];
  for (auto& x : r) x = -x;
  return r;
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  if (i < j) return upper_[upper_index(i, j)].at(k);
  return -upper_[upper_index(j, i)].at(k);
}

LieAlgebra::UpperTable LieAlgebra::upper_table() const {
  UpperTable t;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j) {
      const auto& r = upper_[upper_index(i, j)];
      if (!is_zero(r)) t.emplace(std::make_pair(i, j), r);
    }
  return t;
}

RatVector bracket(const LieAlgebra& g, const RatVector& x, const RatVector& y) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw InputError("bracket: vector length does not match algebra dimension");
  RatVector out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational w = x[i] * y[j] - x[j] * y[i];
      if (sgn(w) == 0) continue;
      const RatVector r = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(r[k]) != 0) out[k] += w * r[k];
      }
    }
  return out;
}

RatMatrix ad(const LieAlgebra& g, const RatVector& x) {
  const std::size_t n = g.dim();
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const RatVector col = bracket(g, x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

std::vector<std::array<std::size_t, 3>> jacobi_check(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::array<std::size_t, 3>> bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        RatVector sum = bracket(g, g.basis_bracket(i, j), ek);
        const RatVector b = bracket(g, g.basis_bracket(j, k), ei);
        const RatVector c = bracket(g, g.basis_bracket(k, i), ej);
        for (std::size_t m = 0; m < n; ++m) sum[m] += b[m] + c[m];
        if (!is_zero(sum)) bad.push_back({i, j, k});
      }
  return bad;
}

Subspace subspace_bracket(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != g.dim() || v.ambient_dim() != g.dim()) {
    throw InputError("subspace_bracket: ambient-dim mismatch");
  }
  std::vector<RatVector> products;
  for (const auto& x : u.basis_vectors())
    for (const auto& y : v.basis_vectors()) {
      auto p = bracket(g, x, y);
      if (!is_zero(p)) products.push_back(std::move(p));
    }
  return Subspace::span(products, g.dim());
}

namespace {

SeriesReport run_series(const LieAlgebra& g, SeriesKind kind) {
  SeriesReport rep{kind, {Subspace::full(g.dim())}, false, std::nullopt};
  const Subspace whole = Subspace::full(g.dim());
  for (;;) {
    const Subspace& last = rep.terms.back();
    if (last.is_zero()) {
      rep.length = rep.terms.size() - 1;
      return rep;
    }
    Subspace next = kind == SeriesKind::derived ? subspace_bracket(g, last, last) : subspace_bracket(g, whole, last);
    if (next == last) {
      rep.stabilized = true;
      return rep;
    }
    rep.terms.push_back(std::move(next));
  }
}

}  // namespace

SeriesReport derived_series(const LieAlgebra& g) { return run_series(g, SeriesKind::derived); }
SeriesReport lower_central_series(const LieAlgebra& g) { return run_series(g, SeriesKind::lower_central); }
std::optional<std::size_t> derived_length(const LieAlgebra& g) { return derived_series(g).length; }
std::optional<std::size_t> nilpotency_class(const LieAlgebra& g) { return lower_central_series(g).length; }

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // rows indexed by (j, k): sum_i x_i c[i][j][k] = 0
  RatMatrix constraints(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const RatVector r = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) constraints(j * n + k, i) = r[k];
    }
  return nullspace(constraints);
}

Predicates predicates(const LieAlgebra& g) {
  return {derived_length(g).has_value(), nilpotency_class(g).has_value()};
}

Subspace commutator_ideal(const LieAlgebra& g) {
  const Subspace whole = Subspace::full(g.dim());
  return subspace_bracket(g, whole, whole);
}

LieAlgebra subalgebra(const LieAlgebra& g, const Subspace& h, std::string name) {
  if (h.ambient_dim() != g.dim()) throw InputError("subalgebra: ambient-dim mismatch");
  const auto basis = h.basis_vectors();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < basis.size(); ++a) names.push_back("b" + std::to_string(a + 1));
  LieAlgebra::UpperTable table;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const RatVector p = bracket(g, basis[a], basis[b]);
      if (!h.contains(p)) throw InputError("subalgebra: subspace is not closed under the bracket");
      RatVector coords = h.coordinates(p);
      if (!is_zero(coords)) table.emplace(std::make_pair(a, b), std::move(coords));
    }
  return LieAlgebra::unchecked(std::move(name), std::move(names), table);
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  const std::size_t n = g.dim(), m = h.dim();
  std::vector<std::string> names = g.basis_names();
  for (const auto& s : h.basis_names()) names.push_back(s);
  LieAlgebra::UpperTable table;
  for (const auto& [key, r] : g.upper_table()) {
    RatVector v(n + m);
    for (std::size_t k = 0; k < n; ++k) v[k] = r[k];
    table.emplace(key, std::move(v));
  }
  for (const auto& [key, r] : h.upper_table()) {
    RatVector v(n + m);
    for (std::size_t k = 0; k < m; ++k) v[n + k] = r[k];
    table.emplace(std::make_pair(key.first + n, key.second + n), std::move(v));
  }
  return LieAlgebra::unchecked(g.name() + "+" + h.name(), std::move(names), table);
}

LieAlgebra realify(const LieAlgebra& g, std::string name) {
  const std::size_t n = g.dim();
  std::vector<std::string> names = g.basis_names();
  for (const auto& s : g.basis_names()) names.push_back("i" + s);
  auto full_bracket = [&](std::size_t a, std::size_t b) {
    // a, b in [0, 2n); indices >= n carry a factor i
    const bool ia = a >= n, ib = b >= n;
    const RatVector r = g.basis_bracket(a % n, b % n);
    RatVector v(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      if (ia && ib) v[k] = -r[k];
      else if (ia || ib) v[n + k] = r[k];
      else v[k] = r[k];
    }
    return v;
  };
  LieAlgebra::UpperTable table;
  for (std::size_t a = 0; a < 2 * n; ++a)
    for (std::size_t b = a + 1; b < 2 * n; ++b) {
      RatVector v = full_bracket(a, b);
      if (!is_zero(v)) table.emplace(std::make_pair(a, b), std::move(v));
    }
  return LieAlgebra::unchecked(std::move(name), std::move(names), table);
}

LieAlgebra from_matrix_basis(std::string name, std::vector<std::string> basis_names,
                             const std::vector<RatMatrix>& basis) {
  const std::size_t n = basis.size();
  if (basis_names.size() != n) throw InputError("from_matrix_basis: name count mismatch");
  if (n == 0) return LieAlgebra::unchecked(std::move(name), {}, {});
  const std::size_t entries = basis.front().rows() * basis.front().cols();
  // columns are the flattened basis matrices
  RatMatrix columns(entries, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t e = 0; e < entries; ++e) columns(e, c) = basis[c].entries()[e];
  if (rank(columns) != n) throw InputError("from_matrix_basis: basis matrices are linearly dependent");
  LieAlgebra::UpperTable table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const RatMatrix c = commutator(basis[i], basis[j]);
      RatVector coords;
      if (!solve(columns, c.entries(), coords)) {
        throw InputError("from_matrix_basis: span is not closed under commutator");
      }
      if (!is_zero(coords)) table.emplace(std::make_pair(i, j), std::move(coords));
    }
  return LieAlgebra::make(std::move(name), std::move(basis_names), table);
}

}  // namespace liekit
