#include "liekit/linalg.hpp"

#include <utility>

namespace liekit {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw InputError("RatMatrix: entry count does not match rows x cols");
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("RatMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVector RatMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatVector RatMatrix::apply(const RatVector& x) const {
  if (x.size() != cols_) throw InputError("RatMatrix::apply: length mismatch");
  RatVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (sgn(x[c]) != 0) acc += (*this)(r, c) * x[c];
    }
    y[r] = acc;
  }
  return y;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (sgn(e) != 0) return false;
  }
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("RatMatrix product: shape mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("RatMatrix sum: shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
  return s;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("RatMatrix difference: shape mismatch");
  RatMatrix s = a;
  for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] -= b.entries_[i];
  return s;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix r = a;
  for (auto& e : r.entries_) e *= s;
  return r;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

namespace {

// In-place Gauss-Jordan elimination; returns pivot columns.
std::vector<std::size_t> reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return pivots;
}

}  // namespace

RatMatrix rref(const RatMatrix& m) {
  RatMatrix r = m;
  reduce(r);
  return r;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix r = m;
  return reduce(r).size();
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t n) { return row_space(RatMatrix::identity(n)); }

Subspace Subspace::span(const std::vector<RatVector>& vectors, std::size_t ambient_dim) {
  return row_space(RatMatrix::from_rows(vectors, ambient_dim));
}

Subspace Subspace::row_space(const RatMatrix& m) {
  RatMatrix r = m;
  auto pivots = reduce(r);
  Subspace s(m.cols());
  std::vector<Rational> entries(r.entries().begin(),
                                r.entries().begin() + static_cast<std::ptrdiff_t>(pivots.size() * m.cols()));
  s.basis_ = RatMatrix(pivots.size(), m.cols(), std::move(entries));
  s.pivots_ = std::move(pivots);
  return s;
}

std::vector<RatVector> Subspace::basis_vectors() const {
  std::vector<RatVector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

bool Subspace::contains(const RatVector& x) const {
  if (x.size() != ambient_) throw InputError("Subspace::contains: ambient-dim mismatch");
  // Subtract the pivot-coordinate combination; membership iff nothing is left.
  RatVector rest = x;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational coef = rest[pivots_[i]];
    if (sgn(coef) == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) rest[c] -= coef * basis_(i, c);
  }
  return liekit::is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw InputError("Subspace::contains: ambient-dim mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

RatVector Subspace::coordinates(const RatVector& x) const {
  if (!contains(x)) throw InputError("Subspace::coordinates: vector not in subspace");
  RatVector coords(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords[i] = x[pivots_[i]];
  return coords;
}

RatMatrix Subspace::annihilator() const {
  Subspace ann = nullspace(basis_);
  return ann.basis();
}

Subspace nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  const auto pivots = reduce(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    kernel.push_back(std::move(v));
  }
  return Subspace::span(kernel, n);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw InputError("subspace_sum: ambient-dim mismatch");
  auto rows = u.basis_vectors();
  for (auto& b : v.basis_vectors()) rows.push_back(std::move(b));
  return Subspace::span(rows, u.ambient_dim());
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw InputError("subspace_intersection: ambient-dim mismatch");
  const RatMatrix au = u.annihilator();
  const RatMatrix av = v.annihilator();
  std::vector<RatVector> constraints;
  for (std::size_t i = 0; i < au.rows(); ++i) constraints.push_back(au.row_vector(i));
  for (std::size_t i = 0; i < av.rows(); ++i) constraints.push_back(av.row_vector(i));
  return nullspace(RatMatrix::from_rows(constraints, u.ambient_dim()));
}

bool contains(const Subspace& u, const RatVector& x) { return u.contains(x); }

bool solve(const RatMatrix& m, const RatVector& b, RatVector& x) {
  if (b.size() != m.rows()) throw InputError("solve: length mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return true;
}

bool is_nilpotent(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("is_nilpotent: matrix not square");
  RatMatrix p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

}  // namespace liekit
