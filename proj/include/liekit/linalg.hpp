#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "liekit/rational.hpp"

namespace liekit {

/// Dense row-major rational matrix.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  RatVector row_vector(std::size_t r) const;
  const std::vector<Rational>& entries() const { return entries_; }

  RatMatrix transpose() const;
  RatVector apply(const RatVector& x) const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

/// Canonical reduced row-echelon form. Zero rows are kept at the bottom,
/// pivots are normalized to 1, so the result is unique for a given row space.
RatMatrix rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// Linear subspace of Q^n, stored as the nonzero rows of its canonical RREF basis.
/// Two subspaces are equal iff their representations are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(const std::vector<RatVector>& vectors, std::size_t ambient_dim);
  static Subspace row_space(const RatMatrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const RatMatrix& basis() const { return basis_; }
  RatVector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<RatVector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RatVector& x) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of x with respect to basis(); x must lie in the subspace.
  RatVector coordinates(const RatVector& x) const;

  /// Rows spanning {y : y.x = 0 for all x in this subspace}.
  RatMatrix annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel {x : m x = 0}.
Subspace nullspace(const RatMatrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersection(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const RatVector& x);

/// Solves m x = b; returns false when inconsistent.
bool solve(const RatMatrix& m, const RatVector& b, RatVector& x);

bool is_nilpotent(const RatMatrix& m);

}  // namespace liekit
