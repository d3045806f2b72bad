#include <gtest/gtest.h>

#include "liekit/catalog.hpp"
#include "liekit/lie_algebra.hpp"
#include "support/oracles.hpp"

using namespace liekit;

namespace {

RatMatrix combination(const MatrixBasis& b, const RatVector& x) {
  RatMatrix m(b.matrices[0].rows(), b.matrices[0].cols());
  for (std::size_t i = 0; i < x.size(); ++i) m = m + x[i] * b.matrices[i];
  return m;
}

}  // namespace

TEST(Catalog, EveryEntrySatisfiesJacobi) {
  for (const auto& e : catalog_entries()) {
    const LieAlgebra g = catalog_lookup(e.id);
    EXPECT_TRUE(jacobi_check(g).empty()) << e.id;
  }
}

TEST(Catalog, UnknownNamesAreRejected) {
  EXPECT_THROW(catalog_lookup("st"), InputError);
  EXPECT_THROW(catalog_lookup("xyz3"), InputError);
  EXPECT_THROW(catalog_lookup(""), InputError);
}

TEST(Catalog, MuellerRoemerTable) {
  const LieAlgebra g = mueller_roemer7();
  ASSERT_EQ(g.dim(), 7u);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(g.basis_bracket(0, k), unit_vector(7, k + 1));
  EXPECT_EQ(g.basis_bracket(1, 2), unit_vector(7, 5));
  EXPECT_EQ(g.basis_bracket(1, 3), unit_vector(7, 6));
  EXPECT_EQ(g.basis_bracket(2, 3), unit_vector(7, 6));
  RatVector minus_x7 = unit_vector(7, 6);
  minus_x7[6] = -1;
  EXPECT_EQ(g.basis_bracket(1, 4), minus_x7);
  EXPECT_EQ(g.basis_bracket(4, 1), unit_vector(7, 6));
}

TEST(Bracket, MatchesMatrixCommutators) {
  for (const auto& b : {st_basis(4), sl_basis(3), upper_basis(3), strict_upper_basis(5)}) {
    const LieAlgebra g = from_matrix_basis("m", b.names, b.matrices);
    for (std::uint64_t i = 0; i < 15; ++i) {
      auto rng = sample_rng(21, i);
      const RatVector x = oracle::random_vector(rng, g.dim()), y = oracle::random_vector(rng, g.dim());
      EXPECT_EQ(combination(b, bracket(g, x, y)), commutator(combination(b, x), combination(b, y)));
    }
  }
}

TEST(Bracket, BilinearAndAntisymmetric) {
  const LieAlgebra g = mueller_roemer7();
  for (std::uint64_t i = 0; i < 20; ++i) {
    auto rng = sample_rng(22, i);
    const RatVector x = oracle::random_vector(rng, 7), y = oracle::random_vector(rng, 7), z = oracle::random_vector(rng, 7);
    const Rational a = oracle::random_rational(rng);
    RatVector ax_plus_z(7), lhs = bracket(g, x, y), rhs = bracket(g, y, x);
    for (std::size_t k = 0; k < 7; ++k) {
      ax_plus_z[k] = a * x[k] + z[k];
      EXPECT_EQ(lhs[k], -rhs[k]);
    }
    const RatVector l = bracket(g, ax_plus_z, y), bx = bracket(g, x, y), bz = bracket(g, z, y);
    for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(l[k], a * bx[k] + bz[k]);
  }
}

TEST(Jacobi, CorruptedTableIsReported) {
  LieAlgebra::UpperTable t;
  t[{0, 1}] = {0, 0, 1};
  t[{0, 2}] = {1, 0, 0};
  t[{1, 2}] = {0, 1, 0};
  const LieAlgebra bad = LieAlgebra::unchecked("bad", {"x", "y", "z"}, t);
  const auto violations = jacobi_check(bad);
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0], (std::array<std::size_t, 3>{0, 1, 2}));
  EXPECT_THROW(LieAlgebra::make("bad", {"x", "y", "z"}, t), InputError);
}

TEST(Series, StDerivedLengthsMatchBruteForceSpans) {
  for (std::size_t m = 2; m <= 6; ++m) {
    const auto expected = oracle::derived_length(oracle::eigen_basis(st_basis(m)));
    ASSERT_GT(expected, 0u);
    EXPECT_EQ(derived_length(st(m)), expected) << "st" << m;
    const auto dims = oracle::derived_dims(oracle::eigen_basis(st_basis(m)));
    const auto series = derived_series(st(m));
    ASSERT_EQ(series.terms.size(), dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) EXPECT_EQ(series.terms[k].dim(), dims[k]);
  }
  const std::vector<std::size_t> lengths{2, 3, 3, 4, 4};
  for (std::size_t m = 2; m <= 6; ++m) EXPECT_EQ(derived_length(st(m)), lengths[m - 2]);
}

TEST(Series, StrictUpperClassesMatchGrading) {
  for (std::size_t m = 2; m <= 6; ++m) {
    const LieAlgebra g = st_prime(m);
    EXPECT_EQ(nilpotency_class(g), oracle::graded_class_strict_upper(m));
    const auto lcs = lower_central_series(g);
    for (std::size_t k = 0; k < lcs.terms.size(); ++k) {
      EXPECT_EQ(lcs.terms[k].dim(), oracle::graded_lower_central_dim(m, k)) << "n" << m << " term " << k;
    }
  }
}

TEST(Series, NonSolvableSeriesStabilize) {
  const auto ds = derived_series(sl(2));
  EXPECT_TRUE(ds.stabilized);
  EXPECT_FALSE(ds.length.has_value());
  EXPECT_EQ(ds.terms.back().dim(), 3u);
  const auto lcs = lower_central_series(st(3));
  EXPECT_TRUE(lcs.stabilized);
  EXPECT_EQ(lcs.terms.back().dim(), 3u);
  EXPECT_FALSE(nilpotency_class(st(3)).has_value());
}

TEST(Series, AbelianAndZeroAlgebras) {
  EXPECT_EQ(derived_length(abelian(3)), 1u);
  EXPECT_EQ(nilpotency_class(abelian(3)), 1u);
  EXPECT_EQ(derived_length(abelian(0)), 0u);
}

TEST(Center, KnownCenters) {
  EXPECT_EQ(center(heisenberg(3)), Subspace::span({unit_vector(3, 2)}, 3));
  EXPECT_EQ(center(big_n(3)).dim(), 2u);
  EXPECT_EQ(center(sl(2)).dim(), 0u);
  EXPECT_EQ(center(abelian(4)).dim(), 4u);
  EXPECT_EQ(center(heisenberg(5)).dim(), 1u);
}

TEST(Center, ElementsCommuteWithBasis) {
  for (const auto& id : {"N4", "mr7", "n5", "h5"}) {
    const LieAlgebra g = catalog_lookup(id);
    for (const auto& z : center(g).basis_vectors())
      for (std::size_t i = 0; i < g.dim(); ++i) EXPECT_TRUE(is_zero(bracket(g, z, unit_vector(g.dim(), i))));
  }
}

TEST(Predicates, JacobsonEquivalenceOnCatalogAndSums) {
  std::vector<LieAlgebra> algebras;
  for (const auto& e : catalog_entries()) algebras.push_back(catalog_lookup(e.id));
  auto check = [](const LieAlgebra& g) {
    const LieAlgebra prime = subalgebra(g, commutator_ideal(g), g.name() + "'");
    EXPECT_EQ(predicates(g).is_solvable, predicates(prime).is_nilpotent) << g.name();
  };
  for (const auto& g : algebras) check(g);
  for (std::size_t i = 0; i < algebras.size(); ++i)
    for (std::size_t j = i; j < algebras.size(); ++j) {
      if (algebras[i].dim() + algebras[j].dim() > 14) continue;
      check(direct_sum(algebras[i], algebras[j]));
    }
}

TEST(DirectSum, InvariantsCombine) {
  const LieAlgebra s = direct_sum(st(3), heisenberg(3));
  EXPECT_EQ(s.dim(), 8u);
  EXPECT_TRUE(jacobi_check(s).empty());
  EXPECT_EQ(derived_length(s), 3u);
  EXPECT_EQ(center(s).dim(), 1u);
  EXPECT_FALSE(predicates(direct_sum(sl(2), abelian(1))).is_solvable);
}

TEST(Subalgebra, CommutatorIdealOfStIsStrictUpper) {
  for (std::size_t m = 2; m <= 5; ++m) {
    const LieAlgebra g = st(m);
    const LieAlgebra h = subalgebra(g, commutator_ideal(g), "prime");
    EXPECT_EQ(h.dim(), m * (m - 1) / 2);
    EXPECT_EQ(nilpotency_class(h), nilpotency_class(st_prime(m)));
  }
}

TEST(Realify, ComplexAlgebrasDoubleInDimension) {
  const LieAlgebra c = catalog_lookup("slc2");
  EXPECT_EQ(c.dim(), 6u);
  EXPECT_TRUE(jacobi_check(c).empty());
  EXPECT_FALSE(predicates(c).is_solvable);
  const LieAlgebra s = catalog_lookup("stc2");
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_TRUE(predicates(s).is_solvable);
  EXPECT_FALSE(predicates(s).is_nilpotent);
}

TEST(MatrixBasis, RejectsNonClosedSpan) {
  const MatrixBasis b = strict_upper_basis(3);
  std::vector<RatMatrix> mats{b.matrices[0], b.matrices[2]};  // T12, T23 without T13
  EXPECT_THROW(from_matrix_basis("x", {"T12", "T23"}, mats), InputError);
}
