#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "netcurve/errors.hpp"
#include "netcurve/matrix.hpp"
#include "netcurve/subspace.hpp"
#include "oracles.hpp"

using namespace netcurve;
using namespace netcurve::testing;

namespace {

Vector e(std::size_t n, std::size_t i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

TEST(Rref, DependentRowsOverF2) {
  const Field f = Field::of_order(2);
  const auto r = rref(Matrix::from_rows(f, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.form.row_vector(0), (Vector{1, 0, 1}));
  EXPECT_EQ(r.form.row_vector(1), (Vector{0, 1, 1}));
  EXPECT_TRUE(is_zero(r.form.row(2)));
}

TEST(Rref, ZeroAndIdentity) {
  const Field f = Field::of_order(5);
  EXPECT_EQ(rref(Matrix(f, 3, 4)).rank, 0u);
  const auto id = Matrix::identity(f, 3);
  const auto r = rref(id);
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.form, id);
}

TEST(Rref, IdempotentAndRankMatchesOracle) {
  Rng rng(3);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 200; ++i) {
      const std::size_t rows = uniform(rng, 1, 6), cols = uniform(rng, 1, 6);
      std::vector<Vector> m;
      for (std::size_t r = 0; r < rows; ++r) m.push_back(random_vector(f, cols, rng));
      const auto a = rref(Matrix::from_rows(f, cols, m));
      ASSERT_EQ(a.rank, naive_rank(f, m));
      const auto b = rref(a.form);
      ASSERT_EQ(b.form, a.form);
      ASSERT_EQ(b.pivots, a.pivots);
    }
  }
}

TEST(Kernel, RowsAnnihilateAndHaveComplementaryDimension) {
  Rng rng(4);
  const Field f = Field::of_order(7);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = uniform(rng, 1, 5), cols = uniform(rng, 1, 6);
    std::vector<Vector> m;
    for (std::size_t r = 0; r < rows; ++r) m.push_back(random_vector(f, cols, rng));
    const Matrix a = Matrix::from_rows(f, cols, m);
    const Matrix k = kernel(a);
    ASSERT_EQ(k.rows() + rank(a), cols);
    for (std::size_t r = 0; r < k.rows(); ++r) ASSERT_TRUE(is_zero(a.apply(k.row(r))));
  }
}

TEST(Solve, FindsSolutionOrReportsNone) {
  Rng rng(5);
  const Field f = Field::of_order(4);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = uniform(rng, 1, 5);
    std::vector<Vector> m;
    for (std::size_t r = 0; r < n; ++r) m.push_back(random_vector(f, n, rng));
    const Matrix a = Matrix::from_rows(f, n, m);
    std::vector<Vector> xr;
    for (std::size_t r = 0; r < n; ++r) xr.push_back(random_vector(f, 2, rng));
    const Matrix x = Matrix::from_rows(f, 2, xr);
    const Matrix b = a.multiply(x);
    const auto got = solve(a, b);
    ASSERT_TRUE(got.has_value());
    ASSERT_EQ(a.multiply(*got), b);
  }
  // x + y = 1 and x + y = 0 over F_2 is inconsistent.
  const Field f2 = Field::of_order(2);
  EXPECT_FALSE(solve(Matrix::from_rows(f2, 2, {{1, 1}, {1, 1}}), Matrix::from_rows(f2, 1, {{1}, {0}})).has_value());
}

TEST(EchelonBuilder, TracksRank) {
  const Field f = Field::of_order(3);
  EchelonBuilder b(f, 3);
  EXPECT_TRUE(b.add(Vector{1, 2, 0}));
  EXPECT_FALSE(b.add(Vector{2, 1, 0}));
  EXPECT_TRUE(b.add(Vector{0, 0, 1}));
  EXPECT_EQ(b.rank(), 2u);
  EXPECT_TRUE(b.contains(Vector{1, 2, 2}));
  EXPECT_FALSE(b.contains(Vector{0, 1, 0}));
}

TEST(SubspaceLattice, SpecExamples) {
  const Field f3 = Field::of_order(3);
  const auto u = Subspace::span(f3, 3, {e(3, 0), e(3, 1)});
  const auto v = Subspace::span(f3, 3, {e(3, 1), e(3, 2)});
  EXPECT_EQ(intersect(u, v), Subspace::span(f3, 3, {e(3, 1)}));
  EXPECT_EQ(sum(u, u), u);
  EXPECT_EQ(sum(u, v), Subspace::whole(f3, 3));
}

TEST(SubspaceLattice, F2FourDimExampleMatchesScan) {
  const Field f = Field::of_order(2);
  const auto u = Subspace::span(f, 4, {{1, 1, 0, 0}, {0, 0, 1, 0}});
  const auto v = Subspace::span(f, 4, {{0, 1, 1, 0}, {1, 0, 0, 0}});
  const auto w = intersect(u, v);
  EXPECT_EQ(w.dim(), brute_intersection_dim(u, v));
  EXPECT_EQ(w.dim(), 1u);
  EXPECT_EQ(w, Subspace::span(f, 4, {{1, 1, 1, 0}}));
}

TEST(SubspaceLattice, MismatchErrors) {
  const Field f = Field::of_order(2);
  EXPECT_THROW(intersect(Subspace::whole(f, 2), Subspace::whole(f, 3)), AmbientMismatch);
  EXPECT_THROW(sum(Subspace::whole(f, 2), Subspace::whole(Field::of_order(3), 2)), FieldMismatch);
  EXPECT_THROW(Subspace::span(f, 3, {{1, 0}}), AmbientMismatch);
  EXPECT_THROW(subspace_distance(Subspace::whole(f, 2), Subspace::whole(f, 3)), AmbientMismatch);
}

TEST(SubspaceLattice, ContainsAndCombine) {
  const Field f = Field::of_order(5);
  const auto u = Subspace::span(f, 3, {{1, 2, 0}, {0, 0, 1}});
  EXPECT_TRUE(u.contains(Vector{2, 4, 3}));
  EXPECT_FALSE(u.contains(Vector{0, 1, 0}));
  EXPECT_TRUE(u.contains(ProjPoint(f, {3, 1, 0})));
  EXPECT_TRUE(u.contains(Subspace::span(f, 3, {{1, 2, 4}})));
  EXPECT_EQ(u.combine(Vector{2, 3}), (Vector{2, 4, 3}));
  EXPECT_EQ(u.to_string(), "span{(1,2,0),(0,0,1)}");
}

TEST(SubspaceDistance, Examples) {
  const Field f = Field::of_order(2);
  const auto u = Subspace::span(f, 2, {e(2, 0)});
  EXPECT_EQ(subspace_distance(u, u), 0u);
  EXPECT_EQ(subspace_distance(u, Subspace::span(f, 2, {e(2, 1)})), 2u);
}

TEST(SubspaceDistance, RandomPairsMatchEnumeration) {
  Rng rng(6);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 150; ++i) {
      const std::size_t n = uniform(rng, 1, 4);
      const auto u = random_subspace(f, n, uniform(rng, 0, n), rng);
      const auto v = random_subspace(f, n, uniform(rng, 0, n), rng);
      ASSERT_EQ(subspace_distance(u, v), brute_distance(u, v));
    }
  }
}

TEST(SubspaceProperties, ModularLawAndMetricAxioms) {
  Rng rng(7);
  int cases = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 300; ++i, ++cases) {
      const std::size_t n = uniform(rng, 1, 6);
      const auto u = random_subspace(f, n, uniform(rng, 0, n), rng);
      const auto v = random_subspace(f, n, uniform(rng, 0, n), rng);
      const auto w = random_subspace(f, n, uniform(rng, 0, n), rng);
      ASSERT_EQ(intersect(u, v).dim() + sum(u, v).dim(), u.dim() + v.dim());
      ASSERT_TRUE(u.contains(intersect(u, v)));
      ASSERT_TRUE(sum(u, v).contains(v));
      const auto duv = subspace_distance(u, v);
      ASSERT_EQ(duv, subspace_distance(v, u));
      ASSERT_EQ(duv == 0, u == v);
      ASSERT_LE(subspace_distance(u, w), duv + subspace_distance(v, w));
    }
  }
  EXPECT_GE(cases, 1000);
}

TEST(SubspaceCanonical, EqualityIsBasisIndependent) {
  Rng rng(8);
  const Field f = Field::of_order(9);
  for (int i = 0; i < 100; ++i) {
    const auto u = random_subspace(f, 5, uniform(rng, 1, 4), rng);
    std::vector<Vector> gens;
    for (int j = 0; j < 6; ++j) gens.push_back(u.combine(random_vector(f, u.dim(), rng)));
    gens.push_back(u.basis().row_vector(0));
    const auto w = sum(Subspace::span(f, 5, gens), Subspace::span(f, 5, u.basis().row_list()));
    ASSERT_EQ(w, u);
  }
}

TEST(ProjPoint, NormalizesAndRejectsZero) {
  const Field f = Field::of_order(5);
  const ProjPoint p(f, {0, 3, 1});
  EXPECT_EQ(p.coords(), (Vector{0, 1, 2}));
  EXPECT_EQ(p, ProjPoint(f, {0, 2, 4}));
  EXPECT_EQ(p.to_string(), "(0:1:2)");
  EXPECT_THROW(ProjPoint(f, {0, 0, 0}), DomainError);
}

TEST(EnumeratePoints, SpecExamples) {
  const Field f2 = Field::of_order(2);
  const auto one = enumerate_points(Subspace::span(f2, 3, {e(3, 0)}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].coords(), e(3, 0));

  const auto plane = enumerate_points(Subspace::span(f2, 3, {e(3, 0), e(3, 1)}));
  ASSERT_EQ(plane.size(), 3u);
  EXPECT_EQ(plane[0].coords(), (Vector{1, 0, 0}));
  EXPECT_EQ(plane[1].coords(), (Vector{0, 1, 0}));
  EXPECT_EQ(plane[2].coords(), (Vector{1, 1, 0}));

  EXPECT_EQ(enumerate_points(Subspace::whole(Field::of_order(3), 2)).size(), 4u);
  EXPECT_THROW(enumerate_points(Subspace::zero(f2, 3)), DomainError);
}

TEST(EnumeratePoints, CountDistinctContainedAndCursorAgrees) {
  Rng rng(9);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const Field f = Field::of_order(q);
    for (int i = 0; i < 40; ++i) {
      const std::size_t n = uniform(rng, 1, 4);
      const auto u = random_subspace(f, n, uniform(rng, 1, n), rng);
      const auto pts = enumerate_points(u);
      ASSERT_EQ(pts.size(), projective_point_count(q, u.dim()));
      std::set<Vector> seen;
      for (const auto& p : pts) {
        ASSERT_TRUE(u.contains(p));
        ASSERT_EQ(p.coords(), ProjPoint(f, p.coords()).coords());
        seen.insert(p.coords());
      }
      ASSERT_EQ(seen.size(), pts.size());
      const auto oracle = brute_points(u);
      ASSERT_EQ(seen, std::set<Vector>(oracle.begin(), oracle.end()));
      PointCursor cursor(u);
      EXPECT_EQ(cursor.total(), pts.size());
      for (const auto& p : pts) ASSERT_EQ(cursor.next(), p);
      EXPECT_FALSE(cursor.next().has_value());
    }
  }
}

TEST(EnumeratePoints, CountSaturates) {
  EXPECT_EQ(projective_point_count(2, 3), 7u);
  EXPECT_EQ(projective_point_count(65536, 8), std::numeric_limits<std::size_t>::max());
}

}  // namespace
