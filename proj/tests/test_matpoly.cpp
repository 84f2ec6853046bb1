#include <gtest/gtest.h>

#include <random>

#include "burstkit/error.hpp"
#include "burstkit/matrix.hpp"
#include "burstkit/poly.hpp"
#include "oracles.hpp"

using namespace burstkit;

namespace {

Poly P(const FieldPtr& f, std::vector<std::uint32_t> c) {
  std::vector<Fe> v;
  for (auto x : c) v.push_back(Fe{x});
  return Poly(f, v);
}

Mat M(const FieldPtr& f, const std::vector<std::vector<std::uint32_t>>& rows) {
  std::vector<Vec> r;
  for (const auto& row : rows) r.push_back(oracle::cooked(row));
  return Mat::from_rows(f, r);
}

Mat random_mat(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Fe{static_cast<std::uint32_t>(oracle::uniform(rng, f->q()))};
  return m;
}

// Cofactor expansion, used only on small matrices.
std::uint32_t det_expand(const oracle::SlowField& f, const std::vector<std::vector<std::uint32_t>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::uint32_t acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<std::uint32_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::uint32_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    std::uint32_t term = f.mul(a[0][j], det_expand(f, minor));
    if (j % 2 == 1) term = f.neg(term);
    acc = f.add(acc, term);
  }
  return acc;
}

}  // namespace

TEST(Poly, RingOperations) {
  auto f = field_new(7, 1);
  const Poly xm1 = P(f, {6, 1}), xp1 = P(f, {1, 1});
  EXPECT_EQ(poly_mul(xm1, xp1), P(f, {6, 0, 1}));
  EXPECT_EQ(poly_eval(P(f, {6, 0, 1}), Fe{3}), Fe{1});
  EXPECT_EQ(poly_add(xm1, Poly(f)), xm1);
  EXPECT_TRUE(P(f, {0, 0, 0}).is_zero());
  EXPECT_EQ(Poly(f).degree(), kZeroPolyDegree);
}

TEST(Poly, DivMod) {
  auto f = field_new(7, 1);
  const Poly a = P(f, {6, 0, 1}), b = P(f, {6, 1});
  auto [q1, r1] = poly_divmod(a, a);
  EXPECT_EQ(q1, P(f, {1}));
  EXPECT_TRUE(r1.is_zero());
  auto [q2, r2] = poly_divmod(a, b);
  EXPECT_EQ(q2, P(f, {1, 1}));
  EXPECT_TRUE(r2.is_zero());
  auto [q3, r3] = poly_divmod(b, a);
  EXPECT_TRUE(q3.is_zero());
  EXPECT_EQ(r3, b);
  EXPECT_THROW(poly_divmod(a, Poly(f)), DomainError);
  EXPECT_THROW(poly_add(a, P(field_new(5, 1), {1})), ShapeError);
}

TEST(PolyProperty, DivModRoundTrip) {
  std::mt19937_64 rng(21);
  for (std::uint64_t q : {2u, 7u, 16u}) {
    auto f = field_for_size(q);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Fe> ca(oracle::uniform(rng, 9)), cb(1 + oracle::uniform(rng, 5));
      for (auto& x : ca) x = Fe{static_cast<std::uint32_t>(oracle::uniform(rng, q))};
      for (auto& x : cb) x = Fe{static_cast<std::uint32_t>(oracle::uniform(rng, q))};
      const Poly a(f, ca), b(f, cb);
      if (b.is_zero()) continue;
      auto [quo, rem] = poly_divmod(a, b);
      ASSERT_EQ(poly_add(poly_mul(quo, b), rem), a);
      ASSERT_LT(rem.degree(), b.degree());
    }
  }
}

TEST(Matrix, Determinants) {
  auto f5 = field_new(5, 1);
  EXPECT_EQ(determinant(Mat::identity(f5, 4)), Fe{1});
  EXPECT_EQ(determinant(M(f5, {{0, 1}, {1, 0}})), f5->neg(f5->one()));
  // [[-b0, 1], [-b1, 1]] with b0 = 1, b1 = 3.
  EXPECT_EQ(determinant(M(f5, {{4, 1}, {2, 1}})), Fe{2});
  EXPECT_THROW(determinant(Mat(f5, 2, 3)), ShapeError);
}

TEST(Matrix, SolveAffine) {
  auto f2 = field_new(2, 1);
  const Vec b = oracle::cooked({1, 0, 1});
  auto id = solve_affine(Mat::identity(f2, 3), b);
  ASSERT_TRUE(id);
  EXPECT_EQ(id->particular, b);
  EXPECT_TRUE(id->basis.empty());

  auto zero = solve_affine(Mat(f2, 2, 3), oracle::cooked({0, 0}));
  ASSERT_TRUE(zero);
  EXPECT_EQ(zero->basis.size(), 3u);

  auto one = solve_affine(M(f2, {{1, 1}}), oracle::cooked({0}));
  ASSERT_TRUE(one);
  EXPECT_EQ(one->particular, oracle::cooked({0, 0}));
  ASSERT_EQ(one->basis.size(), 1u);
  EXPECT_EQ(one->basis[0], oracle::cooked({1, 1}));

  EXPECT_FALSE(solve_affine(Mat(f2, 1, 2), oracle::cooked({1})));
  EXPECT_THROW(solve_affine(Mat(f2, 1, 2), oracle::cooked({1, 0})), ShapeError);
}

TEST(Matrix, Vandermonde) {
  auto f7 = field_new(7, 1);
  const Vec one{Fe{1}};
  EXPECT_EQ(vandermonde(f7, one), M(f7, {{1}}));
  const Vec xi = oracle::cooked({1, 3});
  const Mat v = vandermonde(f7, xi);
  EXPECT_EQ(v, M(f7, {{1, 1}, {1, 3}}));
  EXPECT_EQ(determinant(v), Fe{2});
}

TEST(MatrixProperty, VandermondeDeterminantIsProductOfDifferences) {
  std::mt19937_64 rng(22);
  for (std::uint64_t q : {7u, 16u, 17u}) {
    auto f = field_for_size(q);
    for (int trial = 0; trial < 100; ++trial) {
      Vec xi(1 + oracle::uniform(rng, 6));
      for (auto& x : xi) x = Fe{static_cast<std::uint32_t>(oracle::uniform(rng, q))};
      Fe prod = f->one();
      for (std::size_t t = 0; t < xi.size(); ++t)
        for (std::size_t s = 0; s < t; ++s) prod = f->mul(prod, f->sub(xi[t], xi[s]));
      ASSERT_EQ(determinant(vandermonde(f, xi)), prod);
    }
  }
}

TEST(MatrixProperty, DeterminantMatchesCofactorExpansionAndIsMultiplicative) {
  std::mt19937_64 rng(23);
  for (std::uint64_t q : {2u, 3u, 7u, 9u, 16u}) {
    auto f = field_for_size(q);
    oracle::SlowField slow(*f);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + oracle::uniform(rng, 5);
      const Mat a = random_mat(f, n, n, rng), b = random_mat(f, n, n, rng);
      std::vector<std::vector<std::uint32_t>> raw(n);
      for (std::size_t i = 0; i < n; ++i) raw[i] = oracle::raw(Vec(a.row(i).begin(), a.row(i).end()));
      ASSERT_EQ(determinant(a).value, det_expand(slow, raw));
      ASSERT_EQ(determinant(mat_mul(a, b)), f->mul(determinant(a), determinant(b)));
    }
  }
}

TEST(MatrixProperty, AffineSolutionSetsAreExact) {
  std::mt19937_64 rng(24);
  for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
    auto f = field_for_size(q);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + oracle::uniform(rng, 4), cols = 1 + oracle::uniform(rng, 6);
      const Mat a = random_mat(f, rows, cols, rng);
      // Half the time pick b in the column space so the system is consistent.
      Vec b(rows);
      if (trial % 2 == 0) {
        Vec x(cols);
        for (auto& v : x) v = Fe{static_cast<std::uint32_t>(oracle::uniform(rng, q))};
        b = mat_vec(a, x);
      } else {
        for (auto& v : b) v = Fe{static_cast<std::uint32_t>(oracle::uniform(rng, q))};
      }
      std::uint64_t brute = 0;
      for (const auto& x : oracle::all_words(static_cast<std::uint32_t>(q), cols))
        if (mat_vec(a, oracle::cooked(x)) == b) ++brute;

      const auto sol = solve_affine(a, b);
      if (!sol) {
        ASSERT_EQ(brute, 0u);
        continue;
      }
      std::uint64_t expected = 1;
      for (std::size_t i = sol->rank; i < cols; ++i) expected *= q;
      ASSERT_EQ(sol->basis.size(), cols - sol->rank);
      ASSERT_EQ(brute, expected);
      std::uint64_t seen = 0;
      for_each_solution(*f, *sol, [&](const Vec& x) {
        ++seen;
        ASSERT_EQ(mat_vec(a, x), b);
      });
      ASSERT_EQ(seen, expected);
    }
  }
}

TEST(MatrixProperty, NullSpacesAnnihilate) {
  std::mt19937_64 rng(25);
  auto f = field_for_size(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat a = random_mat(f, 1 + oracle::uniform(rng, 5), 1 + oracle::uniform(rng, 6), rng);
    const auto ns = null_space(a);
    ASSERT_EQ(ns.size() + rank(a), a.cols());
    for (const auto& v : ns) ASSERT_EQ(mat_vec(a, v), Vec(a.rows(), f->zero()));
    for (const auto& u : left_null_space(a)) ASSERT_EQ(mat_vec(a.transpose(), u), Vec(a.cols(), f->zero()));
  }
}
