#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <Eigen/LU>

#include "flagdescent/errors.hpp"
#include "flagdescent/int_lattice.hpp"
#include "oracles.hpp"

using namespace flagdescent;

namespace {

IntVector iv(std::initializer_list<std::int64_t> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (auto x : xs) v(i++) = x;
  return v;
}

IntegerLattice lat(Eigen::Index n, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<IntVector> v;
  for (auto r : rows) v.push_back(iv(r));
  return lattice_from_generators(n, v);
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int bound) {
  std::uniform_int_distribution<int> c(-bound, bound);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = c(rng);
  return m;
}

}  // namespace

TEST(NormalForms, HermiteIsCanonicalAndTransformIsExact) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 4);
    const BigMatrix m = to_big(random_matrix(rng, rows, cols, 6));
    const auto h = hermite_decompose<BigInt>(m, true);
    const BigMatrix prod = h.transform * m;
    EXPECT_EQ(BigMatrix(prod.topRows(h.rank())), h.basis);
    for (Eigen::Index i = h.rank(); i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) EXPECT_EQ(prod(i, j), 0);
    Matrix<double> u(rows, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < rows; ++j) u(i, j) = h.transform(i, j).get_d();
    EXPECT_NEAR(std::abs(u.determinant()), 1.0, 1e-6);
    for (Eigen::Index k = 0; k < h.rank(); ++k) {
      const Eigen::Index p = h.pivot_columns[static_cast<std::size_t>(k)];
      EXPECT_GT(h.basis(k, p), 0);
      for (Eigen::Index i = 0; i < k; ++i) {
        EXPECT_GE(h.basis(i, p), 0);
        EXPECT_LT(h.basis(i, p), h.basis(k, p));
      }
      for (Eigen::Index j = 0; j < p; ++j) EXPECT_EQ(h.basis(k, j), 0);
    }
    // Row operations on the generators leave the canonical basis unchanged.
    BigMatrix shuffled = m;
    if (rows > 1) {
      shuffled.row(0) += 3 * shuffled.row(rows - 1);
      shuffled.row(0).swap(shuffled.row(rows - 1));
    }
    EXPECT_EQ(hermite_normal_form<BigInt>(shuffled), h.basis);
  }
}

TEST(NormalForms, SmithDiagonalizesWithDivisibility) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    const BigMatrix m = to_big(random_matrix(rng, rows, cols, 8));
    const auto s = smith_decompose<BigInt>(m, true);
    const BigMatrix d = s.left * m * s.right;
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) {
        if (i == j && i < s.rank())
          EXPECT_EQ(d(i, j), s.invariants[static_cast<std::size_t>(i)]);
        else
          EXPECT_EQ(d(i, j), 0);
      }
    for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) {
      EXPECT_GT(s.invariants[i], 0);
      EXPECT_EQ(s.invariants[i + 1] % s.invariants[i], 0);
    }
  }
}

TEST(NormalForms, LeftKernel) {
  const BigMatrix m = to_big(IntMatrix((IntMatrix(3, 2) << 1, 2, 2, 4, 3, 6).finished()));
  const BigMatrix k = left_kernel<BigInt>(m);
  ASSERT_EQ(k.rows(), 2);
  EXPECT_TRUE((k * m).isZero());
}

TEST(IntegerLattice, Construction) {
  const auto a = lat(2, {{2, 0}, {3, 0}});
  EXPECT_EQ(a.rank(), 1);
  EXPECT_EQ(a.basis(), to_big(IntMatrix((IntMatrix(1, 2) << 1, 0).finished())));

  const auto z = lattice_from_generators(2, std::vector<IntVector>{});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.rank(), 0);

  const auto q = lat(2, {{2, -1}, {-1, 2}});
  EXPECT_EQ(q.rank(), 2);
  EXPECT_EQ(*index_in(q, full_lattice(2)), 3);
  EXPECT_THROW(lat(2, {{1, 2, 3}}), DimensionMismatch);
}

TEST(IntegerLattice, Membership) {
  const auto q = lat(2, {{2, -1}, {-1, 2}});
  EXPECT_TRUE(contains(q, iv({2, -1})));
  EXPECT_FALSE(contains(q, iv({1, 0})));
  EXPECT_TRUE(contains(q, iv({0, 0})));
  EXPECT_TRUE(contains(lattice_from_generators(3, std::vector<IntVector>{}), iv({0, 0, 0})));
  EXPECT_THROW(contains(q, iv({1, 0, 0})), DimensionMismatch);

  // Box oracle for Q(A2): c1 - c2 = 0 mod 3.
  for (int x = -5; x <= 5; ++x)
    for (int y = -5; y <= 5; ++y) EXPECT_EQ(contains(q, iv({x, y})), ((x - y) % 3 + 3) % 3 == 0);
}

TEST(IntegerLattice, IndexSumIntersect) {
  const auto q = lat(2, {{2, -1}, {-1, 2}});
  EXPECT_EQ(*index_in(q, full_lattice(2)), 3);
  EXPECT_EQ(*index_in(scaled(q, 2), q), 4);
  EXPECT_FALSE(index_in(lat(2, {{2, -1}}), q).has_value());
  EXPECT_THROW(index_in(full_lattice(2), q), NotASublattice);

  EXPECT_EQ(sum(lat(2, {{2, 0}}), lat(2, {{0, 2}})), scaled(full_lattice(2), 2));
  EXPECT_TRUE(intersect(lat(2, {{1, 0}}), lat(2, {{0, 1}})).is_zero());
  EXPECT_EQ(intersect(scaled(full_lattice(2), 2), scaled(full_lattice(2), 3)), scaled(full_lattice(2), 6));
}

TEST(IntegerLattice, QuotientStructure) {
  const auto two = quotient_structure(full_lattice(2), scaled(full_lattice(2), 2));
  EXPECT_EQ(two.free_rank, 0);
  EXPECT_EQ(two.invariant_factors, (std::vector<BigInt>{2, 2}));

  const auto a2 = quotient_structure(full_lattice(2), lat(2, {{2, -1}, {-1, 2}}));
  EXPECT_EQ(a2.invariant_factors, std::vector<BigInt>{3});
  EXPECT_EQ(a2.torsion_order(), 3);

  const auto line = quotient_structure(full_lattice(2), lat(2, {{1, 0}}));
  EXPECT_EQ(line.free_rank, 1);
  EXPECT_TRUE(line.invariant_factors.empty());
}

TEST(IntegerLattice, CosetClassifierAgreesWithMembership) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const IntegerLattice l(n, to_big(random_matrix(rng, 1 + static_cast<int>(rng() % 4), n, 4)));
    const CosetClassifier cls(l);
    for (int k = 0; k < 40; ++k) {
      IntVector a(n), b(n);
      for (int i = 0; i < n; ++i) {
        a(i) = c(rng);
        b(i) = c(rng);
      }
      EXPECT_EQ(cls.is_member(to_big(a)), contains(l, a));
      EXPECT_EQ(cls.residue(a) == cls.residue(b), contains(l, IntVector(a - b)));
    }
  }
}

TEST(IntegerLattice, AgreesWithModularModel) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<int> c(-12, 12);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const std::int64_t D = 2 + static_cast<std::int64_t>(rng() % 5);
    IntMatrix U, Uinv;
    oracle::random_unimodular(rng, n, U, Uinv);
    ASSERT_EQ(U * Uinv, IntMatrix::Identity(n, n));
    const int r1 = 1 + static_cast<int>(rng() % n), r2 = 1 + static_cast<int>(rng() % n);
    const auto m1 = oracle::random_mod_lattice(rng, n, r1, D, U, Uinv);
    const auto m2 = oracle::random_mod_lattice(rng, n, r2, D, U, Uinv);
    const IntegerLattice l1 = m1.build(), l2 = m2.build();
    const auto ms = oracle::mod_sum(m1, m2), mx = oracle::mod_intersect(m1, m2);
    const IntegerLattice s = sum(l1, l2), x = intersect(l1, l2);
    EXPECT_EQ(s, ms.build());
    EXPECT_EQ(x, mx.build());
    const auto idx = index_in(l1, full_lattice(n));
    EXPECT_EQ(idx ? idx->get_si() : 0, oracle::mod_index(m1));
    for (int k = 0; k < 100; ++k) {
      IntVector w(n);
      for (int i = 0; i < n; ++i) w(i) = k % 2 ? c(rng) * D : c(rng);
      if (k % 3 == 0 && n > 1) w(n - 1) = 0;
      const IntVector v = (w.transpose() * U).transpose();
      EXPECT_EQ(contains(l1, v), m1.contains(v));
      EXPECT_EQ(contains(s, v), ms.contains(v));
      EXPECT_EQ(contains(x, v), mx.contains(v));
    }
  }
}
