#ifndef FLAGDESCENT_NORMAL_FORMS_HPP
#define FLAGDESCENT_NORMAL_FORMS_HPP

// Hermite and Smith normal forms over Z, templated on the integer scalar.
// BigInt (mpz_class) is the production instantiation; std::int64_t works for
// inputs known not to overflow.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "flagdescent/types.hpp"

namespace flagdescent {

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor_mod(const BigInt& a, const BigInt& b) { return a - floor_div(a, b) * b; }
inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

inline BigInt abs_value(const BigInt& a) { return BigInt(abs(a)); }
inline std::int64_t abs_value(std::int64_t a) { return a < 0 ? -a : a; }

template <class Scalar>
void row_axpy(Matrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q) {
  if (q == 0) return;
  for (Eigen::Index j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

template <class Scalar>
void col_axpy(Matrix<Scalar>& m, Eigen::Index dst, Eigen::Index src, const Scalar& q) {
  if (q == 0) return;
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace detail

/// U * input = [basis; 0] with U unimodular; basis is in canonical row HNF:
/// positive pivots, entries above each pivot reduced into [0, pivot).
template <class Scalar>
struct HermiteDecomposition {
  Matrix<Scalar> basis;
  Matrix<Scalar> transform;
  std::vector<Eigen::Index> pivot_columns;

  Eigen::Index rank() const { return basis.rows(); }
};

template <class Scalar>
HermiteDecomposition<Scalar> hermite_decompose(Matrix<Scalar> m, bool track_transform = false) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Matrix<Scalar> u;
  if (track_transform) u = Matrix<Scalar>::Identity(rows, rows);
  std::vector<Eigen::Index> pivots;

  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    m.row(a).swap(m.row(b));
    if (track_transform) u.row(a).swap(u.row(b));
  };
  auto reduce = [&](Eigen::Index dst, Eigen::Index src, const Scalar& q) {
    detail::row_axpy(m, dst, src, q);
    if (track_transform) detail::row_axpy(u, dst, src, q);
  };

  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        if (best < 0 || detail::abs_value(m(i, c)) < detail::abs_value(m(best, c))) best = i;
      }
      if (best < 0) break;
      swap_rows(r, best);
      bool clear = true;
      for (Eigen::Index i = r + 1; i < rows; ++i) {
        if (m(i, c) == 0) continue;
        reduce(i, r, detail::floor_div(m(i, c), m(r, c)));
        if (m(i, c) != 0) clear = false;
      }
      if (clear) break;
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0) {
      m.row(r) *= Scalar(-1);
      if (track_transform) u.row(r) *= Scalar(-1);
    }
    for (Eigen::Index i = 0; i < r; ++i) reduce(i, r, detail::floor_div(m(i, c), m(r, c)));
    pivots.push_back(c);
    ++r;
  }

  HermiteDecomposition<Scalar> out;
  out.basis = m.topRows(r);
  if (track_transform) out.transform = std::move(u);
  out.pivot_columns = std::move(pivots);
  return out;
}

template <class Scalar>
Matrix<Scalar> hermite_normal_form(const Matrix<Scalar>& m) {
  return hermite_decompose<Scalar>(m, false).basis;
}

/// Rows spanning {k : k * m = 0}, in canonical HNF.
template <class Scalar>
Matrix<Scalar> left_kernel(const Matrix<Scalar>& m) {
  auto h = hermite_decompose<Scalar>(m, true);
  const Eigen::Index r = h.rank();
  Matrix<Scalar> kernel = h.transform.bottomRows(m.rows() - r);
  return hermite_normal_form<Scalar>(kernel);
}

/// left * input * right = diag(invariants, 0...), invariants positive with
/// invariants[i] | invariants[i + 1].
template <class Scalar>
struct SmithDecomposition {
  std::vector<Scalar> invariants;
  Matrix<Scalar> left;
  Matrix<Scalar> right;

  Eigen::Index rank() const { return static_cast<Eigen::Index>(invariants.size()); }
};

template <class Scalar>
SmithDecomposition<Scalar> smith_decompose(Matrix<Scalar> m, bool track_transforms = false) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Matrix<Scalar> left, right;
  if (track_transforms) {
    left = Matrix<Scalar>::Identity(rows, rows);
    right = Matrix<Scalar>::Identity(cols, cols);
  }
  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    m.row(a).swap(m.row(b));
    if (track_transforms) left.row(a).swap(left.row(b));
  };
  auto swap_cols = [&](Eigen::Index a, Eigen::Index b) {
    if (a == b) return;
    m.col(a).swap(m.col(b));
    if (track_transforms) right.col(a).swap(right.col(b));
  };
  auto row_op = [&](Eigen::Index dst, Eigen::Index src, const Scalar& q) {
    detail::row_axpy(m, dst, src, q);
    if (track_transforms) detail::row_axpy(left, dst, src, q);
  };
  auto col_op = [&](Eigen::Index dst, Eigen::Index src, const Scalar& q) {
    detail::col_axpy(m, dst, src, q);
    if (track_transforms) detail::col_axpy(right, dst, src, q);
  };

  SmithDecomposition<Scalar> out;
  const Eigen::Index diag = std::min(rows, cols);
  for (Eigen::Index t = 0; t < diag; ++t) {
    Eigen::Index bi = -1, bj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (m(i, j) != 0 && (bi < 0 || detail::abs_value(m(i, j)) < detail::abs_value(m(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    for (;;) {
      bool clear = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        row_op(i, t, detail::floor_div(m(i, t), m(t, t)));
        if (m(i, t) != 0) clear = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        col_op(j, t, detail::floor_div(m(t, j), m(t, t)));
        if (m(t, j) != 0) clear = false;
      }
      if (!clear) {
        // Bring the smallest remainder in row/column t onto the diagonal.
        Eigen::Index si = t, sj = t;
        for (Eigen::Index i = t + 1; i < rows; ++i)
          if (m(i, t) != 0 && detail::abs_value(m(i, t)) < detail::abs_value(m(si, sj))) {
            si = i;
            sj = t;
          }
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (m(t, j) != 0 && detail::abs_value(m(t, j)) < detail::abs_value(m(si, sj))) {
            si = t;
            sj = j;
          }
        swap_rows(t, si);
        swap_cols(t, sj);
        continue;
      }
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (detail::floor_mod(m(i, j), m(t, t)) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_op(t, bad, Scalar(-1));
    }
    if (m(t, t) < 0) {
      m.row(t) *= Scalar(-1);
      if (track_transforms) left.row(t) *= Scalar(-1);
    }
    out.invariants.push_back(m(t, t));
  }
  if (track_transforms) {
    out.left = std::move(left);
    out.right = std::move(right);
  }
  return out;
}

template <class Scalar>
std::vector<Scalar> invariant_factors(const Matrix<Scalar>& m) {
  return smith_decompose<Scalar>(m, false).invariants;
}

}  // namespace flagdescent

#endif  // FLAGDESCENT_NORMAL_FORMS_HPP
