#include "flagdescent/int_lattice.hpp"

#include <string>

#include "flagdescent/errors.hpp"

namespace flagdescent {

namespace {

void require_dim(Eigen::Index expected, Eigen::Index got, const char* what) {
  if (expected != got)
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(expected) + ", got " +
                            std::to_string(got));
}

BigMatrix stack_rows(const BigMatrix& a, const BigMatrix& b, Eigen::Index cols) {
  BigMatrix out(a.rows() + b.rows(), cols);
  if (a.rows()) out.topRows(a.rows()) = a;
  if (b.rows()) out.bottomRows(b.rows()) = b;
  return out;
}

// Coordinates of each basis row of `sub` over the basis of `sup`.
BigMatrix relative_coordinates(const IntegerLattice& sub, const IntegerLattice& sup) {
  require_dim(sup.ambient_dim(), sub.ambient_dim(), "sublattice");
  BigMatrix coords(sub.rank(), sup.rank());
  for (Eigen::Index i = 0; i < sub.rank(); ++i) {
    auto x = sup.coordinates_of(sub.basis().row(i).transpose());
    if (!x) throw NotASublattice("basis row " + std::to_string(i) + " is not in the containing lattice");
    if (sup.rank()) coords.row(i) = x->transpose();
  }
  return coords;
}

}  // namespace

IntegerLattice::IntegerLattice(Eigen::Index ambient_dim)
    : ambient_dim_(ambient_dim), generators_(0, ambient_dim), basis_(0, ambient_dim) {}

IntegerLattice::IntegerLattice(Eigen::Index ambient_dim, BigMatrix generators)
    : ambient_dim_(ambient_dim), generators_(std::move(generators)) {
  if (generators_.rows() == 0) generators_.resize(0, ambient_dim_);
  require_dim(ambient_dim_, generators_.cols(), "generator matrix");
  auto h = hermite_decompose<BigInt>(generators_, false);
  basis_ = std::move(h.basis);
  if (basis_.rows() == 0) basis_.resize(0, ambient_dim_);
  pivots_ = std::move(h.pivot_columns);
}

std::optional<BigVector> IntegerLattice::coordinates_of(const BigVector& v) const {
  require_dim(ambient_dim_, v.size(), "vector");
  BigVector residual = v;
  BigVector x(rank());
  for (Eigen::Index k = 0; k < rank(); ++k) {
    const Eigen::Index p = pivots_[static_cast<std::size_t>(k)];
    for (Eigen::Index c = (k ? pivots_[static_cast<std::size_t>(k - 1)] + 1 : 0); c < p; ++c)
      if (residual(c) != 0) return std::nullopt;
    if (detail::floor_mod(residual(p), basis_(k, p)) != 0) return std::nullopt;
    x(k) = residual(p) / basis_(k, p);
    for (Eigen::Index c = p; c < ambient_dim_; ++c) residual(c) -= x(k) * basis_(k, c);
  }
  for (Eigen::Index c = 0; c < ambient_dim_; ++c)
    if (residual(c) != 0) return std::nullopt;
  return x;
}

IntegerLattice lattice_from_generators(Eigen::Index ambient_dim, const std::vector<BigVector>& vectors) {
  BigMatrix g(static_cast<Eigen::Index>(vectors.size()), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    require_dim(ambient_dim, vectors[i].size(), "generator");
    g.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  return IntegerLattice(ambient_dim, std::move(g));
}

IntegerLattice lattice_from_generators(Eigen::Index ambient_dim, const std::vector<IntVector>& vectors) {
  std::vector<BigVector> big;
  big.reserve(vectors.size());
  for (const auto& v : vectors) big.push_back(to_big(v));
  return lattice_from_generators(ambient_dim, big);
}

IntegerLattice full_lattice(Eigen::Index ambient_dim) {
  return IntegerLattice(ambient_dim, BigMatrix::Identity(ambient_dim, ambient_dim));
}

bool contains(const IntegerLattice& lat, const BigVector& v) { return lat.coordinates_of(v).has_value(); }
bool contains(const IntegerLattice& lat, const IntVector& v) { return contains(lat, to_big(v)); }

bool is_sublattice(const IntegerLattice& sub, const IntegerLattice& sup) {
  require_dim(sup.ambient_dim(), sub.ambient_dim(), "sublattice");
  for (Eigen::Index i = 0; i < sub.rank(); ++i)
    if (!contains(sup, BigVector(sub.basis().row(i).transpose()))) return false;
  return true;
}

std::optional<BigInt> index_in(const IntegerLattice& sub, const IntegerLattice& sup) {
  const BigMatrix coords = relative_coordinates(sub, sup);
  if (sub.rank() < sup.rank()) return std::nullopt;
  BigInt index = 1;
  for (const auto& f : invariant_factors<BigInt>(coords)) index *= f;
  return index;
}

IntegerLattice sum(const IntegerLattice& a, const IntegerLattice& b) {
  require_dim(a.ambient_dim(), b.ambient_dim(), "lattice sum");
  return IntegerLattice(a.ambient_dim(), stack_rows(a.basis(), b.basis(), a.ambient_dim()));
}

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b) {
  require_dim(a.ambient_dim(), b.ambient_dim(), "lattice intersection");
  if (a.is_zero() || b.is_zero()) return IntegerLattice(a.ambient_dim());
  // x * Ba = y * Bb  <=>  (x, -y) in the left kernel of [Ba; Bb].
  const BigMatrix kernel = left_kernel<BigInt>(stack_rows(a.basis(), b.basis(), a.ambient_dim()));
  if (kernel.rows() == 0) return IntegerLattice(a.ambient_dim());
  BigMatrix gens = kernel.leftCols(a.rank()) * a.basis();
  return IntegerLattice(a.ambient_dim(), std::move(gens));
}

IntegerLattice scaled(const IntegerLattice& lat, const BigInt& k) {
  BigMatrix g = lat.basis();
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) *= k;
  return IntegerLattice(lat.ambient_dim(), std::move(g));
}

BigInt QuotientStructure::torsion_order() const {
  BigInt order = 1;
  for (const auto& f : invariant_factors) order *= f;
  return order;
}

QuotientStructure quotient_structure(const IntegerLattice& sup, const IntegerLattice& sub) {
  const BigMatrix coords = relative_coordinates(sub, sup);
  QuotientStructure q;
  q.free_rank = sup.rank() - sub.rank();
  for (auto& f : invariant_factors<BigInt>(coords))
    if (f > 1) q.invariant_factors.push_back(std::move(f));
  return q;
}

QuotientStructure cokernel_structure(const BigMatrix& rows, Eigen::Index ambient_dim) {
  require_dim(ambient_dim, rows.cols(), "relation matrix");
  const auto factors = invariant_factors<BigInt>(rows);
  QuotientStructure q;
  q.free_rank = ambient_dim - static_cast<Eigen::Index>(factors.size());
  for (const auto& f : factors)
    if (f > 1) q.invariant_factors.push_back(f);
  return q;
}

CosetClassifier::CosetClassifier(const IntegerLattice& lattice) : ambient_dim_(lattice.ambient_dim()) {
  if (lattice.is_zero()) {
    right_ = BigMatrix::Identity(ambient_dim_, ambient_dim_);
    return;
  }
  auto snf = smith_decompose<BigInt>(lattice.basis(), true);
  right_ = std::move(snf.right);
  moduli_ = std::move(snf.invariants);
}

BigVector CosetClassifier::residue(const BigVector& v) const {
  require_dim(ambient_dim_, v.size(), "vector");
  BigVector y = (v.transpose() * right_).transpose();
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    y(k) = detail::floor_mod(y(k), moduli_[i]);
  }
  return y;
}

bool CosetClassifier::is_member(const BigVector& v) const {
  const BigVector y = residue(v);
  for (Eigen::Index i = 0; i < y.size(); ++i)
    if (y(i) != 0) return false;
  return true;
}

}  // namespace flagdescent
