#ifndef FLAGDESCENT_INT_LATTICE_HPP
#define FLAGDESCENT_INT_LATTICE_HPP

#include <optional>
#include <vector>

#include "flagdescent/normal_forms.hpp"
#include "flagdescent/types.hpp"

namespace flagdescent {

/// Finitely generated subgroup of Z^n. The canonical basis is the row HNF of
/// the generators, so two lattices are equal iff their bases are equal.
class IntegerLattice {
 public:
  /// The zero lattice in Z^n.
  explicit IntegerLattice(Eigen::Index ambient_dim = 0);

  /// Rows of `generators` span the lattice. Throws DimensionMismatch when the
  /// column count differs from ambient_dim.
  IntegerLattice(Eigen::Index ambient_dim, BigMatrix generators);

  Eigen::Index ambient_dim() const { return ambient_dim_; }
  Eigen::Index rank() const { return basis_.rows(); }
  bool is_zero() const { return rank() == 0; }
  bool is_full_rank() const { return rank() == ambient_dim_; }

  const BigMatrix& generators() const { return generators_; }
  const BigMatrix& basis() const { return basis_; }
  const std::vector<Eigen::Index>& pivot_columns() const { return pivots_; }

  /// Coefficients x with x * basis = v, or nullopt when v is not a member.
  std::optional<BigVector> coordinates_of(const BigVector& v) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }
  friend bool operator!=(const IntegerLattice& a, const IntegerLattice& b) { return !(a == b); }

 private:
  Eigen::Index ambient_dim_;
  BigMatrix generators_;
  BigMatrix basis_;
  std::vector<Eigen::Index> pivots_;
};

IntegerLattice lattice_from_generators(Eigen::Index ambient_dim, const std::vector<IntVector>& vectors);
IntegerLattice lattice_from_generators(Eigen::Index ambient_dim, const std::vector<BigVector>& vectors);

/// Z^n.
IntegerLattice full_lattice(Eigen::Index ambient_dim);

bool contains(const IntegerLattice& lat, const BigVector& v);
bool contains(const IntegerLattice& lat, const IntVector& v);

/// Every generator of `sub` lies in `sup`.
bool is_sublattice(const IntegerLattice& sub, const IntegerLattice& sup);

/// [sup : sub]; nullopt when the index is infinite (rank drop). Throws
/// NotASublattice unless sub is contained in sup.
std::optional<BigInt> index_in(const IntegerLattice& sub, const IntegerLattice& sup);

IntegerLattice sum(const IntegerLattice& a, const IntegerLattice& b);
IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b);

/// k * lat.
IntegerLattice scaled(const IntegerLattice& lat, const BigInt& k);

/// Abelian group sup/sub as Z^free_rank x Z/f_1 x ... x Z/f_k, f_i | f_{i+1}, f_i >= 2.
struct QuotientStructure {
  Eigen::Index free_rank{0};
  std::vector<BigInt> invariant_factors;

  bool is_finite() const { return free_rank == 0; }
  /// Order of the torsion part.
  BigInt torsion_order() const;

  friend bool operator==(const QuotientStructure& a, const QuotientStructure& b) {
    return a.free_rank == b.free_rank && a.invariant_factors == b.invariant_factors;
  }
};

/// Throws NotASublattice unless sub is contained in sup.
QuotientStructure quotient_structure(const IntegerLattice& sup, const IntegerLattice& sub);

/// Structure of Z^n / span(rows of m).
QuotientStructure cokernel_structure(const BigMatrix& rows, Eigen::Index ambient_dim);

/// Maps vectors of Z^n to canonical representatives of their class in
/// Z^n / lattice. Two vectors differ by a lattice element iff their
/// residues are equal.
class CosetClassifier {
 public:
  explicit CosetClassifier(const IntegerLattice& lattice);

  BigVector residue(const BigVector& v) const;
  BigVector residue(const IntVector& v) const { return residue(to_big(v)); }
  bool is_member(const BigVector& v) const;

 private:
  Eigen::Index ambient_dim_;
  BigMatrix right_;
  std::vector<BigInt> moduli_;
};

}  // namespace flagdescent

#endif  // FLAGDESCENT_INT_LATTICE_HPP
