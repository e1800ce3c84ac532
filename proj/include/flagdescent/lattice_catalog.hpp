#ifndef FLAGDESCENT_LATTICE_CATALOG_HPP
#define FLAGDESCENT_LATTICE_CATALOG_HPP

#include <vector>

#include "flagdescent/int_lattice.hpp"
#include "flagdescent/root_system.hpp"

namespace flagdescent {

// All catalog lattices live in Z^rank, fundamental-weight coordinates. The
// character lattice of the simply connected group is the weight lattice.

/// Q: span of the simple roots (Cartan columns).
IntegerLattice root_lattice(const RootSystem& rs);

/// Lambda = Z^rank.
IntegerLattice weight_lattice(const RootSystem& rs);

/// k * Lambda, k >= 1.
IntegerLattice scaled_weight_lattice(const RootSystem& rs, int k);

/// k * Q, k >= 1.
IntegerLattice scaled_root_lattice(const RootSystem& rs, int k);

/// Whether gamma_lattice is tabulated for rs: A>=1, B>=3, C>=2, D>=4, E, F4, G2.
bool has_gamma_lattice(const RootSystem& rs);

/// Intersection of all finite-index sublattices Z S, S a set of positive roots.
/// Throws RankOutOfTableRange when !has_gamma_lattice(rs).
IntegerLattice gamma_lattice(const RootSystem& rs);

/// Generators of gamma_lattice in simple-root coordinates, for the types whose
/// table entry is given over the roots (empty for the C and E6/E7 entries,
/// which are multiples of Lambda).
std::vector<RootCoords> gamma_root_generators(const RootSystem& rs);

}  // namespace flagdescent

#endif  // FLAGDESCENT_LATTICE_CATALOG_HPP
