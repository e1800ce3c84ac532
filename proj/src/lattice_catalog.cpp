#include "flagdescent/lattice_catalog.hpp"

#include <string>

#include "flagdescent/errors.hpp"

namespace flagdescent {

namespace {

IntegerLattice from_root_generators(const RootSystem& rs, const std::vector<RootCoords>& roots) {
  std::vector<IntVector> gens;
  gens.reserve(roots.size());
  for (const auto& r : roots) gens.push_back(root_to_weight_coords(rs, r).vec());
  return lattice_from_generators(rs.rank(), gens);
}

RootCoords simple(const RootSystem& rs, int one_based, std::int64_t k = 1) {
  return k * rs.simple_root(one_based - 1);
}

}  // namespace

IntegerLattice root_lattice(const RootSystem& rs) {
  return IntegerLattice(rs.rank(), to_big(IntMatrix(rs.cartan().transpose())));
}

IntegerLattice weight_lattice(const RootSystem& rs) { return full_lattice(rs.rank()); }

IntegerLattice scaled_weight_lattice(const RootSystem& rs, int k) {
  if (k < 1) throw Error("lattice scale must be >= 1");
  return scaled(weight_lattice(rs), BigInt(k));
}

IntegerLattice scaled_root_lattice(const RootSystem& rs, int k) {
  if (k < 1) throw Error("lattice scale must be >= 1");
  return scaled(root_lattice(rs), BigInt(k));
}

bool has_gamma_lattice(const RootSystem& rs) {
  switch (rs.family()) {
    case Family::A:
      return rs.rank() >= 1;
    case Family::B:
      return rs.rank() >= 3;
    case Family::C:
      return rs.rank() >= 2;
    case Family::D:
      return rs.rank() >= 4;
    default:
      return true;
  }
}

std::vector<RootCoords> gamma_root_generators(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<RootCoords> g;
  switch (rs.family()) {
    case Family::A:
      for (int i = 1; i <= n; ++i) g.push_back(simple(rs, i));
      break;
    case Family::B:
      for (int i = 1; i <= n; ++i) g.push_back(simple(rs, i, 2));
      break;
    case Family::D:
      if (n == 4) {
        // n1 a1 + 2 n2 a2 + n3 a3 + n4 a4 with n1 + n3 + n4 even.
        g = {simple(rs, 1, 2), simple(rs, 2, 2), simple(rs, 1) + simple(rs, 3), simple(rs, 1) + simple(rs, 4)};
      } else {
        // 2 n1 a1 + ... + 2 n_{l-2} a_{l-2} + n_{l-1} a_{l-1} + n_l a_l with n_{l-1} + n_l even.
        for (int i = 1; i <= n - 2; ++i) g.push_back(simple(rs, i, 2));
        g.push_back(simple(rs, n - 1) + simple(rs, n));
        g.push_back(simple(rs, n - 1, 2));
      }
      break;
    case Family::G:
      g = {simple(rs, 1, 6), simple(rs, 2, 2)};
      break;
    case Family::F:
      g = {simple(rs, 1, 6), simple(rs, 2, 6), simple(rs, 3, 12), simple(rs, 4, 12)};
      break;
    case Family::E:
      if (n == 8)
        for (int i = 1; i <= n; ++i) g.push_back(simple(rs, i, 60));
      break;
    case Family::C:
      break;
  }
  return g;
}

IntegerLattice gamma_lattice(const RootSystem& rs) {
  if (!has_gamma_lattice(rs)) throw RankOutOfTableRange("no tabulated Gamma lattice for " + rs.name());
  if (rs.family() == Family::C) return scaled_weight_lattice(rs, 2);
  if (rs.family() == Family::E && rs.rank() == 6) return scaled_weight_lattice(rs, 6);
  if (rs.family() == Family::E && rs.rank() == 7) return scaled_weight_lattice(rs, 12);
  return from_root_generators(rs, gamma_root_generators(rs));
}

}  // namespace flagdescent
