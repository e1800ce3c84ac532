#ifndef FLAGDESCENT_ROOT_SYSTEM_HPP
#define FLAGDESCENT_ROOT_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flagdescent/types.hpp"

namespace flagdescent {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// Immutable data of a simple root system, Bourbaki numbering.
///
/// Cartan convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so column j is
/// alpha_j written over the fundamental weights. The invariant form is
/// normalized by (alpha_i, alpha_i) = 2 * symmetrizer[i]; short roots have
/// squared length 2.
class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// "A2", "E8", ...
  std::string name() const;

  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<std::int64_t>& symmetrizer() const { return symmetrizer_; }
  const std::vector<RootCoords>& positive_roots() const { return positive_roots_; }
  const RootCoords& theta() const { return positive_roots_.back(); }
  std::int64_t d() const { return d_; }
  std::int64_t cartan_determinant() const { return cartan_det_; }

  RootCoords simple_root(int i) const { return RootCoords::unit(rank_, i); }
  /// alpha_i in fundamental-weight coordinates (column i of the Cartan matrix).
  Weight simple_root_weight(int i) const { return Weight(IntVector(cartan_.col(i))); }

  /// True for positive and negative roots.
  bool is_root(const RootCoords& r) const;
  bool is_positive_root(const RootCoords& r) const;
  /// Index into positive_roots(), or -1.
  int positive_root_index(const RootCoords& r) const;

  /// (beta, nu) for beta in the root lattice and nu over fundamental weights.
  std::int64_t pairing(const RootCoords& beta, const Weight& nu) const;
  /// (beta, gamma) for two root-lattice elements.
  std::int64_t form(const RootCoords& beta, const RootCoords& gamma) const;

 private:
  friend RootSystem build_root_system(Family family, int rank);

  Family family_{Family::A};
  int rank_{0};
  IntMatrix cartan_;
  IntMatrix cartan_adjugate_;
  std::int64_t cartan_det_{1};
  std::vector<std::int64_t> symmetrizer_;
  std::vector<RootCoords> positive_roots_;
  std::unordered_map<RootCoords, int, CoordsHash> root_index_;
  std::int64_t d_{1};

  friend std::optional<RootCoords> weight_to_root_coords(const RootSystem& rs, const Weight& w);
};

/// Throws InvalidType for pairs outside A>=1, B>=2, C>=2, D>=4, E6-8, F4, G2.
RootSystem build_root_system(Family family, int rank);

/// Parses "A2", "e8", "D4", ... Throws InvalidType.
RootSystem parse_root_system(std::string_view type_name);

/// Whether (family, rank) names a constructible simple type.
bool is_admissible_type(Family family, int rank);

Weight root_to_weight_coords(const RootSystem& rs, const RootCoords& r);

/// Inverse conversion; nullopt when w is not in the root lattice.
std::optional<RootCoords> weight_to_root_coords(const RootSystem& rs, const Weight& w);

/// rho = sum of fundamental weights = half the sum of the positive roots.
Weight rho(const RootSystem& rs);

/// Sum of positive roots (= 2 rho) in simple-root coordinates.
RootCoords positive_root_sum(const RootSystem& rs);

std::int64_t height(const RootCoords& r);

/// Coxeter number from the family/rank formula.
int coxeter_number(Family family, int rank);

/// |W| from the family/rank formula.
std::uint64_t weyl_group_order(const RootSystem& rs);

bool is_dominant(const Weight& w);
bool is_dominant_regular(const Weight& w);

/// Throws DimensionMismatch when a vector has the wrong length for rs.
void check_rank(const RootSystem& rs, Eigen::Index size, const char* what);

/// "a1 + 2a2 + 2a3" rendering of a root-lattice element.
std::string format_root_sum(const RootCoords& r);

}  // namespace flagdescent

#endif  // FLAGDESCENT_ROOT_SYSTEM_HPP
