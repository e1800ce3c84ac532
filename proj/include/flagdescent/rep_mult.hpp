#ifndef FLAGDESCENT_REP_MULT_HPP
#define FLAGDESCENT_REP_MULT_HPP

#include <cstddef>
#include <map>

#include "flagdescent/root_system.hpp"

namespace flagdescent {

/// Default cap on character support size (number of weights) per computation.
constexpr std::size_t kDefaultWorkBound = 100'000;

/// Weight multiplicities of the irreducible module V(highest_weight).
struct CharacterTable {
  Weight highest_weight;
  std::map<Weight, BigInt> mults;

  BigInt dimension() const;
  /// Zero for weights outside the support.
  BigInt multiplicity(const Weight& mu) const;
};

/// Throws NotDominant.
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Freudenthal recursion restricted to the dominant chamber. Throws
/// NotDominant, and WorkBoundExceeded when there are more than `work_bound`
/// dominant weights.
std::map<Weight, BigInt> dominant_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                 std::size_t work_bound = kDefaultWorkBound);

/// Full character, from the dominant multiplicities spread over W-orbits.
CharacterTable weight_multiplicities(const RootSystem& rs, const Weight& lambda,
                                     std::size_t work_bound = kDefaultWorkBound);

/// Height cap of the brute-force partition count.
constexpr std::int64_t kDefaultKostantHeightBound = 40;

/// Number of ways to write v as a sum of positive roots, by exhaustive
/// enumeration. Only for rank <= 3 and height(v) <= height_bound; throws
/// WorkBoundExceeded otherwise.
BigInt kostant_partition(const RootSystem& rs, const RootCoords& v,
                         std::int64_t height_bound = kDefaultKostantHeightBound);

/// Multiplicity of V(target) in V(lambda) (x) V(mu), by summing the
/// rho-shifted reflections of the weights of the lower-dimensional factor.
BigInt tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& target,
                           std::size_t work_bound = kDefaultWorkBound);

/// All nonzero multiplicities in V(lambda) (x) V(mu).
std::map<Weight, BigInt> tensor_decomposition(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                              std::size_t work_bound = kDefaultWorkBound);

/// dim [V(lambda) (x) V(mu) (x) V(nu)]^G = mult of V(-w0 lambda) in V(mu) (x) V(nu).
BigInt triple_invariant_dim(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                            std::size_t work_bound = kDefaultWorkBound);

/// One-sided semistability probe: the least N <= n_max with nonzero invariants
/// of (N lambda, N mu, N nu), or EmptyUpTo(n_max). Never asserts emptiness.
struct ProbeResult {
  enum class Kind { NonEmpty, EmptyUpTo };
  Kind kind{Kind::EmptyUpTo};
  int n{0};

  static ProbeResult non_empty(int n) { return {Kind::NonEmpty, n}; }
  static ProbeResult empty_up_to(int n) { return {Kind::EmptyUpTo, n}; }

  friend bool operator==(const ProbeResult& a, const ProbeResult& b) { return a.kind == b.kind && a.n == b.n; }
};

/// Throws NotDominantRegular (NotDominant when require_regular is false),
/// and WorkBoundExceeded carrying the N at which the bound tripped.
ProbeResult semistable_probe(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                             int n_max, std::size_t work_bound = kDefaultWorkBound, bool require_regular = true);

}  // namespace flagdescent

#endif  // FLAGDESCENT_REP_MULT_HPP
