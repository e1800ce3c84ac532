#ifndef FLAGDESCENT_DESCENT_HPP
#define FLAGDESCENT_DESCENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagdescent/errors.hpp"
#include "flagdescent/int_lattice.hpp"
#include "flagdescent/rep_mult.hpp"
#include "flagdescent/root_system.hpp"
#include "flagdescent/weyl.hpp"

namespace flagdescent {

// Descent of L(lambda, mu, nu) on (G/B)^3 to the GIT quotient by G.
// All weights are in fundamental-weight coordinates and must be dominant
// regular (NotDominantRegular otherwise).

/// lambda + mu + nu in Q. Failing it refutes descent.
bool necessary_condition(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu);

/// lambda, mu, nu in d Lambda and lambda + mu + nu in Gamma. Throws RankOutOfTableRange.
bool sufficient_thm56(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu);

/// lambda, mu, nu all in Gamma. Throws RankOutOfTableRange.
bool sufficient_gamma_cor(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu);

/// lambda + w1 mu + w2 nu.
Weight pairing_character(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                         const WeylElement& w1, const WeylElement& w2);

/// Z-span of R(w1^-1) and R(w2^-1): the lattice L_x at a generic point over (w1, w2).
IntegerLattice generic_pair_lattice(const RootSystem& rs, const WeylElement& w1, const WeylElement& w2);

struct AllPairsResult {
  bool holds{true};
  /// First failing pair in enumeration order, with its character.
  std::optional<WeylElement> w1, w2;
  std::optional<Weight> character;
  std::uint64_t pairs_checked{0};
};

/// lambda + w1 mu + w2 nu in Gamma for every (w1, w2) in W x W. Throws
/// GroupTooLarge when |W|^2 > size_bound, RankOutOfTableRange.
AllPairsResult thm22_all_pairs(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                               std::uint64_t size_bound = kDefaultWeylSizeBound);

/// Structure of the subtorus cut out by the characters in `roots`:
/// (C^*)^torus_rank x prod Z/f_i.
struct StabilizerStructure {
  Eigen::Index torus_rank{0};
  std::vector<BigInt> finite_factors;
  bool divisible() const { return finite_factors.empty(); }

  friend bool operator==(const StabilizerStructure& a, const StabilizerStructure& b) {
    return a.torus_rank == b.torus_rank && a.finite_factors == b.finite_factors;
  }
};

/// Throws NotARoot.
StabilizerStructure stabilizer_structure(const RootSystem& rs, const std::vector<RootCoords>& roots);

enum class Outcome { Descends, DoesNotDescend, Unknown };
enum class Rule { NecessaryQ, SufficientThm56, SufficientGammaCor, Thm22AllPairs, SemistableProbe };
enum class RuleResult { True, False, NotApplicable };

std::string to_string(Outcome o);
std::string to_string(Rule r);
std::string to_string(RuleResult r);
Outcome outcome_from_string(const std::string& s);
Rule rule_from_string(const std::string& s);
RuleResult rule_result_from_string(const std::string& s);

struct RuleRecord {
  Rule rule;
  RuleResult result;
  nlohmann::json witness;

  friend bool operator==(const RuleRecord& a, const RuleRecord& b) {
    return a.rule == b.rule && a.result == b.result && a.witness == b.witness;
  }
};

struct DescentVerdict {
  std::string type;
  int rank{0};
  Weight lambda, mu, nu;
  Outcome outcome{Outcome::Unknown};
  std::vector<RuleRecord> reasons;
  std::optional<ProbeResult> probe;

  const RuleRecord* find(Rule r) const;

  friend bool operator==(const DescentVerdict& a, const DescentVerdict& b) {
    return a.type == b.type && a.rank == b.rank && a.lambda == b.lambda && a.mu == b.mu && a.nu == b.nu &&
           a.outcome == b.outcome && a.reasons == b.reasons && a.probe == b.probe;
  }
};

struct VerdictOptions {
  int n_max{8};
  std::uint64_t size_bound{kDefaultWeylSizeBound};
  bool run_probe{false};
  std::size_t work_bound{kDefaultWorkBound};
};

/// Raised when the probe exceeds its work bound; carries the verdict built so far.
class VerdictIncomplete : public WorkBoundExceeded {
 public:
  VerdictIncomplete(const WorkBoundExceeded& cause, DescentVerdict partial)
      : WorkBoundExceeded(cause.what(), cause.at_n()), partial_(std::move(partial)) {}
  const DescentVerdict& partial() const { return partial_; }

 private:
  DescentVerdict partial_;
};

/// NecessaryQ first (false refutes), then Thm56, GammaCor, and the all-pairs
/// check (skipped when a cheaper rule already succeeded or W x W is too
/// large). Any true sufficient rule gives Descends, otherwise Unknown.
DescentVerdict verdict(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                       const VerdictOptions& options = {});

}  // namespace flagdescent

#endif  // FLAGDESCENT_DESCENT_HPP
