#include "flagdescent/descent.hpp"

#include <limits>
#include <map>
#include <sstream>

#include "flagdescent/lattice_catalog.hpp"

namespace flagdescent {

namespace {

using nlohmann::json;

void require_regular(const RootSystem& rs, const Weight& w, const char* name) {
  check_rank(rs, w.size(), name);
  if (!is_dominant_regular(w)) {
    std::ostringstream os;
    os << name << ' ' << w << " is not dominant regular";
    throw NotDominantRegular(os.str());
  }
}

void require_triple(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu) {
  require_regular(rs, lambda, "lambda");
  require_regular(rs, mu, "mu");
  require_regular(rs, nu, "nu");
}

bool in_scaled_weight_lattice(const Weight& w, std::int64_t d) {
  for (Eigen::Index i = 0; i < w.size(); ++i)
    if (w[i] % d != 0) return false;
  return true;
}

RuleResult as_result(bool b) { return b ? RuleResult::True : RuleResult::False; }

struct ResidueKey {
  BigVector v;
  bool operator<(const ResidueKey& o) const {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      if (v(i) != o.v(i)) return v(i) < o.v(i);
    return false;
  }
};

// Groups the images w(weight), w in W, by their class modulo `classifier`.
// Returns per-element class ids and one representative weight per class.
std::pair<std::vector<std::size_t>, std::vector<Weight>> classify_orbit(const RootSystem& rs,
                                                                        const std::vector<WeylElement>& group,
                                                                        const Weight& weight,
                                                                        const CosetClassifier& classifier) {
  std::map<ResidueKey, std::size_t> ids;
  std::vector<std::size_t> class_of;
  std::vector<Weight> reps;
  class_of.reserve(group.size());
  std::map<Weight, std::size_t> image_class;
  for (const auto& w : group) {
    Weight image = apply(rs, w, weight);
    auto cached = image_class.find(image);
    if (cached != image_class.end()) {
      class_of.push_back(cached->second);
      continue;
    }
    ResidueKey key{classifier.residue(image.vec())};
    auto [it, inserted] = ids.emplace(std::move(key), reps.size());
    if (inserted) reps.push_back(image);
    image_class.emplace(std::move(image), it->second);
    class_of.push_back(it->second);
  }
  return {std::move(class_of), std::move(reps)};
}

}  // namespace

bool necessary_condition(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu) {
  require_triple(rs, lambda, mu, nu);
  return contains(root_lattice(rs), (lambda + mu + nu).vec());
}

bool sufficient_thm56(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu) {
  require_triple(rs, lambda, mu, nu);
  const IntegerLattice gamma = gamma_lattice(rs);
  const std::int64_t d = rs.d();
  return in_scaled_weight_lattice(lambda, d) && in_scaled_weight_lattice(mu, d) &&
         in_scaled_weight_lattice(nu, d) && contains(gamma, (lambda + mu + nu).vec());
}

bool sufficient_gamma_cor(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu) {
  require_triple(rs, lambda, mu, nu);
  const IntegerLattice gamma = gamma_lattice(rs);
  return contains(gamma, lambda.vec()) && contains(gamma, mu.vec()) && contains(gamma, nu.vec());
}

Weight pairing_character(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                         const WeylElement& w1, const WeylElement& w2) {
  check_rank(rs, lambda.size(), "lambda");
  return lambda + apply(rs, w1, mu) + apply(rs, w2, nu);
}

IntegerLattice generic_pair_lattice(const RootSystem& rs, const WeylElement& w1, const WeylElement& w2) {
  std::vector<IntVector> gens;
  for (const WeylElement* w : {&w1, &w2})
    for (const auto& beta : inversion_set(rs, inverse(rs, *w))) gens.push_back(root_to_weight_coords(rs, beta).vec());
  return lattice_from_generators(rs.rank(), gens);
}

AllPairsResult thm22_all_pairs(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                               std::uint64_t size_bound) {
  require_triple(rs, lambda, mu, nu);
  const IntegerLattice gamma = gamma_lattice(rs);
  const std::uint64_t order = weyl_group_order(rs);
  const bool overflow = order > std::numeric_limits<std::uint32_t>::max();
  if (overflow || order * order > size_bound) throw overflow ? GroupTooLarge(order, size_bound) : GroupTooLarge(order * order, size_bound, "|W|^2");
  const auto group = enumerate(rs, size_bound);

  // Membership in Gamma depends only on classes modulo Gamma, so test one
  // representative per class pair and scan element pairs only on failure.
  const CosetClassifier classifier(gamma);
  const auto [mu_class, mu_reps] = classify_orbit(rs, group, mu, classifier);
  const auto [nu_class, nu_reps] = classify_orbit(rs, group, nu, classifier);
  std::vector<std::vector<bool>> ok(mu_reps.size(), std::vector<bool>(nu_reps.size()));
  bool all_ok = true;
  for (std::size_t j = 0; j < mu_reps.size(); ++j)
    for (std::size_t k = 0; k < nu_reps.size(); ++k) {
      ok[j][k] = classifier.is_member(to_big((lambda + mu_reps[j] + nu_reps[k]).vec()));
      all_ok = all_ok && ok[j][k];
    }

  AllPairsResult result;
  if (all_ok) {
    result.pairs_checked = order * order;
    return result;
  }
  for (std::size_t a = 0; a < group.size(); ++a) {
    for (std::size_t b = 0; b < group.size(); ++b) {
      ++result.pairs_checked;
      if (ok[mu_class[a]][nu_class[b]]) continue;
      result.holds = false;
      result.w1 = group[a];
      result.w2 = group[b];
      result.character = pairing_character(rs, lambda, mu, nu, group[a], group[b]);
      return result;
    }
  }
  return result;
}

StabilizerStructure stabilizer_structure(const RootSystem& rs, const std::vector<RootCoords>& roots) {
  BigMatrix rows(static_cast<Eigen::Index>(roots.size()), rs.rank());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    check_rank(rs, roots[i].size(), "root");
    if (!rs.is_root(roots[i])) {
      std::ostringstream os;
      os << roots[i] << " is not a root of " << rs.name();
      throw NotARoot(os.str());
    }
    rows.row(static_cast<Eigen::Index>(i)) = to_big(root_to_weight_coords(rs, roots[i]).vec()).transpose();
  }
  const QuotientStructure q = cokernel_structure(rows, rs.rank());
  return {q.free_rank, q.invariant_factors};
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Descends:
      return "Descends";
    case Outcome::DoesNotDescend:
      return "DoesNotDescend";
    case Outcome::Unknown:
      return "Unknown";
  }
  return {};
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::NecessaryQ:
      return "NecessaryQ";
    case Rule::SufficientThm56:
      return "SufficientThm56";
    case Rule::SufficientGammaCor:
      return "SufficientGammaCor";
    case Rule::Thm22AllPairs:
      return "Thm22AllPairs";
    case Rule::SemistableProbe:
      return "SemistableProbe";
  }
  return {};
}

std::string to_string(RuleResult r) {
  switch (r) {
    case RuleResult::True:
      return "true";
    case RuleResult::False:
      return "false";
    case RuleResult::NotApplicable:
      return "na";
  }
  return {};
}

Outcome outcome_from_string(const std::string& s) {
  for (Outcome o : {Outcome::Descends, Outcome::DoesNotDescend, Outcome::Unknown})
    if (to_string(o) == s) return o;
  throw Error("unknown outcome '" + s + "'");
}

Rule rule_from_string(const std::string& s) {
  for (Rule r : {Rule::NecessaryQ, Rule::SufficientThm56, Rule::SufficientGammaCor, Rule::Thm22AllPairs,
                 Rule::SemistableProbe})
    if (to_string(r) == s) return r;
  throw Error("unknown rule '" + s + "'");
}

RuleResult rule_result_from_string(const std::string& s) {
  for (RuleResult r : {RuleResult::True, RuleResult::False, RuleResult::NotApplicable})
    if (to_string(r) == s) return r;
  throw Error("unknown rule result '" + s + "'");
}

const RuleRecord* DescentVerdict::find(Rule r) const {
  for (const auto& rec : reasons)
    if (rec.rule == r) return &rec;
  return nullptr;
}

DescentVerdict verdict(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                       const VerdictOptions& options) {
  require_triple(rs, lambda, mu, nu);
  DescentVerdict v;
  v.type = rs.name();
  v.rank = rs.rank();
  v.lambda = lambda;
  v.mu = mu;
  v.nu = nu;

  const Weight total = lambda + mu + nu;
  const bool necessary = necessary_condition(rs, lambda, mu, nu);
  v.reasons.push_back({Rule::NecessaryQ, as_result(necessary), json{{"sum", total.to_std()}, {"lattice", "Q"}}});

  const bool tabled = has_gamma_lattice(rs);
  bool sufficient = false;
  if (tabled) {
    const IntegerLattice gamma = gamma_lattice(rs);
    const std::int64_t d = rs.d();
    const bool in_d[3] = {in_scaled_weight_lattice(lambda, d), in_scaled_weight_lattice(mu, d),
                          in_scaled_weight_lattice(nu, d)};
    const bool sum_in_gamma = contains(gamma, total.vec());
    const bool thm56 = in_d[0] && in_d[1] && in_d[2] && sum_in_gamma;
    v.reasons.push_back({Rule::SufficientThm56, as_result(thm56),
                         json{{"d", d},
                              {"in_d_lambda", {in_d[0], in_d[1], in_d[2]}},
                              {"sum_in_gamma", sum_in_gamma}}});
    const bool in_gamma[3] = {contains(gamma, lambda.vec()), contains(gamma, mu.vec()), contains(gamma, nu.vec())};
    const bool cor = in_gamma[0] && in_gamma[1] && in_gamma[2];
    v.reasons.push_back(
        {Rule::SufficientGammaCor, as_result(cor), json{{"in_gamma", {in_gamma[0], in_gamma[1], in_gamma[2]}}}});
    sufficient = thm56 || cor;
  } else {
    const json why{{"reason", "no tabulated Gamma lattice for " + rs.name()}};
    v.reasons.push_back({Rule::SufficientThm56, RuleResult::NotApplicable, why});
    v.reasons.push_back({Rule::SufficientGammaCor, RuleResult::NotApplicable, why});
  }

  if (!necessary) {
    v.reasons.push_back({Rule::Thm22AllPairs, RuleResult::NotApplicable, json{{"reason", "necessary condition fails"}}});
  } else if (sufficient) {
    v.reasons.push_back(
        {Rule::Thm22AllPairs, RuleResult::NotApplicable, json{{"reason", "an earlier sufficient rule holds"}}});
  } else if (!tabled) {
    v.reasons.push_back(
        {Rule::Thm22AllPairs, RuleResult::NotApplicable, json{{"reason", "no tabulated Gamma lattice for " + rs.name()}}});
  } else {
    try {
      const AllPairsResult all = thm22_all_pairs(rs, lambda, mu, nu, options.size_bound);
      json witness{{"pairs_checked", all.pairs_checked}};
      if (!all.holds) {
        witness["w1"] = all.w1->word_one_based();
        witness["w2"] = all.w2->word_one_based();
        witness["character"] = all.character->to_std();
      }
      v.reasons.push_back({Rule::Thm22AllPairs, as_result(all.holds), witness});
      sufficient = all.holds;
    } catch (const GroupTooLarge& e) {
      v.reasons.push_back({Rule::Thm22AllPairs, RuleResult::NotApplicable,
                           json{{"reason", "W x W too large"}, {"pairs", e.order()}, {"size_bound", e.bound()}}});
    }
  }

  v.outcome = !necessary ? Outcome::DoesNotDescend : sufficient ? Outcome::Descends : Outcome::Unknown;

  if (options.run_probe) {
    try {
      const ProbeResult p = semistable_probe(rs, lambda, mu, nu, options.n_max, options.work_bound);
      v.probe = p;
      if (p.kind == ProbeResult::Kind::NonEmpty)
        v.reasons.push_back({Rule::SemistableProbe, RuleResult::True, json{{"kind", "NonEmpty"}, {"n", p.n}}});
      else
        v.reasons.push_back({Rule::SemistableProbe, RuleResult::NotApplicable, json{{"kind", "EmptyUpTo"}, {"n", p.n}}});
    } catch (const WorkBoundExceeded& e) {
      throw VerdictIncomplete(e, v);
    }
  }
  return v;
}

}  // namespace flagdescent
