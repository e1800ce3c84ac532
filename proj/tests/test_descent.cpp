#include <gtest/gtest.h>

#include <random>

#include "flagdescent/descent.hpp"
#include "flagdescent/lattice_catalog.hpp"

using namespace flagdescent;

namespace {

Weight random_regular(std::mt19937_64& rng, int rank, int max_coord) {
  std::uniform_int_distribution<int> c(1, max_coord);
  Weight w = Weight::zero(rank);
  for (int i = 0; i < rank; ++i) w[i] = c(rng);
  return w;
}

// Direct W x W loop.
bool all_pairs_naive(const RootSystem& rs, const Weight& l, const Weight& m, const Weight& n) {
  const IntegerLattice gamma = gamma_lattice(rs);
  const auto group = enumerate(rs);
  for (const auto& w1 : group)
    for (const auto& w2 : group)
      if (!contains(gamma, pairing_character(rs, l, m, n, w1, w2).vec())) return false;
  return true;
}

}  // namespace

TEST(Descent, NecessaryCondition) {
  const RootSystem a1 = parse_root_system("A1");
  EXPECT_FALSE(necessary_condition(a1, {1}, {1}, {1}));
  EXPECT_TRUE(necessary_condition(a1, {1}, {1}, {2}));
  const RootSystem a2 = parse_root_system("A2");
  EXPECT_TRUE(necessary_condition(a2, {2, 2}, {1, 1}, {1, 1}));
  // Weight (a - b, b) contributes a + b: here 3 + 3 + 6 = 12, then 3 + 3 + 5 = 11.
  EXPECT_TRUE(necessary_condition(a2, {1, 1}, {1, 1}, {2, 2}));
  EXPECT_FALSE(necessary_condition(a2, {1, 1}, {1, 1}, {3, 1}));
  EXPECT_THROW(necessary_condition(a2, {0, 1}, {1, 1}, {1, 1}), NotDominantRegular);
  EXPECT_THROW(necessary_condition(a2, {1}, {1, 1}, {1, 1}), DimensionMismatch);
}

TEST(Descent, UniformSufficientConditions) {
  const RootSystem a2 = parse_root_system("A2");
  EXPECT_TRUE(sufficient_thm56(a2, {2, 2}, {1, 1}, {1, 1}));

  const RootSystem b3 = parse_root_system("B3");
  const Weight r = rho(b3);
  EXPECT_FALSE(sufficient_thm56(b3, 2 * r, 2 * r, 2 * r));
  EXPECT_TRUE(sufficient_thm56(b3, {2, 2, 2}, {2, 2, 2}, {2, 2, 4}));
  // 2 w1 lies in 2 Lambda and 6 w1 = 6(a1 + a2 + a3) lies in 2Q = Gamma.
  EXPECT_TRUE(contains(scaled_weight_lattice(b3, 2), Weight{2, 0, 0}.vec()));
  EXPECT_TRUE(contains(gamma_lattice(b3), Weight{6, 0, 0}.vec()));
  EXPECT_EQ(weight_to_root_coords(b3, {1, 0, 0}), (RootCoords{1, 1, 1}));

  const RootSystem g2 = parse_root_system("G2");
  EXPECT_TRUE(sufficient_gamma_cor(g2, {6, 6}, {6, 6}, {6, 6}));
  EXPECT_TRUE(contains(gamma_lattice(g2), root_to_weight_coords(g2, {6, 2}).vec()));
  EXPECT_TRUE(sufficient_gamma_cor(a2, {1, 1}, {1, 1}, {1, 1}));
  EXPECT_FALSE(sufficient_gamma_cor(parse_root_system("C2"), {1, 1}, {1, 1}, {1, 1}));
  EXPECT_THROW(sufficient_thm56(parse_root_system("B2"), {1, 1}, {1, 1}, {1, 1}), RankOutOfTableRange);
}

TEST(Descent, PairingCharacterAndGenericLattices) {
  const RootSystem a2 = parse_root_system("A2");
  const WeylElement w0 = longest_element(a2);
  const WeylElement e = WeylElement::identity(a2);
  EXPECT_TRUE(pairing_character(a2, {2, 2}, {1, 1}, {1, 1}, w0, w0).is_zero());
  EXPECT_EQ(pairing_character(a2, {1, 2}, {3, 1}, {1, 1}, e, e), (Weight{5, 4}));
  const RootSystem a1 = parse_root_system("A1");
  EXPECT_EQ(pairing_character(a1, {2}, {2}, {2}, WeylElement::from_word(a1, {0}), WeylElement::identity(a1)),
            (Weight{2}));

  EXPECT_TRUE(generic_pair_lattice(a2, e, e).is_zero());
  EXPECT_EQ(generic_pair_lattice(a2, w0, w0), root_lattice(a2));
  EXPECT_EQ(generic_pair_lattice(a2, WeylElement::from_word(a2, {0}), WeylElement::from_word(a2, {1})),
            root_lattice(a2));
  EXPECT_EQ(generic_pair_lattice(a2, WeylElement::from_word(a2, {0}), e).rank(), 1);
}

TEST(Descent, AllPairsRule) {
  const RootSystem a2 = parse_root_system("A2");
  const auto a = thm22_all_pairs(a2, {2, 2}, {1, 1}, {1, 1});
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.pairs_checked, 36u);

  const auto c = thm22_all_pairs(parse_root_system("C2"), {1, 1}, {1, 1}, {1, 1});
  EXPECT_FALSE(c.holds);
  EXPECT_TRUE(c.w1->is_identity());
  EXPECT_TRUE(c.w2->is_identity());
  EXPECT_EQ(*c.character, (Weight{3, 3}));

  EXPECT_TRUE(thm22_all_pairs(parse_root_system("A1"), {2}, {2}, {2}).holds);
  EXPECT_THROW(thm22_all_pairs(parse_root_system("F4"), {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}), GroupTooLarge);
}

TEST(Descent, AllPairsAgreesWithDirectLoop) {
  std::mt19937_64 rng(31);
  for (const char* t : {"A2", "B3", "C2", "G2", "D4"}) {
    const RootSystem rs = parse_root_system(t);
    for (int k = 0; k < (rs.rank() > 2 ? 8 : 40); ++k) {
      const Weight l = random_regular(rng, rs.rank(), 12), m = random_regular(rng, rs.rank(), 12),
                   n = random_regular(rng, rs.rank(), 12);
      const auto fast = thm22_all_pairs(rs, l, m, n);
      EXPECT_EQ(fast.holds, all_pairs_naive(rs, l, m, n)) << t << l << m << n;
      if (!fast.holds)
        EXPECT_FALSE(contains(gamma_lattice(rs), pairing_character(rs, l, m, n, *fast.w1, *fast.w2).vec()));
    }
  }
}

TEST(Descent, UniformRulesImplyAllPairsRule) {
  std::mt19937_64 rng(32);
  for (const char* t : {"A2", "B3", "C2", "C3", "G2"}) {
    const RootSystem rs = parse_root_system(t);
    const int scale = static_cast<int>(rs.d());
    for (int k = 0; k < 60; ++k) {
      // Bias towards multiples of d so the uniform rules fire often.
      Weight l = random_regular(rng, rs.rank(), 4), m = random_regular(rng, rs.rank(), 4),
             n = random_regular(rng, rs.rank(), 4);
      if (k % 2) {
        l = scale * l;
        m = scale * m;
        n = scale * n;
      }
      if (sufficient_thm56(rs, l, m, n) || sufficient_gamma_cor(rs, l, m, n))
        EXPECT_TRUE(thm22_all_pairs(rs, l, m, n).holds) << t << l << m << n;
    }
  }
}

TEST(Descent, DifferenceUnderWeylIsInRootLattice) {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> c(-9, 9);
  for (const char* t : {"A3", "B3", "C2", "D4", "G2", "F4"}) {
    const RootSystem rs = parse_root_system(t);
    const auto group = enumerate(rs);
    const IntegerLattice q = root_lattice(rs);
    for (int k = 0; k < 50; ++k) {
      Weight l = Weight::zero(rs.rank());
      for (int i = 0; i < rs.rank(); ++i) l[i] = c(rng);
      const auto& w = group[rng() % group.size()];
      EXPECT_TRUE(contains(q, (l - apply(rs, w, l)).vec()));
    }
  }
}

TEST(Descent, StabilizerStructures) {
  const RootSystem a1 = parse_root_system("A1");
  const auto pm = stabilizer_structure(a1, {{1}});
  EXPECT_EQ(pm.torus_rank, 0);
  EXPECT_EQ(pm.finite_factors, std::vector<BigInt>{2});
  EXPECT_FALSE(pm.divisible());

  const RootSystem a2 = parse_root_system("A2");
  const auto mu3 = stabilizer_structure(a2, {{1, 0}, {0, 1}});
  EXPECT_EQ(mu3.torus_rank, 0);
  EXPECT_EQ(mu3.finite_factors, std::vector<BigInt>{3});
  const auto cstar = stabilizer_structure(a2, {{1, 0}});
  EXPECT_EQ(cstar.torus_rank, 1);
  EXPECT_TRUE(cstar.divisible());

  // All simple roots cut out the center, Z/2 x Z/2 for D4.
  const RootSystem d4 = parse_root_system("D4");
  std::vector<RootCoords> simple;
  for (int i = 0; i < 4; ++i) simple.push_back(d4.simple_root(i));
  EXPECT_EQ(stabilizer_structure(d4, simple).finite_factors, (std::vector<BigInt>{2, 2}));
  EXPECT_THROW(stabilizer_structure(a2, {{2, 0}}), NotARoot);
}

TEST(Descent, Verdicts) {
  const RootSystem a1 = parse_root_system("A1");
  const auto v1 = verdict(a1, {1}, {1}, {1});
  EXPECT_EQ(v1.outcome, Outcome::DoesNotDescend);
  EXPECT_EQ(v1.find(Rule::NecessaryQ)->result, RuleResult::False);

  const RootSystem a2 = parse_root_system("A2");
  VerdictOptions opts;
  opts.run_probe = true;
  const auto v2 = verdict(a2, {2, 2}, {1, 1}, {1, 1}, opts);
  EXPECT_EQ(v2.outcome, Outcome::Descends);
  EXPECT_EQ(v2.find(Rule::SufficientThm56)->result, RuleResult::True);
  ASSERT_TRUE(v2.probe.has_value());
  EXPECT_EQ(*v2.probe, ProbeResult::non_empty(1));

  const RootSystem b3 = parse_root_system("B3");
  const Weight r = rho(b3);
  const auto v3 = verdict(b3, 2 * r, 2 * r, 2 * r);
  EXPECT_EQ(v3.outcome, Outcome::Unknown);
  EXPECT_EQ(v3.find(Rule::NecessaryQ)->result, RuleResult::True);
  EXPECT_EQ(v3.find(Rule::SufficientThm56)->result, RuleResult::False);
  const auto* all = v3.find(Rule::Thm22AllPairs);
  EXPECT_EQ(all->result, RuleResult::False);
  EXPECT_TRUE(all->witness["w1"].empty());
  EXPECT_TRUE(all->witness["w2"].empty());

  // Rules are reported in evaluation order.
  ASSERT_GE(v3.reasons.size(), 4u);
  EXPECT_EQ(v3.reasons[0].rule, Rule::NecessaryQ);
  EXPECT_EQ(v3.reasons[1].rule, Rule::SufficientThm56);
  EXPECT_EQ(v3.reasons[2].rule, Rule::SufficientGammaCor);
  EXPECT_EQ(v3.reasons[3].rule, Rule::Thm22AllPairs);
}

TEST(Descent, VerdictResourceHandling) {
  const RootSystem f4 = parse_root_system("F4");
  const Weight one{1, 1, 1, 1};
  const auto v = verdict(f4, 2 * one, one, one);
  EXPECT_EQ(v.find(Rule::Thm22AllPairs)->result, RuleResult::NotApplicable);

  const auto b2 = verdict(parse_root_system("B2"), {1, 1}, {1, 1}, {2, 2});
  EXPECT_EQ(b2.find(Rule::SufficientThm56)->result, RuleResult::NotApplicable);
  EXPECT_EQ(b2.outcome, Outcome::Unknown);

  VerdictOptions opts;
  opts.run_probe = true;
  opts.work_bound = 5;
  try {
    verdict(parse_root_system("B3"), {1, 1, 1}, {1, 1, 1}, {2, 2, 2}, opts);
    FAIL() << "expected VerdictIncomplete";
  } catch (const VerdictIncomplete& e) {
    EXPECT_EQ(e.partial().reasons.size(), 4u);
    EXPECT_FALSE(e.partial().probe.has_value());
  }
}
