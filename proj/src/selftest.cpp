#include <sstream>
#include <utility>

#include "flagdescent/cli.hpp"
#include "flagdescent/descent.hpp"
#include "flagdescent/lattice_catalog.hpp"

namespace flagdescent {

namespace {

struct ThetaRow {
  const char* type;
  const char* theta;
  std::int64_t d;
};

// Highest roots and d as tabulated.
constexpr ThetaRow kThetaRows[] = {
    {"A3", "a1 + a2 + a3", 1},
    {"B3", "a1 + 2a2 + 2a3", 2},
    {"C3", "2a1 + 2a2 + a3", 2},
    {"D5", "a1 + 2a2 + 2a3 + a4 + a5", 2},
    {"G2", "3a1 + 2a2", 6},
    {"F4", "2a1 + 3a2 + 4a3 + 2a4", 12},
    {"E6", "a1 + 2a2 + 2a3 + 3a4 + 2a5 + a6", 6},
    {"E7", "2a1 + 2a2 + 3a3 + 4a4 + 3a5 + 2a6 + a7", 12},
    {"E8", "2a1 + 3a2 + 4a3 + 6a4 + 5a5 + 4a6 + 3a7 + 2a8", 60},
};

class Suite {
 public:
  template <class Fn>
  void add(std::string name, Fn&& fn) {
    SelfTestCase c{std::move(name), false, {}};
    try {
      std::ostringstream detail;
      c.passed = fn(detail);
      c.detail = detail.str();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    cases_.push_back(std::move(c));
  }

  std::vector<SelfTestCase> take() { return std::move(cases_); }

 private:
  std::vector<SelfTestCase> cases_;
};

Outcome outcome_of(const char* type, Weight l, Weight m, Weight n) {
  const RootSystem rs = parse_root_system(type);
  return verdict(rs, l, m, n).outcome;
}

}  // namespace

std::vector<SelfTestCase> run_selftest() {
  Suite s;

  for (const auto& row : kThetaRows) {
    s.add(std::string("theta and d for ") + row.type, [&](std::ostream& d) {
      const RootSystem rs = parse_root_system(row.type);
      d << format_root_sum(rs.theta()) << ", d = " << rs.d();
      return format_root_sum(rs.theta()) == row.theta && rs.d() == row.d;
    });
  }

  s.add("SL(2): descends iff b1 + b2 + b3 is even", [](std::ostream& d) {
    int bad = 0;
    for (int b1 = 1; b1 <= 4; ++b1)
      for (int b2 = 1; b2 <= 4; ++b2)
        for (int b3 = 1; b3 <= 4; ++b3) {
          const Outcome want = (b1 + b2 + b3) % 2 ? Outcome::DoesNotDescend : Outcome::Descends;
          if (outcome_of("A1", {b1}, {b2}, {b3}) != want) ++bad;
        }
    d << bad << " mismatches";
    return bad == 0;
  });

  s.add("SL(3): descends iff 3 divides the sum of a_i + b_i", [](std::ostream& d) {
    int bad = 0;
    for (int x = 1; x <= 3; ++x)
      for (int y = 1; y <= 3; ++y)
        for (int z = 1; z <= 3; ++z) {
          const Weight l{x, 1}, m{1, y}, n{z, z};
          // lambda = (a - b) w1 + b w2
          const int total = (l[0] + 2 * l[1]) + (m[0] + 2 * m[1]) + (n[0] + 2 * n[1]);
          const Outcome want = total % 3 ? Outcome::DoesNotDescend : Outcome::Descends;
          if (outcome_of("A2", l, m, n) != want) ++bad;
        }
    d << bad << " mismatches";
    return bad == 0;
  });

  s.add("SL(2) stabilizer of a generic point is {+-I}", [](std::ostream& d) {
    const RootSystem rs = parse_root_system("A1");
    const auto st = stabilizer_structure(rs, {rs.simple_root(0)});
    d << "rank " << st.torus_rank << ", " << st.finite_factors.size() << " factors";
    return st.torus_rank == 0 && st.finite_factors == std::vector<BigInt>{2};
  });

  s.add("SL(3) stabilizers: T, C^*, and the three element group", [](std::ostream& d) {
    const RootSystem rs = parse_root_system("A2");
    const auto t = stabilizer_structure(rs, {});
    const auto c = stabilizer_structure(rs, {rs.simple_root(0)});
    const auto z = stabilizer_structure(rs, {rs.simple_root(0), rs.simple_root(1)});
    d << "ranks " << t.torus_rank << "," << c.torus_rank << "," << z.torus_rank;
    return t.torus_rank == 2 && t.divisible() && c.torus_rank == 1 && c.divisible() && z.torus_rank == 0 &&
           z.finite_factors == std::vector<BigInt>{3};
  });

  for (const char* type : {"A2", "B3", "C2", "G2"}) {
    s.add(std::string("(2rho, rho, rho) has one invariant in ") + type, [type](std::ostream& d) {
      const RootSystem rs = parse_root_system(type);
      const Weight r = rho(rs);
      const BigInt n1 = triple_invariant_dim(rs, 2 * r, r, r);
      const BigInt n2 = triple_invariant_dim(rs, 4 * r, 2 * r, 2 * r);
      const WeylElement w0 = longest_element(rs);
      const bool zero_char = pairing_character(rs, 2 * r, r, r, w0, w0).is_zero();
      d << "N=1: " << n1 << ", N=2: " << n2;
      return n1 == 1 && n2 == 1 && zero_char;
    });
  }

  s.add("(2rho, rho, rho) in B3 escapes the uniform conditions", [](std::ostream& d) {
    const RootSystem rs = parse_root_system("B3");
    const Weight r = rho(rs);
    const bool thm56 = sufficient_thm56(rs, 2 * r, r, r);
    d << "thm56 " << (thm56 ? "true" : "false");
    return necessary_condition(rs, 2 * r, r, r) && !thm56;
  });

  s.add("G2: root lattice equals weight lattice", [](std::ostream&) {
    const RootSystem rs = parse_root_system("G2");
    return root_lattice(rs) == weight_lattice(rs);
  });

  const std::pair<const char*, long> index_rows[] = {{"A3", 1}, {"B3", 8}, {"C3", 4},
                                                     {"D4", 4}, {"G2", 12}, {"F4", 5184}};
  for (const auto& [type, expected] : index_rows) {
    s.add(std::string("[Q : Gamma] for ") + type, [type = type, expected = expected](std::ostream& d) {
      const RootSystem rs = parse_root_system(type);
      const auto idx = index_in(gamma_lattice(rs), root_lattice(rs));
      d << (idx ? idx->get_str() : "inf");
      return idx && *idx == expected;
    });
  }

  for (const char* type : {"A4", "B4", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"}) {
    s.add(std::string("dQ in Gamma in Q for ") + type, [type](std::ostream&) {
      const RootSystem rs = parse_root_system(type);
      const IntegerLattice gamma = gamma_lattice(rs);
      return is_sublattice(scaled_root_lattice(rs, static_cast<int>(rs.d())), gamma) &&
             is_sublattice(gamma, root_lattice(rs));
    });
    s.add(std::string("Gamma against d Lambda for ") + type, [type](std::ostream& d) {
      const RootSystem rs = parse_root_system(type);
      const IntegerLattice gamma = gamma_lattice(rs);
      const IntegerLattice dl = scaled_weight_lattice(rs, static_cast<int>(rs.d()));
      const bool exceptional = rs.family() == Family::G || rs.family() == Family::F;
      d << (exceptional ? "d Lambda in Gamma" : "Gamma in d Lambda");
      return exceptional ? is_sublattice(dl, gamma) : is_sublattice(gamma, dl);
    });
  }

  s.add("B3 (2,2,2),(2,2,2),(2,2,4) satisfies the main criterion", [](std::ostream& d) {
    const RootSystem rs = parse_root_system("B3");
    const DescentVerdict v = verdict(rs, {2, 2, 2}, {2, 2, 2}, {2, 2, 4});
    d << to_string(v.outcome);
    return v.outcome == Outcome::Descends && v.find(Rule::SufficientThm56)->result == RuleResult::True;
  });

  s.add("A1 (1,1,1) is refuted by the root lattice test", [](std::ostream& d) {
    const RootSystem rs = parse_root_system("A1");
    const DescentVerdict v = verdict(rs, {1}, {1}, {1});
    d << to_string(v.outcome);
    return v.outcome == Outcome::DoesNotDescend && v.find(Rule::NecessaryQ)->result == RuleResult::False;
  });

  return s.take();
}

}  // namespace flagdescent
