#include "flagdescent/cli.hpp"

#include <cctype>
#include <charconv>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "flagdescent/descent.hpp"
#include "flagdescent/lattice_catalog.hpp"
#include "flagdescent/serialization.hpp"

namespace flagdescent::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kThetaTypes = {"A4", "B4", "C4", "D5", "G2", "F4", "E6", "E7", "E8"};
const std::vector<std::string> kGammaTypes = {"A4", "B4", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"};

struct WeightArgs {
  std::string lambda, mu, nu;
  std::string basis = "weight";
};

void add_weight_options(CLI::App* cmd, WeightArgs& w, bool required) {
  auto* l = cmd->add_option("--lambda", w.lambda, "first weight, comma-separated");
  auto* m = cmd->add_option("--mu", w.mu, "second weight");
  auto* n = cmd->add_option("--nu", w.nu, "third weight");
  if (required) {
    l->required();
    m->required();
    n->required();
  }
  cmd->add_option("--basis", w.basis, "coordinates of the weights: weight (default) or root")
      ->check(CLI::IsMember({"weight", "root"}));
}

Weight to_weight(const RootSystem& rs, const std::string& text, const std::string& basis, const char* name) {
  IntVector v = parse_int_list(text);
  check_rank(rs, v.size(), name);
  if (basis == "root") return root_to_weight_coords(rs, RootCoords(std::move(v)));
  return Weight(std::move(v));
}

std::string format_weight(const Weight& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::string format_big(const BigInt& x) { return x.get_str(); }

std::string format_factors(const std::vector<BigInt>& factors) {
  std::string s = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "," : "") + factors[i].get_str();
  return s + "]";
}

std::string format_basis(const IntegerLattice& lat) { return to_json(lat).dump(); }

std::string format_probe(const ProbeResult& p) {
  return (p.kind == ProbeResult::Kind::NonEmpty ? "NonEmpty(" : "EmptyUpTo(") + std::to_string(p.n) + ")";
}

void print_verdict_text(const DescentVerdict& v, std::ostream& out) {
  out << "type: " << v.type << "\n";
  out << "lambda: " << v.lambda << "  mu: " << v.mu << "  nu: " << v.nu << "\n";
  out << "outcome: " << to_string(v.outcome) << "\n";
  for (const auto& r : v.reasons)
    out << "  " << std::left << std::setw(20) << to_string(r.rule) << std::setw(6) << to_string(r.result) << ' '
        << r.witness.dump() << "\n";
  if (v.probe) out << "probe: " << format_probe(*v.probe) << "\n";
}

int cmd_check(const std::string& type, const WeightArgs& w, int n_max, std::uint64_t size_bound, bool probe,
              const std::string& output, std::ostream& out) {
  const RootSystem rs = parse_root_system(type);
  const Weight lambda = to_weight(rs, w.lambda, w.basis, "--lambda");
  const Weight mu = to_weight(rs, w.mu, w.basis, "--mu");
  const Weight nu = to_weight(rs, w.nu, w.basis, "--nu");
  VerdictOptions opts;
  opts.n_max = n_max;
  opts.size_bound = size_bound;
  opts.run_probe = probe;
  const DescentVerdict v = verdict(rs, lambda, mu, nu, opts);
  if (output == "json")
    out << to_json(v).dump(2) << "\n";
  else
    print_verdict_text(v, out);
  return kOk;
}

int cmd_tables(const std::string& what, std::vector<std::string> types, const std::string& output,
               std::ostream& out) {
  if (what == "theta") {
    if (types.empty()) types = kThetaTypes;
    if (output == "text") {
      out << theta_table_text(types);
      return kOk;
    }
    json rows = json::array();
    for (const auto& t : types) {
      const RootSystem rs = parse_root_system(t);
      rows.push_back(json{{"type", rs.name()}, {"theta", rs.theta().to_std()}, {"theta_text", format_root_sum(rs.theta())},
                          {"d", rs.d()}});
    }
    out << json{{"theta", rows}}.dump(2) << "\n";
    return kOk;
  }
  if (what == "gamma") {
    if (types.empty()) types = kGammaTypes;
    json rows = json::array();
    for (const auto& t : types) {
      const RootSystem rs = parse_root_system(t);
      const IntegerLattice gamma = gamma_lattice(rs);
      const BigInt index = *index_in(gamma, root_lattice(rs));
      if (output == "text")
        out << std::left << std::setw(4) << rs.name() << "  [Q:Gamma] = " << std::setw(16) << format_big(index)
            << "  basis = " << format_basis(gamma) << "\n";
      else
        rows.push_back(json{{"type", rs.name()}, {"basis", to_json(gamma)}, {"index_in_Q", big_to_json(index)}});
    }
    if (output == "json") out << json{{"gamma", rows}}.dump(2) << "\n";
    return kOk;
  }
  // rootsys
  if (types.empty()) throw Error("tables --what rootsys needs --type");
  json rows = json::array();
  for (const auto& t : types) rows.push_back(to_json(parse_root_system(t)));
  out << (rows.size() == 1 ? rows[0] : rows).dump(output == "json" ? 2 : -1) << "\n";
  return kOk;
}

int cmd_mult(const std::string& type, const WeightArgs& w, int n_max, std::size_t work_bound, bool dominant_only,
             const std::string& output, std::ostream& out) {
  const RootSystem rs = parse_root_system(type);
  const Weight lambda = to_weight(rs, w.lambda, w.basis, "--lambda");
  const Weight mu = to_weight(rs, w.mu, w.basis, "--mu");
  const Weight nu = to_weight(rs, w.nu, w.basis, "--nu");
  const BigInt dim = triple_invariant_dim(rs, lambda, mu, nu, work_bound);
  const ProbeResult probe = semistable_probe(rs, lambda, mu, nu, n_max, work_bound, !dominant_only);
  if (output == "json") {
    out << json{{"type", rs.name()},
                {"lambda", lambda.to_std()},
                {"mu", mu.to_std()},
                {"nu", nu.to_std()},
                {"triple_invariant_dim", big_to_json(dim)},
                {"probe", to_json(probe)}}
               .dump(2)
        << "\n";
  } else {
    out << "type: " << rs.name() << "\n";
    out << "dim [V" << lambda << " x V" << mu << " x V" << nu << "]^G = " << dim << "\n";
    out << "probe: " << format_probe(probe) << "\n";
  }
  return kOk;
}

int cmd_explore(const std::string& type, const WeightArgs& w, std::uint64_t size_bound, const std::string& output,
                std::ostream& out) {
  const RootSystem rs = parse_root_system(type);
  const bool with_weights = !w.lambda.empty() || !w.mu.empty() || !w.nu.empty();
  std::optional<Weight> lambda, mu, nu;
  if (with_weights) {
    if (w.lambda.empty() || w.mu.empty() || w.nu.empty()) throw Error("explore needs all of --lambda --mu --nu or none");
    lambda = to_weight(rs, w.lambda, w.basis, "--lambda");
    mu = to_weight(rs, w.mu, w.basis, "--mu");
    nu = to_weight(rs, w.nu, w.basis, "--nu");
  }
  const std::uint64_t order = weyl_group_order(rs);
  if (order > 0xffffffffULL) throw GroupTooLarge(order, size_bound);
  if (order * order > size_bound) throw GroupTooLarge(order * order, size_bound, "|W|^2");
  const auto group = enumerate(rs, size_bound);
  const IntegerLattice q = root_lattice(rs);
  json pairs = json::array();
  for (const auto& w1 : group) {
    for (const auto& w2 : group) {
      const IntegerLattice lat = generic_pair_lattice(rs, w1, w2);
      const auto index = index_in(lat, q);
      json row{{"w1", to_json(w1)}, {"w2", to_json(w2)}, {"basis", to_json(lat)},
               {"index_in_Q", index ? big_to_json(*index) : json("inf")}};
      std::string member;
      if (with_weights) {
        const Weight chi = pairing_character(rs, *lambda, *mu, *nu, w1, w2);
        const bool in = contains(lat, chi.vec());
        row["character"] = chi.to_std();
        row["contains_character"] = in;
        member = "  " + format_weight(chi) + (in ? " in L" : " not in L");
      }
      if (output == "json")
        pairs.push_back(std::move(row));
      else
        out << "w1=" << to_json(w1).dump() << " w2=" << to_json(w2).dump() << "  [Q:L]="
            << (index ? format_big(*index) : std::string("inf")) << "  basis=" << format_basis(lat) << member << "\n";
    }
  }
  if (output == "json") out << json{{"type", rs.name()}, {"pairs", pairs}}.dump(2) << "\n";
  return kOk;
}

int cmd_stab(const std::string& type, const std::string& roots, const std::string& output, std::ostream& out) {
  const RootSystem rs = parse_root_system(type);
  const StabilizerStructure s = stabilizer_structure(rs, parse_root_list(rs, roots));
  if (output == "json")
    out << to_json(s).dump(2) << "\n";
  else
    out << "torus_rank: " << s.torus_rank << "\nfinite_factors: " << format_factors(s.finite_factors)
        << "\ndivisible: " << (s.divisible() ? "true" : "false") << "\n";
  return kOk;
}

int cmd_selftest(const std::string& output, std::ostream& out) {
  const auto cases = run_selftest();
  std::size_t passed = 0;
  json rows = json::array();
  for (const auto& c : cases) {
    passed += c.passed ? 1 : 0;
    if (output == "json")
      rows.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    else
      out << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  }
  const std::size_t failed = cases.size() - passed;
  if (output == "json")
    out << json{{"passed", passed}, {"failed", failed}, {"cases", rows}}.dump(2) << "\n";
  else
    out << "selftest: " << passed << " passed, " << failed << " failed\n";
  return failed ? kSelfTestFailed : kOk;
}

}  // namespace

IntVector parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::int64_t x = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, x);
    if (token.empty() || ec != std::errc() || ptr != last) throw Error("malformed integer list '" + text + "'");
    values.push_back(x);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  IntVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

RootCoords parse_root_term(const RootSystem& rs, const std::string& text) {
  RootCoords r = RootCoords::zero(rs.rank());
  std::size_t i = 0;
  auto fail = [&] { throw Error("malformed root '" + text + "' (expected e.g. a1+2a2)"); };
  if (text.empty()) fail();
  while (i < text.size()) {
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    std::int64_t coeff = 1;
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > digits) coeff = std::stoll(text.substr(digits, i - digits));
    if (i >= text.size() || (text[i] != 'a' && text[i] != 'A')) fail();
    ++i;
    const std::size_t idx_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == idx_start) fail();
    const int index = std::stoi(text.substr(idx_start, i - idx_start));
    if (index < 1 || index > rs.rank())
      throw IndexOutOfRange("simple root index " + std::to_string(index) + " out of range for " + rs.name());
    r[index - 1] += sign * coeff;
  }
  return r;
}

std::vector<RootCoords> parse_root_list(const RootSystem& rs, const std::string& text) {
  std::vector<RootCoords> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(parse_root_term(rs, token));
  return out;
}

std::string theta_table_text(const std::vector<std::string>& types) {
  std::ostringstream os;
  for (const auto& t : types) {
    const RootSystem rs = parse_root_system(t);
    os << std::left << std::setw(4) << rs.name() << "  theta = " << std::setw(44) << format_root_sum(rs.theta())
       << "  d = " << rs.d() << "\n";
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Descent of line bundles to GIT quotients (G/B)^3 // G"};
  app.name("flagdescent");
  app.require_subcommand(1);

  std::string type, output = "text", what = "theta", roots;
  std::vector<std::string> types;
  WeightArgs weights;
  int n_max = 8;
  std::uint64_t size_bound = kDefaultWeylSizeBound;
  std::size_t work_bound = kDefaultWorkBound;
  bool probe = false, dominant_only = false;

  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", output, "text (default) or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* check = app.add_subcommand("check", "decide descent of L(lambda, mu, nu)");
  check->add_option("--type", type, "simple type, e.g. B3")->required();
  add_weight_options(check, weights, true);
  check->add_option("--n-max", n_max, "largest scaling tried by the semistability probe");
  check->add_option("--size-bound", size_bound, "bound on |W|^2 for the all-pairs rule");
  check->add_flag("--probe", probe, "attach the semistability probe");
  add_output(check);

  auto* tables = app.add_subcommand("tables", "Gamma lattices and highest roots");
  tables->add_option("--what", what, "gamma, theta or rootsys")->check(CLI::IsMember({"gamma", "theta", "rootsys"}));
  tables->add_option("--type", types, "restrict to these types (repeatable)");
  add_output(tables);

  auto* mult = app.add_subcommand("mult", "invariant dimension and semistability probe");
  mult->add_option("--type", type)->required();
  add_weight_options(mult, weights, true);
  mult->add_option("--n-max", n_max);
  mult->add_option("--work-bound", work_bound, "cap on character support size");
  mult->add_flag("--dominant", dominant_only, "accept dominant (not necessarily regular) weights");
  add_output(mult);

  auto* explore = app.add_subcommand("explore", "generic lattices L_x for every Weyl pair");
  explore->add_option("--type", type)->required();
  add_weight_options(explore, weights, false);
  explore->add_option("--size-bound", size_bound, "bound on |W|^2");
  add_output(explore);

  auto* stab = app.add_subcommand("stab", "structure of the subtorus cut out by roots");
  stab->add_option("--type", type)->required();
  stab->add_option("--roots", roots, "comma-separated roots, e.g. a1,a1+a2")->required();
  add_output(stab);

  auto* selftest = app.add_subcommand("selftest", "run the embedded example suite");
  add_output(selftest);

  std::vector<std::string> argv_storage{"flagdescent"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(type, weights, n_max, size_bound, probe, output, out);
    if (*tables) return cmd_tables(what, types, output, out);
    if (*mult) return cmd_mult(type, weights, n_max, work_bound, dominant_only, output, out);
    if (*explore) return cmd_explore(type, weights, size_bound, output, out);
    if (*stab) return cmd_stab(type, roots, output, out);
    if (*selftest) return cmd_selftest(output, out);
  } catch (const ResourceBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceBound;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace flagdescent::cli
