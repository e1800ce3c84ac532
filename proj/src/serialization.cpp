#include "flagdescent/serialization.hpp"

#include <limits>

namespace flagdescent {

using nlohmann::json;

namespace {

json weight_json(const Weight& w) { return w.to_std(); }

Weight weight_from(const json& j) {
  const auto values = j.get<std::vector<std::int64_t>>();
  IntVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return Weight(std::move(v));
}

}  // namespace

json big_to_json(const BigInt& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

BigInt big_from_json(const json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(static_cast<long>(j.get<std::int64_t>()));
}

json to_json(const RootSystem& rs) {
  json cartan = json::array();
  for (Eigen::Index i = 0; i < rs.cartan().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < rs.cartan().cols(); ++j) row.push_back(rs.cartan()(i, j));
    cartan.push_back(row);
  }
  json roots = json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(r.to_std());
  return json{{"family", std::string(1, family_letter(rs.family()))},
              {"rank", rs.rank()},
              {"cartan", cartan},
              {"positive_roots", roots},
              {"theta", rs.theta().to_std()},
              {"d", rs.d()}};
}

json to_json(const IntegerLattice& lat) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < lat.basis().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < lat.basis().cols(); ++j) row.push_back(big_to_json(lat.basis()(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const WeylElement& w) { return w.word_one_based(); }

json to_json(const QuotientStructure& q) {
  json factors = json::array();
  for (const auto& f : q.invariant_factors) factors.push_back(big_to_json(f));
  return json{{"free_rank", q.free_rank}, {"invariant_factors", factors}};
}

json to_json(const StabilizerStructure& s) {
  json factors = json::array();
  for (const auto& f : s.finite_factors) factors.push_back(big_to_json(f));
  return json{{"torus_rank", s.torus_rank}, {"finite_factors", factors}, {"divisible", s.divisible()}};
}

json to_json(const ProbeResult& p) {
  return json{{"kind", p.kind == ProbeResult::Kind::NonEmpty ? "NonEmpty" : "EmptyUpTo"}, {"n", p.n}};
}

ProbeResult probe_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  const int n = j.at("n").get<int>();
  if (kind == "NonEmpty") return ProbeResult::non_empty(n);
  if (kind == "EmptyUpTo") return ProbeResult::empty_up_to(n);
  throw Error("unknown probe kind '" + kind + "'");
}

json to_json(const DescentVerdict& v) {
  json reasons = json::array();
  for (const auto& r : v.reasons)
    reasons.push_back(json{{"rule", to_string(r.rule)}, {"result", to_string(r.result)}, {"witness", r.witness}});
  return json{{"type", v.type},
              {"rank", v.rank},
              {"lambda", weight_json(v.lambda)},
              {"mu", weight_json(v.mu)},
              {"nu", weight_json(v.nu)},
              {"outcome", to_string(v.outcome)},
              {"reasons", reasons},
              {"probe", v.probe ? to_json(*v.probe) : json(nullptr)}};
}

DescentVerdict verdict_from_json(const json& j) {
  DescentVerdict v;
  v.type = j.at("type").get<std::string>();
  v.rank = j.at("rank").get<int>();
  v.lambda = weight_from(j.at("lambda"));
  v.mu = weight_from(j.at("mu"));
  v.nu = weight_from(j.at("nu"));
  v.outcome = outcome_from_string(j.at("outcome").get<std::string>());
  for (const auto& r : j.at("reasons"))
    v.reasons.push_back({rule_from_string(r.at("rule").get<std::string>()),
                         rule_result_from_string(r.at("result").get<std::string>()), r.at("witness")});
  if (j.contains("probe") && !j.at("probe").is_null()) v.probe = probe_from_json(j.at("probe"));
  return v;
}

}  // namespace flagdescent
