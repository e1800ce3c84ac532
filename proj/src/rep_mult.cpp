#include "flagdescent/rep_mult.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagdescent/errors.hpp"
#include "flagdescent/weyl.hpp"

namespace flagdescent {

namespace {

void require_dominant(const RootSystem& rs, const Weight& w, const char* what) {
  check_rank(rs, w.size(), what);
  if (!is_dominant(w)) {
    std::ostringstream os;
    os << what << ' ' << w << " is not dominant";
    throw NotDominant(os.str());
  }
}

std::vector<Weight> positive_roots_as_weights(const RootSystem& rs) {
  std::vector<Weight> out;
  out.reserve(rs.positive_roots().size());
  for (const auto& r : rs.positive_roots()) out.push_back(root_to_weight_coords(rs, r));
  return out;
}

// Reflects v into the dominant chamber. Returns false when v lies on a wall
// (some intermediate coordinate is zero); sign tracks det(w).
bool shifted_reflection(const RootSystem& rs, Weight& v, int& sign) {
  sign = 1;
  for (;;) {
    int negative = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v[i] == 0) return false;
      if (v[i] < 0 && negative < 0) negative = static_cast<int>(i);
    }
    if (negative < 0) return true;
    v = reflect(rs, negative, v);
    sign = -sign;
  }
}

}  // namespace

BigInt CharacterTable::dimension() const {
  BigInt total = 0;
  for (const auto& [w, m] : mults) total += m;
  return total;
}

BigInt CharacterTable::multiplicity(const Weight& mu) const {
  auto it = mults.find(mu);
  return it == mults.end() ? BigInt(0) : it->second;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  require_dominant(rs, lambda, "highest weight");
  const Weight shifted = lambda + rho(rs);
  const Weight r = rho(rs);
  BigInt num = 1, den = 1;
  for (const auto& alpha : rs.positive_roots()) {
    num *= BigInt(static_cast<long>(rs.pairing(alpha, shifted)));
    den *= BigInt(static_cast<long>(rs.pairing(alpha, r)));
  }
  return BigInt(num / den);
}

std::map<Weight, BigInt> dominant_multiplicities(const RootSystem& rs, const Weight& lambda,
                                                 std::size_t work_bound) {
  require_dominant(rs, lambda, "highest weight");
  const auto root_weights = positive_roots_as_weights(rs);

  // Dominant weights below lambda; each is reachable from lambda through
  // dominant weights by subtracting positive roots.
  struct Entry {
    Weight mu;
    RootCoords depth;  // lambda - mu
  };
  std::vector<Entry> entries{{lambda, RootCoords::zero(rs.rank())}};
  std::unordered_map<Weight, std::size_t, CoordsHash> index{{lambda, 0}};
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (std::size_t a = 0; a < root_weights.size(); ++a) {
      Weight next = entries[k].mu - root_weights[a];
      if (!is_dominant(next) || index.count(next)) continue;
      if (entries.size() >= work_bound)
        throw WorkBoundExceeded("dominant weight count of V" + [&] {
          std::ostringstream os;
          os << lambda;
          return os.str();
        }() + " exceeds work bound " + std::to_string(work_bound));
      index.emplace(next, entries.size());
      entries.push_back({std::move(next), entries[k].depth + rs.positive_roots()[a]});
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& x, const Entry& y) { return height(x.depth) < height(y.depth); });

  const Weight lambda_plus_two_rho = lambda + 2 * rho(rs);
  std::map<Weight, BigInt> mult;
  mult.emplace(lambda, BigInt(1));
  for (std::size_t k = 1; k < entries.size(); ++k) {
    const Weight& mu = entries[k].mu;
    // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (lambda - mu, lambda + mu + 2 rho)
    const std::int64_t denom = rs.pairing(entries[k].depth, lambda_plus_two_rho + mu);
    BigInt acc = 0;
    for (std::size_t a = 0; a < root_weights.size(); ++a) {
      const RootCoords& alpha = rs.positive_roots()[a];
      for (Weight up = mu + root_weights[a];; up += root_weights[a]) {
        auto it = mult.find(to_dominant(rs, up).weight);
        if (it == mult.end()) break;
        acc += it->second * BigInt(static_cast<long>(rs.pairing(alpha, up)));
      }
    }
    acc *= 2;
    mult.emplace(mu, BigInt(acc / BigInt(static_cast<long>(denom))));
  }
  return mult;
}

CharacterTable weight_multiplicities(const RootSystem& rs, const Weight& lambda, std::size_t work_bound) {
  CharacterTable table;
  table.highest_weight = lambda;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda, work_bound)) {
    for (auto& w : weyl_orbit(rs, mu)) {
      table.mults.emplace(std::move(w), m);
      if (table.mults.size() > work_bound)
        throw WorkBoundExceeded("character support exceeds work bound " + std::to_string(work_bound));
    }
  }
  return table;
}

BigInt kostant_partition(const RootSystem& rs, const RootCoords& v, std::int64_t height_bound) {
  check_rank(rs, v.size(), "root-lattice vector");
  if (rs.rank() > 3) throw WorkBoundExceeded("brute-force partition count is limited to rank <= 3");
  if (height(v) > height_bound)
    throw WorkBoundExceeded("height " + std::to_string(height(v)) + " exceeds partition height bound " +
                            std::to_string(height_bound));
  const auto& roots = rs.positive_roots();
  std::function<BigInt(const RootCoords&, std::size_t)> count = [&](const RootCoords& rest,
                                                                    std::size_t k) -> BigInt {
    if (rest.is_zero()) return BigInt(1);
    if (k == roots.size()) return BigInt(0);
    BigInt total = 0;
    for (RootCoords r = rest; (r.vec().array() >= 0).all(); r -= roots[k]) total += count(r, k + 1);
    return total;
  };
  if ((v.vec().array() < 0).any()) return BigInt(0);
  return count(v, 0);
}

std::map<Weight, BigInt> tensor_decomposition(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                              std::size_t work_bound) {
  require_dominant(rs, lambda, "first factor");
  require_dominant(rs, mu, "second factor");
  const bool iterate_lambda = weyl_dimension(rs, lambda) < weyl_dimension(rs, mu);
  const Weight& base = iterate_lambda ? mu : lambda;
  const CharacterTable small = weight_multiplicities(rs, iterate_lambda ? lambda : mu, work_bound);
  const Weight shift = base + rho(rs);
  std::map<Weight, BigInt> out;
  for (const auto& [xi, m] : small.mults) {
    Weight v = shift + xi;
    int sign = 1;
    if (!shifted_reflection(rs, v, sign)) continue;
    BigInt& slot = out[v - rho(rs)];
    if (sign > 0)
      slot += m;
    else
      slot -= m;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

BigInt tensor_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& target,
                           std::size_t work_bound) {
  require_dominant(rs, lambda, "first factor");
  require_dominant(rs, mu, "second factor");
  require_dominant(rs, target, "target");
  const bool iterate_lambda = weyl_dimension(rs, lambda) < weyl_dimension(rs, mu);
  const Weight& base = iterate_lambda ? mu : lambda;
  const CharacterTable small = weight_multiplicities(rs, iterate_lambda ? lambda : mu, work_bound);
  const Weight shift = base + rho(rs);
  const Weight goal = target + rho(rs);
  BigInt total = 0;
  for (const auto& [xi, m] : small.mults) {
    Weight v = shift + xi;
    int sign = 1;
    if (!shifted_reflection(rs, v, sign) || v != goal) continue;
    if (sign > 0)
      total += m;
    else
      total -= m;
  }
  return total;
}

BigInt triple_invariant_dim(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                            std::size_t work_bound) {
  require_dominant(rs, lambda, "lambda");
  const Weight dual = -apply(rs, longest_element(rs), lambda);
  return tensor_multiplicity(rs, mu, nu, dual, work_bound);
}

ProbeResult semistable_probe(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Weight& nu,
                             int n_max, std::size_t work_bound, bool require_regular) {
  if (n_max < 1) throw Error("probe needs n_max >= 1");
  for (const Weight* w : {&lambda, &mu, &nu}) {
    check_rank(rs, w->size(), "weight");
    if (require_regular && !is_dominant_regular(*w)) {
      std::ostringstream os;
      os << "weight " << *w << " is not dominant regular";
      throw NotDominantRegular(os.str());
    }
    if (!require_regular) require_dominant(rs, *w, "weight");
  }
  for (int n = 1; n <= n_max; ++n) {
    try {
      if (triple_invariant_dim(rs, n * lambda, n * mu, n * nu, work_bound) > 0) return ProbeResult::non_empty(n);
    } catch (const WorkBoundExceeded& e) {
      throw WorkBoundExceeded(std::string(e.what()) + " (probe at N = " + std::to_string(n) + ")", n);
    }
  }
  return ProbeResult::empty_up_to(n_max);
}

}  // namespace flagdescent
