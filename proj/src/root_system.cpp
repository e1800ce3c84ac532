#include "flagdescent/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "flagdescent/errors.hpp"

namespace flagdescent {

namespace {

// Fraction-free (Bareiss) determinant; exact for integer matrices.
std::int64_t integer_determinant(IntMatrix m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
  const Eigen::Index n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      adj(i, j) = ((i + j) % 2 ? -1 : 1) * integer_determinant(minor);
    }
  }
  return adj;
}

void link(IntMatrix& a, int i, int j) {
  a(i, j) = -1;
  a(j, i) = -1;
}

IntMatrix cartan_matrix(Family family, int n) {
  IntMatrix a = 2 * IntMatrix::Identity(n, n);
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case Family::E:
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case Family::F:
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a(2, 1) = -2;
      break;
    case Family::G:
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
  }
  return a;
}

std::vector<std::int64_t> symmetrizer_for(Family family, int n) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n), 1);
  switch (family) {
    case Family::B:
      std::fill(d.begin(), d.end(), 2);
      d.back() = 1;
      break;
    case Family::C:
      d.back() = 2;
      break;
    case Family::F:
      d = {2, 2, 1, 1};
      break;
    case Family::G:
      d = {1, 3};
      break;
    default:
      break;
  }
  return d;
}

// Positive roots by alpha_i-string closure, graded by height.
std::vector<RootCoords> close_positive_roots(const IntMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::unordered_set<RootCoords, CoordsHash> seen;
  std::vector<std::vector<RootCoords>> levels(1);
  for (int i = 0; i < n; ++i) {
    levels[0].push_back(RootCoords::unit(n, i));
    seen.insert(levels[0].back());
  }
  while (!levels.back().empty()) {
    std::vector<RootCoords> next;
    for (const auto& beta : levels.back()) {
      const IntVector pairings = cartan * beta.vec();
      for (int i = 0; i < n; ++i) {
        const RootCoords alpha = RootCoords::unit(n, i);
        std::int64_t p = 0;
        for (RootCoords down = beta - alpha; seen.count(down); down -= alpha) ++p;
        const std::int64_t q = p - pairings(i);
        if (q <= 0) continue;
        RootCoords up = beta + alpha;
        if (seen.insert(up).second) next.push_back(std::move(up));
      }
    }
    levels.push_back(std::move(next));
  }
  std::vector<RootCoords> roots;
  for (auto& level : levels) {
    std::sort(level.begin(), level.end(), [](const RootCoords& a, const RootCoords& b) { return b < a; });
    roots.insert(roots.end(), level.begin(), level.end());
  }
  return roots;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string RootSystem::name() const { return std::string(1, family_letter(family_)) + std::to_string(rank_); }

bool RootSystem::is_root(const RootCoords& r) const {
  if (r.size() != rank_) return false;
  return root_index_.count(r) || root_index_.count(-r);
}

bool RootSystem::is_positive_root(const RootCoords& r) const { return positive_root_index(r) >= 0; }

int RootSystem::positive_root_index(const RootCoords& r) const {
  auto it = root_index_.find(r);
  return it == root_index_.end() ? -1 : it->second;
}

std::int64_t RootSystem::pairing(const RootCoords& beta, const Weight& nu) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank_; ++i) s += beta[i] * symmetrizer_[static_cast<std::size_t>(i)] * nu[i];
  return s;
}

std::int64_t RootSystem::form(const RootCoords& beta, const RootCoords& gamma) const {
  return pairing(beta, root_to_weight_coords(*this, gamma));
}

bool is_admissible_type(Family family, int rank) {
  switch (family) {
    case Family::A:
      return rank >= 1;
    case Family::B:
    case Family::C:
      return rank >= 2;
    case Family::D:
      return rank >= 4;
    case Family::E:
      return rank >= 6 && rank <= 8;
    case Family::F:
      return rank == 4;
    case Family::G:
      return rank == 2;
  }
  return false;
}

RootSystem build_root_system(Family family, int rank) {
  if (!is_admissible_type(family, rank))
    throw InvalidType("no simple root system of type " + std::string(1, family_letter(family)) +
                      std::to_string(rank));
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(family, rank);
  rs.cartan_det_ = integer_determinant(rs.cartan_);
  rs.cartan_adjugate_ = adjugate(rs.cartan_);
  rs.symmetrizer_ = symmetrizer_for(family, rank);
  rs.positive_roots_ = close_positive_roots(rs.cartan_);
  for (std::size_t i = 0; i < rs.positive_roots_.size(); ++i)
    rs.root_index_.emplace(rs.positive_roots_[i], static_cast<int>(i));
  rs.d_ = 1;
  for (Eigen::Index i = 0; i < rank; ++i) rs.d_ = std::lcm(rs.d_, rs.theta()[i]);
  return rs;
}

RootSystem parse_root_system(std::string_view type_name) {
  if (type_name.size() < 2) throw InvalidType("malformed type '" + std::string(type_name) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(type_name[0])));
  if (letter < 'A' || letter > 'G') throw InvalidType("unknown family in '" + std::string(type_name) + "'");
  int rank = 0;
  auto [ptr, ec] = std::from_chars(type_name.data() + 1, type_name.data() + type_name.size(), rank);
  if (ec != std::errc() || ptr != type_name.data() + type_name.size())
    throw InvalidType("malformed rank in '" + std::string(type_name) + "'");
  return build_root_system(static_cast<Family>(letter - 'A'), rank);
}

void check_rank(const RootSystem& rs, Eigen::Index size, const char* what) {
  if (size != rs.rank())
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(size) + ", expected rank " +
                            std::to_string(rs.rank()) + " of " + rs.name());
}

Weight root_to_weight_coords(const RootSystem& rs, const RootCoords& r) {
  check_rank(rs, r.size(), "root vector");
  return Weight(IntVector(rs.cartan() * r.vec()));
}

std::optional<RootCoords> weight_to_root_coords(const RootSystem& rs, const Weight& w) {
  check_rank(rs, w.size(), "weight");
  IntVector scaled = rs.cartan_adjugate_ * w.vec();
  for (Eigen::Index i = 0; i < scaled.size(); ++i) {
    if (scaled(i) % rs.cartan_det_ != 0) return std::nullopt;
    scaled(i) /= rs.cartan_det_;
  }
  return RootCoords(std::move(scaled));
}

Weight rho(const RootSystem& rs) { return Weight(IntVector::Ones(rs.rank())); }

RootCoords positive_root_sum(const RootSystem& rs) {
  RootCoords s = RootCoords::zero(rs.rank());
  for (const auto& r : rs.positive_roots()) s += r;
  return s;
}

std::int64_t height(const RootCoords& r) { return r.vec().sum(); }

int coxeter_number(Family family, int rank) {
  switch (family) {
    case Family::A:
      return rank + 1;
    case Family::B:
    case Family::C:
      return 2 * rank;
    case Family::D:
      return 2 * rank - 2;
    case Family::E:
      return rank == 6 ? 12 : rank == 7 ? 18 : 30;
    case Family::F:
      return 12;
    case Family::G:
      return 6;
  }
  return 0;
}

std::uint64_t weyl_group_order(const RootSystem& rs) {
  const auto n = static_cast<std::uint64_t>(rs.rank());
  std::uint64_t factorial = 1;
  for (std::uint64_t k = 2; k <= n; ++k) factorial = saturating_mul(factorial, k);
  switch (rs.family()) {
    case Family::A:
      return saturating_mul(factorial, n + 1);
    case Family::B:
    case Family::C:
      return n >= 64 ? std::numeric_limits<std::uint64_t>::max() : saturating_mul(factorial, 1ULL << n);
    case Family::D:
      return n >= 65 ? std::numeric_limits<std::uint64_t>::max() : saturating_mul(factorial, 1ULL << (n - 1));
    case Family::E:
      return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  return 0;
}

bool is_dominant(const Weight& w) { return (w.vec().array() >= 0).all(); }
bool is_dominant_regular(const Weight& w) { return (w.vec().array() >= 1).all(); }

std::string format_root_sum(const RootCoords& r) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    std::int64_t c = r[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = c < 0 ? -c : c;
    if (c != 1) os << c;
    os << 'a' << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace flagdescent
