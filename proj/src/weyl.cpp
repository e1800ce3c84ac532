#include "flagdescent/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "flagdescent/errors.hpp"

namespace flagdescent {

namespace {

int first_negative(const IntVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < 0) return static_cast<int>(i);
  return -1;
}

bool is_negative(const RootCoords& r) { return (r.vec().array() <= 0).all() && !r.is_zero(); }

}  // namespace

Weight reflect(const RootSystem& rs, int i, const Weight& lambda) {
  IntVector v = lambda.vec() - lambda[i] * rs.cartan().col(i);
  return Weight(std::move(v));
}

RootCoords reflect(const RootSystem& rs, int i, const RootCoords& beta) {
  RootCoords out = beta;
  out[i] -= rs.cartan().row(i).dot(beta.vec());
  return out;
}

WeylElement WeylElement::identity(const RootSystem& rs) { return from_rho_image(rs, rho(rs)); }

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  for (int i : word)
    if (i < 0 || i >= rs.rank())
      throw IndexOutOfRange("simple reflection index " + std::to_string(i + 1) + " out of range for " + rs.name());
  Weight v = rho(rs);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(rs, *it, v);
  return from_rho_image(rs, v);
}

WeylElement WeylElement::from_rho_image(const RootSystem& rs, const Weight& image) {
  check_rank(rs, image.size(), "rho image");
  WeylElement w;
  w.rho_image_ = image;
  // The smallest left descent is the first letter of the lex-minimal reduced word.
  Weight v = image;
  for (int i = first_negative(v.vec()); i >= 0; i = first_negative(v.vec())) {
    w.word_.push_back(i);
    v = reflect(rs, i, v);
  }
  return w;
}

std::vector<int> WeylElement::word_one_based() const {
  std::vector<int> out(word_);
  for (int& i : out) ++i;
  return out;
}

Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda) {
  check_rank(rs, lambda.size(), "weight");
  Weight v = lambda;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) v = reflect(rs, *it, v);
  return v;
}

RootCoords apply_to_root(const RootSystem& rs, const WeylElement& w, const RootCoords& r) {
  check_rank(rs, r.size(), "root");
  if (!rs.is_root(r)) {
    std::ostringstream os;
    os << r << " is not a root of " << rs.name();
    throw NotARoot(os.str());
  }
  RootCoords v = r;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) v = reflect(rs, *it, v);
  return v;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> word(w.word().rbegin(), w.word().rend());
  return WeylElement::from_word(rs, word);
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  std::vector<int> word = a.word();
  word.insert(word.end(), b.word().begin(), b.word().end());
  return WeylElement::from_word(rs, word);
}

std::vector<RootCoords> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<RootCoords> out;
  for (const auto& beta : rs.positive_roots())
    if (is_negative(apply_to_root(rs, w, beta))) out.push_back(beta);
  return out;
}

WeylElement longest_element(const RootSystem& rs) { return WeylElement::from_rho_image(rs, -rho(rs)); }

DominantImage to_dominant(const RootSystem& rs, Weight lambda) {
  check_rank(rs, lambda.size(), "weight");
  DominantImage out;
  for (int i = first_negative(lambda.vec()); i >= 0; i = first_negative(lambda.vec())) {
    lambda = reflect(rs, i, lambda);
    ++out.reflections;
  }
  out.weight = std::move(lambda);
  return out;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda) {
  check_rank(rs, lambda.size(), "weight");
  std::vector<Weight> orbit{lambda};
  std::unordered_set<Weight, CoordsHash> seen{lambda};
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      if (orbit[k][i] == 0) continue;
      Weight next = reflect(rs, i, orbit[k]);
      if (seen.insert(next).second) orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

WeylGroupWalker::WeylGroupWalker(const RootSystem& rs, std::uint64_t size_bound) : rs_(&rs) {
  const std::uint64_t order = weyl_group_order(rs);
  if (order > size_bound) throw GroupTooLarge(order, size_bound);
  const Weight start = rho(rs);
  frontier_.push_back(start);
  seen_.insert(start);
}

std::optional<WeylElement> WeylGroupWalker::next() {
  if (frontier_.empty()) return std::nullopt;
  Weight v = std::move(frontier_.front());
  frontier_.pop_front();
  for (int i = 0; i < rs_->rank(); ++i) {
    Weight u = reflect(*rs_, i, v);
    if (seen_.insert(u).second) frontier_.push_back(std::move(u));
  }
  return WeylElement::from_rho_image(*rs_, v);
}

std::vector<WeylElement> enumerate(const RootSystem& rs, std::uint64_t size_bound) {
  WeylGroupWalker walker(rs, size_bound);
  std::vector<WeylElement> out;
  out.reserve(static_cast<std::size_t>(weyl_group_order(rs)));
  while (auto w = walker.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace flagdescent
