#ifndef FLAGDESCENT_WEYL_HPP
#define FLAGDESCENT_WEYL_HPP

#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

#include "flagdescent/root_system.hpp"

namespace flagdescent {

/// Weyl group element, stored as its lexicographically minimal reduced word
/// w = s_{i_1} s_{i_2} ... s_{i_k} (0-based indices) together with w(rho),
/// which determines w uniquely.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& rs);
  /// Any word, reduced or not. Throws IndexOutOfRange.
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
  /// The unique w with w(rho) = image. The image must lie in the W-orbit of rho.
  static WeylElement from_rho_image(const RootSystem& rs, const Weight& image);

  const std::vector<int>& word() const { return word_; }
  /// 1-based indices, the serialized form.
  std::vector<int> word_one_based() const;
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  const Weight& rho_image() const { return rho_image_; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.rho_image_ == b.rho_image_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

 private:
  std::vector<int> word_;
  Weight rho_image_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept { return CoordsHash{}(w.rho_image()); }
};

/// s_i(lambda) = lambda - lambda_i alpha_i.
Weight reflect(const RootSystem& rs, int i, const Weight& lambda);
RootCoords reflect(const RootSystem& rs, int i, const RootCoords& beta);

/// Right-to-left action of the word on lambda.
Weight apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda);
/// Throws NotARoot unless r is a root.
RootCoords apply_to_root(const RootSystem& rs, const WeylElement& w, const RootCoords& r);

WeylElement inverse(const RootSystem& rs, const WeylElement& w);
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);

/// R(w) = { beta > 0 : w beta < 0 }, in positive_roots() order.
std::vector<RootCoords> inversion_set(const RootSystem& rs, const WeylElement& w);

WeylElement longest_element(const RootSystem& rs);

/// Orbit representative in the dominant chamber together with the parity of
/// the number of reflections used.
struct DominantImage {
  Weight weight;
  int reflections{0};
};
DominantImage to_dominant(const RootSystem& rs, Weight lambda);

/// W-orbit of lambda, by closure under simple reflections.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& lambda);

constexpr std::uint64_t kDefaultWeylSizeBound = 1'000'000;

/// Breadth-first walk of the Cayley graph; yields every element exactly once,
/// in order of length. Construction throws GroupTooLarge when |W| > bound.
class WeylGroupWalker {
 public:
  WeylGroupWalker(const RootSystem& rs, std::uint64_t size_bound = kDefaultWeylSizeBound);

  std::optional<WeylElement> next();

 private:
  const RootSystem* rs_;
  std::deque<Weight> frontier_;
  std::unordered_set<Weight, CoordsHash> seen_;
};

/// All of W in walker order. Throws GroupTooLarge.
std::vector<WeylElement> enumerate(const RootSystem& rs, std::uint64_t size_bound = kDefaultWeylSizeBound);

}  // namespace flagdescent

#endif  // FLAGDESCENT_WEYL_HPP
