#ifndef FLAGDESCENT_TYPES_HPP
#define FLAGDESCENT_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Core>

namespace Eigen {

// mpz_class as an exact integer scalar for Eigen dense types.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 10,
    MulCost = 50
  };
};

}  // namespace Eigen

namespace flagdescent {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using BigInt = mpz_class;
using IntVector = Vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;
using BigVector = Vector<BigInt>;
using BigMatrix = Matrix<BigInt>;

inline BigVector to_big(const IntVector& v) {
  BigVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = BigInt(static_cast<long>(v(i)));
  return out;
}

inline BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = BigInt(static_cast<long>(m(i, j)));
  return out;
}

/// Integer vector tagged with the basis it is written in. Weights live over
/// the fundamental weights, root-lattice elements over the simple roots; the
/// tag keeps the two from being mixed without an explicit conversion.
template <class Basis>
class Coords {
 public:
  Coords() = default;
  explicit Coords(IntVector v) : v_(std::move(v)) {}
  Coords(std::initializer_list<std::int64_t> values) : v_(static_cast<Eigen::Index>(values.size())) {
    Eigen::Index i = 0;
    for (auto x : values) v_(i++) = x;
  }

  static Coords zero(Eigen::Index n) { return Coords(IntVector::Zero(n)); }
  static Coords unit(Eigen::Index n, Eigen::Index i) {
    IntVector v = IntVector::Zero(n);
    v(i) = 1;
    return Coords(std::move(v));
  }

  const IntVector& vec() const { return v_; }
  IntVector& vec() { return v_; }
  Eigen::Index size() const { return v_.size(); }
  std::int64_t operator[](Eigen::Index i) const { return v_(i); }
  std::int64_t& operator[](Eigen::Index i) { return v_(i); }

  bool is_zero() const { return v_.size() == 0 || (v_.array() == 0).all(); }
  std::vector<std::int64_t> to_std() const { return {v_.data(), v_.data() + v_.size()}; }

  Coords& operator+=(const Coords& o) { v_ += o.v_; return *this; }
  Coords& operator-=(const Coords& o) { v_ -= o.v_; return *this; }
  friend Coords operator+(Coords a, const Coords& b) { return a += b; }
  friend Coords operator-(Coords a, const Coords& b) { return a -= b; }
  friend Coords operator-(const Coords& a) { return Coords(IntVector(-a.v_)); }
  friend Coords operator*(std::int64_t k, const Coords& a) { return Coords(IntVector(k * a.v_)); }

  friend bool operator==(const Coords& a, const Coords& b) {
    return a.v_.size() == b.v_.size() && a.v_ == b.v_;
  }
  friend bool operator<(const Coords& a, const Coords& b) {
    if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size();
    for (Eigen::Index i = 0; i < a.v_.size(); ++i)
      if (a.v_(i) != b.v_(i)) return a.v_(i) < b.v_(i);
    return false;
  }

  friend std::ostream& operator<<(std::ostream& os, const Coords& c) {
    os << '(';
    for (Eigen::Index i = 0; i < c.v_.size(); ++i) os << (i ? "," : "") << c.v_(i);
    return os << ')';
  }

 private:
  IntVector v_;
};

struct FundamentalWeightBasis {};
struct SimpleRootBasis {};

using Weight = Coords<FundamentalWeightBasis>;
using RootCoords = Coords<SimpleRootBasis>;

struct CoordsHash {
  template <class Basis>
  std::size_t operator()(const Coords<Basis>& c) const noexcept {
    std::size_t h = static_cast<std::size_t>(c.size());
    for (Eigen::Index i = 0; i < c.size(); ++i)
      h ^= std::hash<std::int64_t>{}(c[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace flagdescent

#endif  // FLAGDESCENT_TYPES_HPP
