#ifndef FLAGDESCENT_ERRORS_HPP
#define FLAGDESCENT_ERRORS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace flagdescent {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidType : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotASublattice : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

class RankOutOfTableRange : public Error {
 public:
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

class NotDominantRegular : public Error {
 public:
  using Error::Error;
};

/// Resource guards. These map to a distinct CLI exit code.
class ResourceBoundExceeded : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public ResourceBoundExceeded {
 public:
  /// `quantity` names what was counted, "|W|" or "|W|^2".
  GroupTooLarge(std::uint64_t order, std::uint64_t bound, const std::string& quantity = "|W|")
      : ResourceBoundExceeded("Weyl group too large: " + quantity + " = " + std::to_string(order) +
                              " exceeds bound " + std::to_string(bound)),
        order_(order),
        bound_(bound) {}

  std::uint64_t order() const { return order_; }
  std::uint64_t bound() const { return bound_; }

 private:
  std::uint64_t order_;
  std::uint64_t bound_;
};

class WorkBoundExceeded : public ResourceBoundExceeded {
 public:
  explicit WorkBoundExceeded(const std::string& what, std::optional<int> at_n = std::nullopt)
      : ResourceBoundExceeded(what), at_n_(at_n) {}

  /// Scaling factor N at which a semistability probe tripped the bound.
  std::optional<int> at_n() const { return at_n_; }

 private:
  std::optional<int> at_n_;
};

}  // namespace flagdescent

#endif  // FLAGDESCENT_ERRORS_HPP
