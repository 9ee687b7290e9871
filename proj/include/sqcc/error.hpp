#ifndef SQCC_ERROR_HPP
#define SQCC_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqcc {

// Bad numeric argument: composite order, index out of range, parameter < 2.
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed structure handed in: ragged arrays, bad witnesses, unparsable files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance too large for a size-guarded routine.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A search ran out of its time or node budget before finishing.
// Carries whatever partial information the search had.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t nodes,
                int lower_bound = -1, int upper_bound = -1)
      : std::runtime_error(what),
        nodes_(nodes),
        lower_bound_(lower_bound),
        upper_bound_(upper_bound) {}

  std::uint64_t nodes() const noexcept { return nodes_; }
  // -1 when the search does not track bounds.
  int lower_bound() const noexcept { return lower_bound_; }
  int upper_bound() const noexcept { return upper_bound_; }

 private:
  std::uint64_t nodes_;
  int lower_bound_;
  int upper_bound_;
};

}  // namespace sqcc

#endif  // SQCC_ERROR_HPP
