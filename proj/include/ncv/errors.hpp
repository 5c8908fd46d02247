#pragma once

#include <stdexcept>
#include <string>

namespace ncv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exact search would exceed its configured instance size.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t size, std::size_t capacity)
      : Error(what + " (size " + std::to_string(size) + " exceeds capacity " +
              std::to_string(capacity) + ")"),
        size_(size),
        capacity_(capacity) {}

  std::size_t size() const { return size_; }
  std::size_t capacity() const { return capacity_; }

 private:
  std::size_t size_;
  std::size_t capacity_;
};

/// A randomized search ran out of tries. Carries the best value seen.
class SearchFailure : public Error {
 public:
  SearchFailure(const std::string& what, long best) : Error(what), best_(best) {}
  long best() const { return best_; }

 private:
  long best_;
};

/// Two independent computations that must agree did not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncv
