#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abcins {

/// Bad parameter or precondition violation supplied by the caller.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is not an element of the primitive non-cuspidal solution set.
class InvalidTriple : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A PrimeTable is too small for the requested operation.
class CoverageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sieve allocation failed.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t attempted_bytes)
      : std::runtime_error(what), attempted_bytes_(attempted_bytes) {}
  std::uint64_t attempted_bytes() const noexcept { return attempted_bytes_; }

 private:
  std::uint64_t attempted_bytes_;
};

/// Trial division by the sieved primes left a composite cofactor.
class IncompleteFactorization : public std::runtime_error {
 public:
  explicit IncompleteFactorization(std::uint64_t cofactor)
      : std::runtime_error("incomplete factorization: cofactor " + std::to_string(cofactor) +
                           " has no prime factor within the sieve and is not prime"),
        cofactor_(cofactor) {}
  std::uint64_t cofactor() const noexcept { return cofactor_; }

 private:
  std::uint64_t cofactor_;
};

}  // namespace abcins
