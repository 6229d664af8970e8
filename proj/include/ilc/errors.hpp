#pragma once

#include <stdexcept>
#include <string>

namespace ilc {

// Invalid user-facing input: bad config field, out-of-range parameter,
// incompatible shapes. Maps to CLI exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Evaluation point outside the domain of a function, e.g. z at a pole.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical object the algorithm depends on is degenerate: singular
// circulant, repeated singular value, rank-deficient lifted matrix.
// Maps to CLI exit code 3.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ilc
