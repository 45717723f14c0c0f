#pragma once

#include <stdexcept>
#include <string>

namespace sytkit {

// Invalid input or an out-of-domain request. Maps to CLI exit code 2.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would visit more tableaux than the configured cap allows.
class cap_exceeded : public domain_error {
 public:
  using domain_error::domain_error;
};

// Tail-bound request for a statistic whose expectation vanishes.
class zero_expectation : public domain_error {
 public:
  using domain_error::domain_error;
};

// A broken internal invariant. Maps to CLI exit code 3.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Polynomial division left a remainder where none is possible for valid
// inputs; seeing this from the hook-product pipeline means the hooks are
// wrong.
class non_exact_division : public internal_error {
 public:
  using internal_error::internal_error;
};

}  // namespace sytkit
