#pragma once

#include <stdexcept>
#include <string>

namespace diamcensus {

// Error taxonomy. The CLI maps these onto process exit codes:
//   invariant_error -> 1, domain_error/resource_error -> 2, sampling_error -> 3.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside an operation's domain.
class domain_error : public error {
 public:
  using error::error;
};

// Request exceeds a configured resource cap (e.g. oracle enumeration size).
class resource_error : public error {
 public:
  using error::error;
};

// A stated invariant failed; carries the first counterexample in the message.
class invariant_error : public error {
 public:
  using error::error;
};

// A rejection sampler exhausted its retry budget.
class sampling_error : public error {
 public:
  using error::error;
};

// Malformed construction input (bad family spec, bad partition, bad choices).
class construction_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Internal contradiction that should be unreachable (e.g. unclassifiable profile).
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace diamcensus
