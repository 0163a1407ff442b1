#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simcache {

struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad input: config file, trace file, CLI overrides. CLI exit code 1.
struct ConfigError : SimError {
  using SimError::SimError;
};

// Precondition violated at runtime (negative delay, summarize before done,
// mixed fingerprints, ...). CLI exit code 2.
struct DomainError : SimError {
  using SimError::SimError;
};

// Event queue ran dry before the stop predicate held.
struct IncompleteRunError : SimError {
  IncompleteRunError(std::string msg, double clock, std::uint64_t executed)
      : SimError(std::move(msg)), clock_at_failure(clock), events_executed(executed) {}

  double clock_at_failure;
  std::uint64_t events_executed;
};

}  // namespace simcache
