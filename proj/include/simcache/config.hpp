#pragma once

// Flat key=value run configuration. Unset keys keep their defaults, which are
// the constants of the reference model (20000 instructions, 22.5% memory mix,
// 4/8-wide pipeline, 32-entry window, 128/256/512-entry levels with
// 2.5/10/60 fetch latencies).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simcache/memhier.hpp"
#include "simcache/pipeline.hpp"
#include "simcache/workload.hpp"

namespace simcache {

struct SimConfig {
  WorkloadConfig workload;
  PipelineConfig pipeline;
  MemConfig mem;
  std::uint32_t threads = 1;
  PrefetchConfig prefetch;
  std::uint64_t seed = 1;
  std::uint32_t seeds = 20;  // ensemble size: seed, seed+1, ...
  bool deterministic_latencies = false;

  void validate() const;  // throws ConfigError

  // Canonical serialization (fixed key order, exact float round trip). The
  // fingerprint hashes it with the seed excluded so that an ensemble over
  // seeds shares one fingerprint.
  std::string canonical_text(bool include_seed) const;
  std::uint64_t fingerprint() const;
};

SimConfig default_config();

// Parses `key=value` lines; '#' starts a comment. Errors name the key and
// line. The result is validated.
SimConfig load_config(std::istream& source);
SimConfig load_config_file(const std::string& path);

// Applies one "key=value" override (the CLI --set flag); line_hint only
// shapes the error message.
void apply_override(SimConfig& cfg, const std::string& assignment);

}  // namespace simcache
