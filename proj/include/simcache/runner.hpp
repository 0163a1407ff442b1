#pragma once

// Wires one engine run: per-thread decode/execute processes and the shared
// cache process over one hierarchy, running until every instruction retired.

#include <cstdint>
#include <optional>
#include <vector>

#include "simcache/config.hpp"
#include "simcache/metrics.hpp"
#include "simcache/sim_kernel.hpp"

namespace simcache {

// Splits a total workload across threads; the remainder goes to the lowest
// thread ids, so the counts sum exactly to `total`.
std::vector<std::uint64_t> split_workload(std::uint64_t total, std::uint32_t threads);

// Runs one simulation to completion and returns its summary. When
// `per_thread_counts` is given it overrides cfg.workload.count thread by
// thread (the experiments use this to keep the total workload fixed while
// sweeping thread counts).
RunSummary run_single(const SimConfig& cfg, std::uint64_t seed,
                      const std::optional<std::vector<std::uint64_t>>& per_thread_counts = {});

}  // namespace simcache
