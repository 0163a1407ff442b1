#pragma once

// Per-run summaries, cross-seed aggregation, and speedup.

#include <cstdint>
#include <string>
#include <vector>

#include "simcache/errors.hpp"

namespace simcache {

struct RunSummary {
  std::uint64_t accesses = 0;
  std::vector<std::uint64_t> level_misses;
  std::uint64_t retired = 0;
  double sim_time = 0.0;
  std::uint64_t max_window_occupancy = 0;
  std::uint64_t fingerprint = 0;  // config identity, seed excluded
  std::uint64_t seed = 0;

  std::uint64_t l1_misses() const { return level_misses.size() > 0 ? level_misses[0] : 0; }
  std::uint64_t l2_misses() const { return level_misses.size() > 1 ? level_misses[1] : 0; }
  std::uint64_t l3_misses() const { return level_misses.size() > 2 ? level_misses[2] : 0; }

  bool operator==(const RunSummary&) const = default;

  // Deterministic text form; sim_time rendered as hexfloat so equality is
  // bit-exact.
  std::string canonical_text() const;
};

// Names and extraction order of the scalar metrics every summary exposes.
const std::vector<std::string>& summary_metric_names();
std::vector<double> summary_metric_values(const RunSummary& s);

struct MetricStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample (n-1); 0 for a single summary
  double min = 0.0;
  double max = 0.0;
};

struct AggregateStats {
  std::uint64_t count = 0;
  std::uint64_t fingerprint = 0;
  std::vector<MetricStats> metrics;  // indexed like summary_metric_names()

  const MetricStats& metric(const std::string& name) const;  // throws DomainError
};

// Elementwise statistics over a seed ensemble. All summaries must share one
// fingerprint.
AggregateStats aggregate(const std::vector<RunSummary>& summaries);

// 1 - variant_mean_time / baseline_mean_time; negative values mean slowdown.
double speedup(const AggregateStats& baseline, const AggregateStats& variant);

}  // namespace simcache
