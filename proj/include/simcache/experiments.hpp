#pragma once

// The four canned experiments and CSV emission. Each sweep point is an
// ensemble over consecutive seeds; independent runs execute as shared-nothing
// tasks and results are assembled in sweep order, so output is deterministic
// regardless of scheduling.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simcache/config.hpp"
#include "simcache/metrics.hpp"

namespace simcache {

struct ExperimentTable {
  std::string sweep_name;
  std::vector<std::pair<double, AggregateStats>> rows;  // sweep values strictly increasing
};

struct ExperimentResult {
  ExperimentTable table;
  std::vector<std::vector<RunSummary>> per_point;  // raw summaries, one vector per row
};

extern const std::vector<std::string> kExperimentNames;  // hierarchy, coresweep, prefetchsweep, technique

// Runs cfg once per seed in {cfg.seed .. cfg.seed + cfg.seeds - 1}. Total
// workload is cfg.workload.count split across cfg.threads.
std::vector<RunSummary> run_ensemble(const SimConfig& cfg);

ExperimentResult run_experiment(const std::string& name, const SimConfig& base);

// Header "sweep,metric,mean,stddev,min,max,n", one row per (point, metric).
void emit_csv(const ExperimentTable& table, std::ostream& sink);
std::string to_csv(const ExperimentTable& table);

// Technique row order within its table.
enum TechniqueVariant : int { kIdeal = 0, kGlobal = 1, kPartitioned = 2 };

}  // namespace simcache
