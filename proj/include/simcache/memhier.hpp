#pragma once

// Multi-level cache hierarchy with FIFO replacement. Lookups always search a
// whole level; fills evict either level-globally (GlobalFifo) or only within
// the owning thread's partition of L1 (PartitionedFifo). Misses walk the
// hierarchy inclusively: the block lands in every level from the fetch source
// up to L1, and the charged latency is that of the deepest level filled.

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "simcache/errors.hpp"
#include "simcache/pipeline.hpp"
#include "simcache/rng.hpp"
#include "simcache/workload.hpp"

namespace simcache {

enum class FillPolicyKind { global_fifo, partitioned_fifo, ideal };

struct FillPolicy {
  FillPolicyKind kind = FillPolicyKind::global_fifo;
  std::uint32_t num_partitions = 1;  // partitioned_fifo only
};

struct CacheLevelConfig {
  std::uint64_t capacity = 0;        // block entries
  double fetch_latency_mean = 0.0;   // cost of a fetch into this level from the next deeper source
  double fetch_latency_sigma = 0.5;
};

struct PrefetchConfig {
  bool enabled = false;
  std::uint32_t degree = 0;       // lookahead in memory-accessing instructions
  std::uint32_t target_level = 1; // 1 = L1; 2 = fill no closer than L2
  bool partition_fills = true;    // prefetch fills obey the active L1 policy
};

struct MemConfig {
  std::vector<CacheLevelConfig> levels;  // L1 first
  FillPolicy policy;                     // applies to L1; deeper levels are always global FIFO
  std::uint32_t mlp_width = 1;           // misses serviced per cache activation
  double base_period = 1.0;              // cache process hold when idle

  void validate(std::uint32_t num_threads) const;  // throws ConfigError
};

struct MissCounters {
  std::uint64_t accesses = 0;                       // memory instructions retired
  std::vector<std::uint64_t> level_misses;          // [0] = L1
  std::vector<std::uint64_t> per_thread_accesses;
  std::vector<std::uint64_t> per_thread_l1_misses;
};

struct ServiceResult {
  double added_latency = 0.0;
  std::size_t serviced = 0;
};

class Hierarchy {
 public:
  Hierarchy(MemConfig cfg, std::uint32_t num_threads);

  // Membership over the whole level, partitions included. Always true under
  // the ideal policy.
  bool lookup(std::size_t level, std::uint32_t address) const;

  // Inserts (address, owner); a resident address is a no-op. When the
  // governing queue is full its oldest entry is evicted first and returned.
  // No accounting. No-op under the ideal policy.
  std::optional<std::uint32_t> fill(std::size_t level, std::uint32_t address,
                                    std::uint32_t owner);

  // Scans windows (rotating round-robin over threads, window order within a
  // thread) and services up to mlp_width L1-missing memory instructions:
  // counts the miss at every absent level, fills the block from the nearest
  // source up to L1, and accumulates the fetch latency of the deepest level
  // filled. Latencies are |N(mean, sigma)|, or exactly the mean in
  // deterministic mode.
  ServiceResult service_misses(std::span<const PipelineState> windows,
                               StreamRng& latency_rng, bool deterministic);

  // Oracle lookahead: fills the addresses of the next cfg.degree
  // memory-accessing instructions of this thread (window first, then the
  // undecoded stream) into target_level and all deeper levels. Free of charge
  // and invisible to the miss counters. Returns the number of target-level
  // insertions actually performed.
  std::size_t prefetch_step(const PipelineState& state, const InstructionStream& stream,
                            std::uint32_t thread, const PrefetchConfig& cfg);

  // Memory instructions count as accesses when they retire.
  void note_retired_access(std::uint32_t thread);

  const MissCounters& counters() const noexcept { return counters_; }
  std::size_t num_levels() const noexcept { return levels_.size(); }
  std::uint64_t level_size(std::size_t level) const;
  std::uint64_t partition_size(std::size_t partition) const;  // L1 only
  std::vector<std::uint32_t> level_contents(std::size_t level) const;  // FIFO order

  // Bumps on every L1 content change; lets the execute stage skip rescans.
  std::uint64_t l1_epoch() const noexcept { return l1_epoch_; }

  const MemConfig& config() const noexcept { return cfg_; }

 private:
  struct Level {
    std::vector<std::deque<std::uint32_t>> queues;  // one, or one per partition
    std::vector<std::uint64_t> queue_caps;
    std::unordered_set<std::uint32_t> index;
  };

  bool ideal() const noexcept { return cfg_.policy.kind == FillPolicyKind::ideal; }

  MemConfig cfg_;
  std::uint32_t num_threads_;
  std::vector<Level> levels_;
  MissCounters counters_;
  std::uint64_t l1_epoch_ = 0;
  std::uint32_t service_rr_ = 0;  // next thread to scan first
};

}  // namespace simcache
