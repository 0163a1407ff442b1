#pragma once

// Per-thread processor front end: decode moves instructions from the stream
// into a bounded window; execute retires non-memory instructions immediately
// and memory instructions once their block is resident in L1.

#include <cstdint>
#include <deque>
#include <functional>
#include <span>

#include "simcache/errors.hpp"
#include "simcache/workload.hpp"

namespace simcache {

struct PipelineConfig {
  std::uint32_t decode_width = 4;
  double decode_period = 0.4;
  double decode_jitter = 1.0;
  std::uint32_t execute_width = 8;
  double execute_period = 0.4;
  double execute_jitter = 0.5;
  std::uint32_t window_capacity = 32;  // 0 = unbounded
  bool strict_width = true;  // enforce execute_width inside both retire passes

  void validate() const;  // throws ConfigError
};

struct PipelineState {
  std::deque<Instruction> window;
  std::uint64_t retired = 0;
  std::uint64_t mem_retired = 0;
  std::size_t max_window_occupancy = 0;

  // Change tracking: window_version bumps on every decode/retire mutation.
  // A scan that retired nothing is only repeated once the window or the L1
  // contents (l1_epoch) have changed; skipping is behavior-identical.
  std::uint64_t window_version = 0;
  std::uint64_t noop_scan_version = UINT64_MAX;
  std::uint64_t noop_scan_epoch = UINT64_MAX;
};

using L1Lookup = std::function<bool(std::uint32_t address)>;
using RetireHook = std::function<void(const Instruction&)>;

// Moves up to decode_width instructions from the stream head into the window,
// stopping early at a full window. Returns the number moved.
std::size_t decode_step(PipelineState& state, InstructionStream& stream,
                        const PipelineConfig& cfg);

// Two passes over the window in order: non-memory instructions first, then
// memory instructions whose address hits L1. Both passes share one
// execute_width budget when strict_width is set. Returns the number retired;
// on_retire fires once per retired instruction.
std::size_t execute_step(PipelineState& state, const L1Lookup& l1_hit,
                         std::uint64_t l1_epoch, const PipelineConfig& cfg,
                         const RetireHook& on_retire = {});

// Stop predicate: every generated instruction has been retired.
bool check_done(std::span<const PipelineState> states, std::uint64_t workload_total);

}  // namespace simcache
