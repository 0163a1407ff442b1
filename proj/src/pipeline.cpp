#include "simcache/pipeline.hpp"

#include <cassert>

namespace simcache {

void PipelineConfig::validate() const {
  if (decode_width < 1) throw ConfigError("decode_width: must be >= 1");
  if (execute_width < 1) throw ConfigError("execute_width: must be >= 1");
  if (!(decode_period > 0.0)) throw ConfigError("decode_period: must be > 0");
  if (!(execute_period > 0.0)) throw ConfigError("execute_period: must be > 0");
  if (decode_jitter < 0.0) throw ConfigError("decode_jitter: must be >= 0");
  if (execute_jitter < 0.0) throw ConfigError("execute_jitter: must be >= 0");
}

std::size_t decode_step(PipelineState& state, InstructionStream& stream,
                        const PipelineConfig& cfg) {
  std::size_t moved = 0;
  while (moved < cfg.decode_width && !stream.exhausted()) {
    if (cfg.window_capacity > 0 && state.window.size() >= cfg.window_capacity) break;
    state.window.push_back(stream.instructions[stream.cursor++]);
    ++moved;
  }
  if (moved > 0) ++state.window_version;
  if (state.window.size() > state.max_window_occupancy)
    state.max_window_occupancy = state.window.size();
  assert(cfg.window_capacity == 0 || state.window.size() <= cfg.window_capacity);
  return moved;
}

std::size_t execute_step(PipelineState& state, const L1Lookup& l1_hit,
                         std::uint64_t l1_epoch, const PipelineConfig& cfg,
                         const RetireHook& on_retire) {
  if (state.window_version == state.noop_scan_version && l1_epoch == state.noop_scan_epoch)
    return 0;  // nothing changed since a scan that retired nothing

  std::size_t budget = cfg.execute_width;
  std::size_t retired = 0;
  auto budget_left = [&] { return !cfg.strict_width || budget > 0; };
  auto retire = [&](std::deque<Instruction>::iterator it) {
    if (on_retire) on_retire(*it);
    if (it->accesses_memory) ++state.mem_retired;
    ++state.retired;
    ++retired;
    if (cfg.strict_width && budget > 0) --budget;
    return state.window.erase(it);
  };

  // first pass: non-memory instructions, in window order
  for (auto it = state.window.begin(); it != state.window.end() && budget_left();) {
    if (!it->accesses_memory)
      it = retire(it);
    else
      ++it;
  }
  // second pass: memory instructions whose block is resident in L1
  for (auto it = state.window.begin(); it != state.window.end() && budget_left();) {
    if (it->accesses_memory && l1_hit(it->address))
      it = retire(it);
    else
      ++it;
  }

  if (retired > 0) {
    ++state.window_version;
    state.noop_scan_version = UINT64_MAX;
    state.noop_scan_epoch = UINT64_MAX;
  } else {
    state.noop_scan_version = state.window_version;
    state.noop_scan_epoch = l1_epoch;
  }
  return retired;
}

bool check_done(std::span<const PipelineState> states, std::uint64_t workload_total) {
  std::uint64_t total = 0;
  for (const auto& s : states) total += s.retired;
  return total == workload_total;
}

}  // namespace simcache
