#pragma once

// Synthetic per-thread instruction streams: a fixed fraction of instructions
// access memory, addresses drawn from a triangular distribution over a block
// range, optionally shifted per thread to model disjoint working sets.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "simcache/errors.hpp"
#include "simcache/rng.hpp"

namespace simcache {

struct Instruction {
  std::uint64_t seq = 0;
  bool accesses_memory = false;
  std::uint32_t address = 0;  // block id; 0 reserved for non-memory
  std::uint32_t thread = 0;

  bool operator==(const Instruction&) const = default;
};

struct WorkloadConfig {
  std::uint64_t count = 20000;       // instructions per thread
  double mem_fraction = 0.225;
  std::uint32_t addr_low = 1;
  std::uint32_t addr_high = 500;
  std::uint64_t seq_base = 1000;
  std::uint32_t per_thread_offset = 0;  // 0 = fully shared address space

  void validate() const;  // throws ConfigError
};

struct InstructionStream {
  std::vector<Instruction> instructions;
  std::size_t cursor = 0;  // next instruction the pipeline will decode

  bool exhausted() const noexcept { return cursor >= instructions.size(); }
  std::size_t remaining() const noexcept { return instructions.size() - cursor; }
};

// Floor of one symmetric-triangular sample on [low, high], clamped.
std::uint32_t sample_address(StreamRng& rng, std::uint32_t low, std::uint32_t high);

// Pure function of (cfg, thread, seed): one uniform draw decides the memory
// flag, one more the address when it is a memory instruction.
InstructionStream generate_stream(const WorkloadConfig& cfg, std::uint32_t thread,
                                  std::uint64_t seed);

// Trace file: header "seq,mem,addr,thread", one CSV line per instruction.
void write_trace(const InstructionStream& stream, std::ostream& sink);
InstructionStream read_trace(std::istream& source);  // throws ConfigError with line number

}  // namespace simcache
