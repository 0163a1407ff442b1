#pragma once

// Seeded random streams with pinned algorithms so that identical seeds give
// identical runs on every platform:
//   - stream derivation: SplitMix64 over (root seed, purpose, thread)
//   - generator: std::mt19937_64 (bit-exact per the standard)
//   - uniform double: top 53 bits of one 64-bit draw, in [0,1)
//   - normal: Box-Muller from two uniforms
//   - triangular: inverse CDF, mode at the midpoint
// std::uniform_real_distribution / std::normal_distribution are not used
// anywhere; their output is not pinned across standard libraries.

#include <cstdint>
#include <random>

namespace simcache {

enum class RngPurpose : std::uint32_t {
  workload = 0,
  decode_hold = 1,
  execute_hold = 2,
  fetch_latency = 3,
};

std::uint64_t splitmix64(std::uint64_t x);

// Independent per-(purpose, thread) stream seeds: adding a thread never
// perturbs another thread's draws.
std::uint64_t derive_stream_seed(std::uint64_t root, RngPurpose purpose, std::uint32_t thread);

class StreamRng {
 public:
  explicit StreamRng(std::uint64_t stream_seed) : gen_(stream_seed) {}
  StreamRng(std::uint64_t root, RngPurpose purpose, std::uint32_t thread)
      : gen_(derive_stream_seed(root, purpose, thread)) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform();

  double normal(double mean, double sigma);

  // floor of a symmetric triangular sample on [low, high], clamped
  std::uint32_t triangular_int(std::uint32_t low, std::uint32_t high);

 private:
  std::mt19937_64 gen_;
};

}  // namespace simcache
