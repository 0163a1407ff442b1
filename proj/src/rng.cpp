#include "simcache/rng.hpp"

#include <cassert>
#include <cmath>

namespace simcache {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_stream_seed(std::uint64_t root, RngPurpose purpose, std::uint32_t thread) {
  std::uint64_t z = splitmix64(root);
  z = splitmix64(z ^ (static_cast<std::uint64_t>(purpose) + 1));
  z = splitmix64(z ^ ((static_cast<std::uint64_t>(thread) + 1) << 32));
  return z;
}

double StreamRng::uniform() {
  // 53 significant bits; exact on every IEEE 754 platform
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double StreamRng::normal(double mean, double sigma) {
  // Box-Muller; two draws per sample, none cached
  double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
  double u2 = uniform();
  double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  return mean + sigma * z;
}

std::uint32_t StreamRng::triangular_int(std::uint32_t low, std::uint32_t high) {
  assert(low <= high);
  if (low == high) return low;
  double a = low;
  double b = high;
  double c = 0.5 * (a + b);  // mode at the midpoint
  double u = uniform();
  double x = u < 0.5 ? a + std::sqrt(u * (b - a) * (c - a))
                     : b - std::sqrt((1.0 - u) * (b - a) * (b - c));
  auto v = static_cast<std::int64_t>(std::floor(x));
  if (v < static_cast<std::int64_t>(low)) v = low;
  if (v > static_cast<std::int64_t>(high)) v = high;
  return static_cast<std::uint32_t>(v);
}

}  // namespace simcache
