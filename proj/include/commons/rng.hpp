#ifndef COMMONS_RNG_HPP
#define COMMONS_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace commons {

// Stateless mixer used to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for stream `stream_id` under a master seed. Stream 0 is reserved for
/// scenario-level draws (policy assignment); agents use their 1-based id.
inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream_id) {
  return splitmix64(master_seed + stream_id * 0x9e3779b97f4a7c15ULL);
}

/// Deterministic random stream. All derived draws (bits, doubles, bounded
/// ints) are defined on top of the raw mt19937_64 output so that results are
/// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  bool next_bit() { return (next_u64() >> 63) != 0; }

  /// Uniform in [0, 1), 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, n), unbiased via rejection.
  std::uint64_t next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n must be positive");
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % n;
    }
  }

  bool operator==(const Rng& other) const { return engine_ == other.engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace commons

#endif  // COMMONS_RNG_HPP
