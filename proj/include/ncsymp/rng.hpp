#ifndef NCSYMP_RNG_HPP
#define NCSYMP_RNG_HPP

#include <cstdint>

namespace ncsymp {

/// Deterministic 64-bit generator used for all sampling in the library and
/// the CLI.  The state transition is the splitmix recurrence
///
///   state <- state + 0x9E3779B97F4A7C15
///   z <- state
///   z <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9
///   z <- (z XOR (z >> 27)) * 0x94D049BB133111EB
///   output = z XOR (z >> 31)
///
/// with all arithmetic modulo 2^64.  Identical seeds produce identical
/// streams on every platform, so reports generated from the same
/// configuration are byte-identical.  Bounded draws use plain remainders
/// (next() % n) to keep the mapping reproducible from the recurrence alone.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from {0, 1, ..., n-1}; n must be nonzero.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Uniform draw from {lo, ..., hi} inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool flip() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace ncsymp

#endif  // NCSYMP_RNG_HPP
