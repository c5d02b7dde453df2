#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace apexminor {

/// splitmix64 finalizer; used to derive independent per-trial seeds from a run
/// seed so that trial i draws the same numbers regardless of execution order.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return mix64(seed ^ mix64(trial)); }

/// mt19937_64 plus a portable unbiased bounded draw (std distributions are
/// implementation-defined, which would break byte-identical replays).
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t draw;
    do draw = engine_();
    while (draw >= limit);
    return lo + static_cast<int>(draw % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace apexminor
