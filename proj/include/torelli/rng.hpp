#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace torelli {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Portable bounded draws: std::uniform_int_distribution differs between
// standard libraries, which would make reports platform dependent.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  // Generator for sample i of a run seeded with `seed`.
  static Rng for_sample(std::uint64_t seed, std::uint64_t i) { return Rng(splitmix64(seed + i)); }

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % bound;
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace torelli
