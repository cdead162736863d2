#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>
#include <vector>

namespace adare {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Named child streams: every component draws its randomness from the master
// seed through a (stream name, indices) key, so components can be rerun
// independently and still reproduce bit-identically.
inline uint64_t child_seed(uint64_t master, std::string_view stream,
                           uint64_t a = 0, uint64_t b = 0) {
  uint64_t h = splitmix64(master) ^ fnv1a64(stream);
  h = splitmix64(h ^ splitmix64(a + 0x9e3779b97f4a7c15ull));
  h = splitmix64(h ^ splitmix64(b + 0xd1342543de82ef95ull));
  return h;
}

// mt19937_64 with explicit uniform/normal/shuffle draws, so every sequence is
// pinned by this code alone rather than by library-specific distributions.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Unbiased index in [0, n).
  uint64_t uniform_index(uint64_t n) {
    for (;;) {
      uint64_t r = gen_();
      uint64_t v = r % n;
      if (r - v <= UINT64_MAX - (n - 1)) return v;
    }
  }

  // Standard normal via Box-Muller; the spare draw is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform_index(i)]);
    }
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace adare
