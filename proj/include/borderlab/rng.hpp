#pragma once
#include <cmath>
#include <cstdint>
#include <random>

namespace borderlab {

// SplitMix64 mixer; used to derive well-separated per-path seeds from a root
// seed and a path index (counter-based splitting).
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Gaussian and uniform draws are produced from the raw 64-bit stream with
// explicit converters so that sequences are identical across standard
// library implementations (std::normal_distribution is not portable).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in (0,1); never returns 0 or 1.
  double uniform() {
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; caches the second value of each pair.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  int uniform_index(int n) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Stream for path `index` under a root seed. Streams with distinct indices
// are independent for practical purposes and reproducible regardless of the
// order in which they are consumed, which keeps parallel ensembles
// deterministic for any worker count.
inline RngStream derive_stream(std::uint64_t root_seed, std::uint64_t index) {
  return RngStream(splitmix64(root_seed ^ 0x6a09e667f3bcc909ULL) + index);
}

}  // namespace borderlab
