#pragma once

#include <cmath>
#include <cstdint>

namespace civicroute {

// Deterministic counter-mode generator built on the splitmix64 mixer
// ("splitmix64-counter/v1" in run metadata). The i-th draw of a stream
// depends only on (key, i), so substreams keyed by (seed, epoch, trip)
// reproduce identically regardless of how trips are batched into epochs.
class RngStream {
 public:
  explicit RngStream(std::uint64_t key) : state_(key) {}

  // Stream keyed by (seed, a, b); the simulator uses (scenario seed, epoch,
  // trip index).
  static RngStream substream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t k = scramble(seed + 0x9E3779B97F4A7C15ull);
    k = scramble(k ^ scramble(a + 0xD1B54A32D192ED03ull));
    k = scramble(k ^ scramble(b + 0x8CB92BA72F3D8DD7ull));
    return RngStream(k);
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return scramble(state_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform in [0, n). Modulo bias is negligible at the scales used here;
  // bit-stable output matters more.
  std::uint64_t uniform_index(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // Standard normal via Box-Muller; consumes exactly two uniforms per call.
  double gaussian() {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
  }

 private:
  static std::uint64_t scramble(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace civicroute
