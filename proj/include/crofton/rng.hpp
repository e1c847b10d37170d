#pragma once

#include <cmath>
#include <cstdint>

namespace crofton {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t v, int k) {
  return (v << k) | (v >> (64 - k));
}

}  // namespace detail

// Deterministic, splittable PRNG: xoshiro256++ seeded through splitmix64.
// Substreams are derived from the stream key alone (not from consumed
// state), so substream(i) is reproducible no matter how many draws were
// taken from the parent. Uniform and Gaussian draws are hand-rolled so
// sequences are bit-identical across platforms and standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : key_(seed) {
    std::uint64_t x = seed;
    for (auto& w : state_) w = detail::splitmix64(x);
  }

  // Stable hash of (key, index) used to key substreams and child seeds.
  static std::uint64_t mix(std::uint64_t key, std::uint64_t index) {
    std::uint64_t x = key + 0x9E3779B97F4A7C15ULL * (index + 1);
    std::uint64_t h = detail::splitmix64(x);
    return h ^ detail::splitmix64(x);
  }

  RngStream substream(std::uint64_t index) const {
    return RngStream(mix(key_, index));
  }

  std::uint64_t key() const { return key_; }

  std::uint64_t next_u64() {
    std::uint64_t r = detail::rotl64(state_[0] + state_[3], 23) + state_[0];
    std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = detail::rotl64(state_[3], 45);
    return r;
  }

  // uniform on [0, 1)
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller (one value per call)
  double next_gaussian() {
    double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.28318530717958647692528676655900577 * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t state_[4];
};

}  // namespace crofton
