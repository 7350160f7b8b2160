#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace hopf {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256++ with splitmix64 seeding. Self-contained so that streams are
/// bit-reproducible across platforms and standard-library versions (the
/// std::random distributions are not pinned by the standard).
///
/// Parallel substreams are derived as
///   substream(master, index, tag) : seed = splitmix64 chain over
///   (master, index + 1, tag), expanded to the four state words.
/// Aggregation over substream indices in index order makes every result
/// independent of the worker count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  static Rng substream(std::uint64_t master, std::uint64_t index, std::uint64_t tag = 0) {
    std::uint64_t sm = master;
    std::uint64_t a = splitmix64(sm);
    sm ^= (index + 1) * 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = splitmix64(sm);
    sm ^= tag * 0xd1342543de82ef95ULL;
    std::uint64_t c = splitmix64(sm);
    Rng r(a ^ b ^ c);
    return r;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in [0,1) with 53 bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [a,b).
  double uniform(double a, double b) { return a + (b - a) * next_double(); }

  /// Uniform integer in [0,n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  /// Standard normal via Box-Muller (pair cached per stream).
  double next_gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  std::complex<double> next_complex_gaussian() {
    return {next_gaussian(), next_gaussian()};
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::uint64_t s_[4];
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace hopf
