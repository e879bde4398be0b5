#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace kco {

// Deterministic random source. All randomized routines in the library draw
// from this class so that results are reproducible from a single seed across
// platforms: mt19937_64 output is specified bit-exactly by the standard and
// the normal variates are produced by an explicit Box-Muller transform
// (std::normal_distribution is implementation-defined and therefore avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; generates pairs, caches the second.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], log-safe
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

  std::complex<double> normal_complex() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  // Derives a stream seed from a master seed, splitmix64-style. Used to make
  // independent checks schedule-independent under concurrent execution.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace kco
