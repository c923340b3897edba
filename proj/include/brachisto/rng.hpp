#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace brachisto {

// PCG32 (O'Neill's pcg32, XSH-RR 64/32 variant). Chosen for its documented
// stream mechanism: identical (seed, stream) reproduces identical draws
// bit-for-bit on every platform, and distinct streams are independent, which
// lets each Monte Carlo sample own its own generator keyed by sample index.
// Floating-point draws below avoid std::uniform_real_distribution and
// std::normal_distribution on purpose: their output is implementation-defined.
class RandomSource {
 public:
  RandomSource(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {
    state_ = 0u;
    inc_ = (stream << 1u) | 1u;
    next_u32();
    state_ += seed;
    next_u32();
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const std::uint32_t xorshifted =
        static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
    const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
    return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
  }

  // uniform on [0, 1) with 53 random bits
  double next_double() {
    const std::uint64_t hi = next_u32();
    const std::uint64_t lo = next_u32();
    const std::uint64_t bits = ((hi << 32) | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

  // standard complex normal via Box-Muller: real and imaginary parts are
  // independent N(0, 1)
  std::complex<double> next_complex_normal() {
    const double u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle), r * std::sin(angle)};
  }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t seed_;
  std::uint64_t stream_;
};

}  // namespace brachisto
