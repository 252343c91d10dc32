#pragma once

#include <cstdint>

namespace ebandit {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator. A stream is identified by a 64-bit state built by
// folding key words into a seed; draws are pure functions of (state, counter),
// so independently keyed draws are reproducible regardless of evaluation
// order. derive() splits off an independent child stream.
class Rng {
 public:
  Rng() : state_(0) {}
  explicit Rng(std::uint64_t seed) : state_(mix64(seed)) {}

  static Rng from_state(std::uint64_t raw_state) {
    Rng r;
    r.state_ = raw_state;
    return r;
  }

  Rng derive(std::uint64_t word) const {
    Rng child;
    child.state_ = mix64(state_ ^ mix64(word ^ 0xd1b54a32d192ed03ULL));
    return child;
  }

  std::uint64_t keyed_u64(std::uint64_t a) const { return mix64(state_ ^ mix64(a)); }

  std::uint64_t keyed_u64(std::uint64_t a, std::uint64_t b) const {
    return mix64(mix64(state_ ^ mix64(a)) ^ mix64(b ^ 0x9e3779b97f4a7c15ULL));
  }

  // Uniform draws in [0, 1) with 53 random bits.
  double keyed_u01(std::uint64_t a) const { return to_u01(keyed_u64(a)); }
  double keyed_u01(std::uint64_t a, std::uint64_t b) const { return to_u01(keyed_u64(a, b)); }

  // Sequential interface for consumers that draw in program order.
  std::uint64_t next_u64() { return keyed_u64(counter_++); }
  double next_u01() { return to_u01(next_u64()); }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_u01(); }

  std::uint64_t state() const { return state_; }

 private:
  static double to_u01(std::uint64_t v) { return static_cast<double>(v >> 11) * 0x1.0p-53; }

  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

}  // namespace ebandit
