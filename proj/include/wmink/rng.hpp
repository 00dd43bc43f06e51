#pragma once

#include <cstdint>

#include "wmink/types.hpp"

namespace wmink {

/// Counter-based pseudo-random generator. Every value is a pure function of
/// (seed, stream, index), so shards evaluated in any order or on any number
/// of workers produce identical streams.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Derived generator with an independent key.
  CounterRng stream(std::uint64_t s) const;

  /// Uniform in [0,1) for sample index i.
  double uniform(std::uint64_t i) const;
  double uniform(std::uint64_t i, double lo, double hi) const;

  /// Standard normal for sample index i (Box-Muller on a dedicated substream).
  double normal(std::uint64_t i) const;

  std::uint64_t bits(std::uint64_t i) const;

 private:
  std::uint64_t key_;
};

/// Stateful convenience wrapper around CounterRng for sequential draws.
class RngSequence {
 public:
  explicit RngSequence(std::uint64_t seed, std::uint64_t stream = 0)
      : rng_(seed, stream) {}
  explicit RngSequence(CounterRng rng) : rng_(rng) {}

  double next() { return rng_.uniform(i_++); }
  double next(double lo, double hi) { return rng_.uniform(i_++, lo, hi); }
  double normal() { return rng_.normal(i_++); }

  Vector normal_vector(int n);
  Vector unit_vector(int n);
  Vector box_point(const Vector& halfwidth);

 private:
  CounterRng rng_;
  std::uint64_t i_ = 0;
};

}  // namespace wmink
