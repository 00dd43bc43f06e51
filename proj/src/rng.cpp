#include "wmink/rng.hpp"

#include <cmath>

namespace wmink {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed + kGolden) ^ (stream * 0xda942042e4dd58b5ull + 1))) {}

CounterRng CounterRng::stream(std::uint64_t s) const {
  CounterRng out(0);
  out.key_ = mix64(key_ ^ (s * 0xd6e8feb86659fd93ull + 0x2545f4914f6cdd1dull));
  return out;
}

std::uint64_t CounterRng::bits(std::uint64_t i) const {
  return mix64(key_ + i * kGolden);
}

double CounterRng::uniform(std::uint64_t i) const {
  return static_cast<double>(bits(i) >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(std::uint64_t i, double lo, double hi) const {
  return lo + (hi - lo) * uniform(i);
}

double CounterRng::normal(std::uint64_t i) const {
  // Independent substream keeps normal draws decoupled from uniform(i).
  const std::uint64_t k = mix64(key_ ^ 0x5851f42d4c957f2dull);
  const double u1 =
      static_cast<double>(mix64(k + (2 * i) * kGolden) >> 11) * 0x1.0p-53;
  const double u2 =
      static_cast<double>(mix64(k + (2 * i + 1) * kGolden) >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1 + 0x1.0p-60));
  return r * std::cos(2.0 * M_PI * u2);
}

Vector RngSequence::normal_vector(int n) {
  Vector x(n);
  for (int k = 0; k < n; ++k) x[k] = normal();
  return x;
}

Vector RngSequence::unit_vector(int n) {
  Vector x = normal_vector(n);
  double norm = x.norm();
  while (norm < 1e-12) {
    x = normal_vector(n);
    norm = x.norm();
  }
  return x / norm;
}

Vector RngSequence::box_point(const Vector& halfwidth) {
  Vector x(halfwidth.size());
  for (Index k = 0; k < halfwidth.size(); ++k)
    x[k] = next(-halfwidth[k], halfwidth[k]);
  return x;
}

}  // namespace wmink
