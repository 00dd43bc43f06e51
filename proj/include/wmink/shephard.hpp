#pragma once

#include <cstdint>
#include <string>

#include "wmink/body.hpp"
#include "wmink/density.hpp"

namespace wmink {

/// Volume of the unit ball, pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(int n);

struct DominanceResult {
  double delta = 0.0;  // min over sampled theta of P_{mu,L} - P_{mu,K}
  Vector argmin;
  int directions = 0;
};

/// Sampled dominance margin of the projection profiles (axes and diagonals
/// are always included). delta >= 0 means P_{mu,K} <= P_{mu,L} on samples.
DominanceResult dominance(const SymmetricPolytope& K,
                          const SymmetricPolytope& L,
                          const WeightedDensity& d, int directions,
                          std::uint64_t seed);

enum class ComparisonVerdict {
  theorem_consistent,   // hypotheses held and mu(K) <= mu(L)
  hypotheses_not_met,   // no assertion made
  violated              // would falsify the implementation
};

struct ComparisonReport {
  double delta = 0.0;
  Vector argmin;
  int directions = 0;
  bool l_is_zonotope = false;
  std::string zonotope_certificate;
  double mu_k = 0.0;
  double mu_l = 0.0;
  ComparisonVerdict verdict = ComparisonVerdict::hypotheses_not_met;
};

/// Projection-comparison check: when L is certified a zonotope and the
/// sampled dominance holds, mu(K) <= mu(L) + 1e-9 must follow.
ComparisonReport shephard_verify(const SymmetricPolytope& K,
                                 const SymmetricPolytope& L,
                                 const WeightedDensity& d, int directions,
                                 std::uint64_t seed);

struct CounterexampleReport {
  bool certified = false;
  std::string rejected_clause;  // empty when certified
  double delta = 0.0;
  double mu_k = 0.0;
  double mu_l = 0.0;
  bool l_is_zonotope = false;
};

/// Certifies a supplied dominance-reversal pair: L must not be a zonotope,
/// the sampled dominance must hold, and mu(K) > mu(L).
CounterexampleReport counterexample_verify(const SymmetricPolytope& K,
                                           const SymmetricPolytope& L,
                                           const WeightedDensity& d,
                                           int directions, std::uint64_t seed);

struct StabilityConstant {
  double circumradius = 0.0;
  double nu_n = 0.0;
  double nu_n_minus_1 = 0.0;
  double q = 0.0;
  double value = 0.0;  // (nu_n / nu_{n-1}) R(L) mu(L)^{-q}

  static StabilityConstant of(const SymmetricPolytope& L,
                              const WeightedDensity& d);
};

struct StabilityReport {
  double eps = 0.0;  // max(0, -delta) from dominance sampling
  double lhs = 0.0;  // mu(K)^{1-q}
  double rhs = 0.0;  // mu(L)^{1-q} + C eps
  double slack = 0.0;
  StabilityConstant constant;
  bool passed = false;
};

/// Stability form: mu(K)^{1-q} <= mu(L)^{1-q} + C(L,mu) eps + 1e-9 with the
/// explicit constant. L must be a certified zonotope.
StabilityReport stability_check(const SymmetricPolytope& K,
                                const SymmetricPolytope& L,
                                const WeightedDensity& d, int directions,
                                std::uint64_t seed);

struct SeparationReport {
  bool applicable = false;  // requires a strictly positive margin
  double eps = 0.0;
  double ratio = 0.0;  // (mu(L)^{1-q} - mu(K)^{1-q}) / eps
};

/// Empirical lower-bound sample for the separation constant; no pass/fail.
SeparationReport separation_report(const SymmetricPolytope& K,
                                   const SymmetricPolytope& L,
                                   const WeightedDensity& d, int directions,
                                   std::uint64_t seed);

}  // namespace wmink
