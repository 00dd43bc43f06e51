#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wmink/body.hpp"
#include "wmink/density.hpp"

namespace wmink {

/// Discrete weighted Minkowski data: an even homogeneous density, antipodally
/// paired unit normals spanning the space, and positive paired face-measure
/// targets.
struct MinkowskiProblem {
  WeightedDensity density = WeightedDensity::lebesgue();
  Matrix normals;  // N x n rows, u_{N/2+i} = -u_i
  Vector targets;  // f_i > 0, f_{N/2+i} = f_i

  /// Throws on broken invariants. Normals inside the density's zero set are
  /// admitted but flagged (the interior-of-support hypothesis does not cover
  /// them; faces there can still carry positive measure).
  void validate() const;

  /// Indices whose normal lies in the zero set of the density.
  std::vector<Index> zero_set_normals() const;
};

enum class SolverStatus { converged, face_collapsed, no_convergence };

struct SolverReport {
  Vector offsets;            // beta_i of the solved polytope
  Vector residuals;          // |f_i - mu_{n-1}(F_i)| / f_i at beta
  int iterations = 0;
  std::vector<double> objective_trace;  // Phi after each accepted step
  double scale_m = 1.0;      // final dilation applied to the minimizer
  SolverStatus status = SolverStatus::no_convergence;
  std::vector<Index> hypothesis_gap_normals;
  SymmetricPolytope body;

  double max_residual() const {
    return residuals.size() ? residuals.maxCoeff() : 0.0;
  }
};

/// Solves the variational program: minimize Phi(A) = 1/(n+r) sum f_i alpha_i
/// over {A : mu(P(A)) = 1}, using that the gradient of the constraint is the
/// face-measure vector. Iterates a damped multiplicative fixed point
///   alpha_i <- alpha_i * (Phi(A) mu_{n-1}(F_i)/f_i)^tau
/// followed by a rescale restoring mu = 1; tau is halved until Phi decreases.
/// The returned offsets are beta = m alpha* with m = Phi(A*)^{1/(n+r-1)}.
/// Throws FaceCollapsed when a face stays empty for 100 consecutive
/// iterations and NoConvergence at the iteration cap.
SolverReport solve(const MinkowskiProblem& problem, double tol = 1e-7,
                   int max_iter = 10000, std::uint64_t seed = 0);

struct UniquenessReport {
  double max_pairwise_distance = 0.0;  // relative to the largest offset
  bool passed = false;
  std::vector<SolverReport> runs;
};

/// Multi-start probe of uniqueness: random log-uniform initial offsets in
/// [0.5, 2]; all starts must agree within 10*tol relative.
UniquenessReport uniqueness_probe(const MinkowskiProblem& problem, int starts,
                                  double tol, std::uint64_t seed);

struct RoundTripReport {
  Vector targets;
  SolverReport solution;
  double max_offset_error = 0.0;  // relative
  bool passed = false;
};

/// Reads the face measures of P as targets, solves, and compares the
/// recovered offsets with P (within 10*tol relative).
RoundTripReport round_trip(const SymmetricPolytope& P,
                           const WeightedDensity& d, double tol = 1e-7);

}  // namespace wmink
