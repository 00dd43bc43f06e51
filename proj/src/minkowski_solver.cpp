#include "wmink/minkowski_solver.hpp"

#include <algorithm>
#include <cmath>

#include "wmink/integrate.hpp"
#include "wmink/rng.hpp"

namespace wmink {

namespace {

constexpr double kAngularMargin = 1e-6;

struct Iterate {
  SymmetricPolytope body;
  Vector face_measures;  // averaged over antipodal pairs
  double mu = 0.0;       // mu(P(A))
  double phi = 0.0;      // objective
  double residual = 0.0; // max_i |f_i - phi m_i| / f_i after normalization
};

class Program {
 public:
  Program(const MinkowskiProblem& problem, const QuadratureSpec& spec)
      : problem_(problem),
        spec_(spec),
        power_(static_cast<double>(problem.normals.cols()) +
               problem.density.homogeneity_degree()) {}

  double power() const { return power_; }

  /// Evaluates the iterate at offsets alpha and rescales it onto mu = 1.
  Iterate normalized(Vector& alpha) const {
    Iterate it;
    it.body = SymmetricPolytope::from_halfspaces(problem_.normals, alpha);
    const Index N = alpha.size();
    const Index half = N / 2;
    it.face_measures.resize(N);
    for (Index i = 0; i < half; ++i) {
      const double m =
          0.5 * (face_measure(it.body.faces()[i], problem_.density, spec_) +
                 face_measure(it.body.faces()[half + i], problem_.density,
                              spec_));
      it.face_measures[i] = m;
      it.face_measures[half + i] = m;
    }
    it.mu = alpha.dot(it.face_measures) / power_;
    const double s = std::pow(it.mu, -1.0 / power_);
    alpha *= s;
    it.body = it.body.scaled(s);
    it.face_measures *= std::pow(s, power_ - 1.0);
    it.mu = 1.0;
    it.phi = problem_.targets.dot(alpha) / power_;
    it.residual = 0.0;
    for (Index i = 0; i < N; ++i)
      it.residual = std::max(
          it.residual, std::abs(1.0 - it.phi * it.face_measures[i] /
                                          problem_.targets[i]));
    return it;
  }

 private:
  const MinkowskiProblem& problem_;
  const QuadratureSpec& spec_;
  double power_;
};

}  // namespace

void MinkowskiProblem::validate() const {
  const Index N = normals.rows();
  const Index n = normals.cols();
  if (N != targets.size() || N % 2 != 0 || N < 2 * n)
    throw DegenerateInput("minkowski problem: need even N >= 2n targets");
  for (Index i = 0; i < N; ++i) {
    if (std::abs(normals.row(i).norm() - 1.0) > 1e-12)
      throw DegenerateInput("minkowski problem: normals must be unit");
    if (!(targets[i] > 0.0))
      throw DegenerateInput("minkowski problem: targets must be positive");
  }
  const Index half = N / 2;
  for (Index i = 0; i < half; ++i) {
    if ((normals.row(half + i) + normals.row(i)).norm() > 1e-12)
      throw DegenerateInput("minkowski problem: antipodal pairing broken");
    if (std::abs(targets[half + i] - targets[i]) > 1e-12 * targets[i])
      throw DegenerateInput("minkowski problem: target pairing broken");
  }
  Eigen::JacobiSVD<Matrix> svd(normals);
  if (svd.singularValues()[n - 1] < 1e-10 * svd.singularValues()[0])
    throw DegenerateInput("minkowski problem: normals do not span");

  if (!density.is_homogeneous())
    throw NonHomogeneousDensity("minkowski problem: density must be homogeneous");
  if (!density.is_even())
    throw DegenerateInput("minkowski problem: density must be even");

  // Interior-of-support check with an angular margin. Even densities whose
  // support is a proper cone cannot host antipodal normal pairs.
  for (Index i = 0; i < N; ++i) {
    const Vector u = normals.row(i).transpose();
    if (!density.in_support(u))
      throw DegenerateInput(
          "minkowski problem: normal outside the support cone");
    if (density.kind() == DensityKind::power_cone &&
        density.direction()->dot(u) < kAngularMargin)
      throw DegenerateInput(
          "minkowski problem: normal within the angular margin of the "
          "support boundary");
  }
}

std::vector<Index> MinkowskiProblem::zero_set_normals() const {
  std::vector<Index> out;
  for (Index i = 0; i < normals.rows(); ++i)
    if (density(normals.row(i).transpose()) <= 0.0) out.push_back(i);
  return out;
}

SolverReport solve(const MinkowskiProblem& problem, double tol, int max_iter,
                   std::uint64_t seed) {
  problem.validate();
  const Index N = problem.normals.rows();
  const Index half = N / 2;
  const QuadratureSpec spec = QuadratureSpec::for_density(problem.density);
  const Program program(problem, spec);
  const double power = program.power();

  SolverReport report;
  report.hypothesis_gap_normals = problem.zero_set_normals();

  // Initial offsets: flat, or log-uniform in [0.5, 2] for randomized starts.
  Vector alpha = Vector::Ones(N);
  if (seed != 0) {
    RngSequence rng(seed, /*stream=*/40);
    for (Index i = 0; i < half; ++i) {
      alpha[i] = std::exp(rng.next(std::log(0.5), std::log(2.0)));
      alpha[half + i] = alpha[i];
    }
  }

  Iterate current = program.normalized(alpha);
  double tau = 0.5;
  int empty_streak = 0;
  bool converged = false;

  // Damped-Newton polish on the half-system F_i = log(phi m_i / f_i) in
  // log-offset coordinates, attempted once the multiplicative phase has
  // entered the basin (small residual, all faces alive).
  const auto newton_step = [&](Vector& a, Iterate& it) -> bool {
    if (it.residual > 1e-2) return false;
    for (Index i = 0; i < half; ++i)
      if (it.face_measures[i] <= 0.0) return false;

    const auto log_residual = [&](const Iterate& at) {
      Vector F(half);
      for (Index i = 0; i < half; ++i)
        F[i] = std::log(at.phi * at.face_measures[i] / problem.targets[i]);
      return F;
    };
    const Vector F0 = log_residual(it);

    const double h = 1e-6;
    Matrix J(half, half);
    for (Index j = 0; j < half; ++j) {
      Vector perturbed = a;
      perturbed[j] *= std::exp(h);
      perturbed[half + j] = perturbed[j];
      Iterate probe = program.normalized(perturbed);
      for (Index i = 0; i < half; ++i)
        if (probe.face_measures[i] <= 0.0) return false;
      J.col(j) = (log_residual(probe) - F0) / h;
    }

    const Vector delta = J.fullPivLu().solve(-F0);
    if (!delta.allFinite()) return false;
    double step = 1.0;
    for (int attempt = 0; attempt < 6; ++attempt, step *= 0.5) {
      Vector candidate(N);
      for (Index i = 0; i < half; ++i) {
        candidate[i] = a[i] * std::exp(step * delta[i]);
        candidate[half + i] = candidate[i];
      }
      Iterate next = program.normalized(candidate);
      if (next.residual < it.residual &&
          next.phi <= it.phi * (1.0 + 1e-9)) {
        a = candidate;
        it = next;
        return true;
      }
    }
    return false;
  };

  for (int iter = 1; iter <= max_iter; ++iter) {
    bool any_empty = false;
    for (Index i = 0; i < half; ++i)
      any_empty = any_empty || current.face_measures[i] <= 0.0;
    empty_streak = any_empty ? empty_streak + 1 : 0;
    if (empty_streak >= 100)
      throw FaceCollapsed(
          "solve: a face stayed empty for 100 consecutive iterations");

    report.iterations = iter - 1;
    report.objective_trace.push_back(current.phi);
    if (current.residual < tol) {
      converged = true;
      break;
    }
    if (iter == max_iter)
      throw NoConvergence("solve: iteration cap reached, residual " +
                          std::to_string(current.residual));

    if (newton_step(alpha, current)) continue;

    // Damped multiplicative step toward phi * m_i = f_i; empty faces are
    // pulled in by a fixed factor instead of the undefined power update.
    // The step grows while the objective keeps decreasing and is halved
    // back whenever it would increase.
    Vector ratio(N);
    for (Index i = 0; i < N; ++i)
      ratio[i] = current.phi * current.face_measures[i] / problem.targets[i];

    bool accepted = false;
    int halvings = 0;
    for (double trial_tau = tau; halvings < 60 && !accepted;
         ++halvings, trial_tau *= 0.5) {
      Vector candidate(N);
      for (Index i = 0; i < N; ++i) {
        candidate[i] = ratio[i] > 0.0
                           ? alpha[i] * std::pow(ratio[i], trial_tau)
                           : alpha[i] * std::pow(0.9, 2.0 * trial_tau);
      }
      Iterate next = program.normalized(candidate);
      if (next.phi <= current.phi * (1.0 + 1e-12)) {
        alpha = candidate;
        current = next;
        accepted = true;
        tau = halvings == 0 ? std::min(tau * 1.4, 8.0)
                            : std::max(trial_tau, 0.25);
      }
    }
    if (!accepted)
      throw NoConvergence("solve: line search stalled at iteration " +
                          std::to_string(iter));
  }
  report.status = converged ? SolverStatus::converged
                            : SolverStatus::no_convergence;

  // Restore the target scale: face measures grow by m^{n+r-1}.
  const double m = std::pow(current.phi, 1.0 / (power - 1.0));
  report.scale_m = m;
  report.offsets = m * alpha;
  report.body =
      SymmetricPolytope::from_halfspaces(problem.normals, report.offsets);
  report.residuals.resize(N);
  for (Index i = 0; i < N; ++i) {
    const double measured =
        face_measure(report.body.faces()[i], problem.density, spec);
    report.residuals[i] =
        std::abs(problem.targets[i] - measured) / problem.targets[i];
  }
  return report;
}

UniquenessReport uniqueness_probe(const MinkowskiProblem& problem, int starts,
                                  double tol, std::uint64_t seed) {
  UniquenessReport out;
  out.runs.reserve(starts);
  for (int s = 0; s < starts; ++s)
    out.runs.push_back(solve(problem, tol, 10000, seed + 1 + s));

  double scale = 0.0;
  for (const auto& run : out.runs)
    scale = std::max(scale, run.offsets.lpNorm<Eigen::Infinity>());
  for (int a = 0; a < starts; ++a)
    for (int b = a + 1; b < starts; ++b)
      out.max_pairwise_distance = std::max(
          out.max_pairwise_distance,
          (out.runs[a].offsets - out.runs[b].offsets)
                  .lpNorm<Eigen::Infinity>() /
              scale);
  out.passed = out.max_pairwise_distance < 10.0 * tol;
  return out;
}

RoundTripReport round_trip(const SymmetricPolytope& P,
                           const WeightedDensity& d, double tol) {
  const QuadratureSpec spec = QuadratureSpec::for_density(d);
  MinkowskiProblem problem;
  problem.density = d;
  problem.normals = P.normals();
  problem.targets.resize(P.facet_count());
  for (Index i = 0; i < P.facet_count(); ++i) {
    if (P.faces()[i].empty())
      throw DegenerateInput("round_trip: polytope has an empty face");
    problem.targets[i] = face_measure(P.faces()[i], d, spec);
  }

  RoundTripReport out;
  out.targets = problem.targets;
  out.solution = solve(problem, tol);
  for (Index i = 0; i < P.facet_count(); ++i)
    out.max_offset_error = std::max(
        out.max_offset_error,
        std::abs(out.solution.offsets[i] - P.offsets()[i]) / P.offsets()[i]);
  out.passed = out.max_offset_error < 10.0 * tol;
  return out;
}

}  // namespace wmink
