#include "wmink/surface_measure.hpp"

#include <algorithm>
#include <cmath>

#include "wmink/rng.hpp"

namespace wmink {

SphericalAtomicMeasure sigma(const SymmetricPolytope& P,
                             const WeightedDensity& d) {
  const QuadratureSpec spec = QuadratureSpec::for_density(d);
  SphericalAtomicMeasure out;
  out.directions = P.normals();
  out.weights.resize(P.facet_count());
  for (Index i = 0; i < P.facet_count(); ++i)
    out.weights[i] = face_measure(P.faces()[i], d, spec);
  out.density_id = d.label();
  return out;
}

SphericalAtomicMeasure sigma_scaled(const SymmetricPolytope& P,
                                    const WeightedDensity& d, double t) {
  if (!(t > 0.0)) throw DomainError("sigma_scaled: t must be positive");
  const double r = d.homogeneity_degree();  // throws NonHomogeneousDensity
  SphericalAtomicMeasure out = sigma(P, d);
  out.weights *= std::pow(t, static_cast<double>(P.dim()) + r - 1.0);
  out.scale = t;
  return out;
}

double cosine_transform(const SphericalAtomicMeasure& sigma,
                        const Vector& theta) {
  return (sigma.directions * theta).cwiseAbs().dot(sigma.weights);
}

double integrate_against(const SphericalAtomicMeasure& sigma,
                         const std::function<double(const Vector&)>& a) {
  double acc = 0.0;
  for (Index i = 0; i < sigma.size(); ++i)
    acc += sigma.weights[i] * a(sigma.directions.row(i).transpose());
  return acc;
}

PerturbationReport perturbation_continuity_check(
    const SymmetricPolytope& P, const WeightedDensity& d,
    const std::function<double(const Vector&)>& a,
    const std::vector<double>& eps_grid, std::uint64_t seed, int draws) {
  const double min_offset = P.offsets().minCoeff();
  for (double eps : eps_grid)
    if (eps > 0.05 * min_offset + 1e-15)
      throw DomainError(
          "perturbation_continuity_check: eps exceeds 0.05 * min offset");

  const double base = integrate_against(sigma(P, d), a);
  const Index half = P.facet_count() / 2;

  // Paired noise profiles keep the perturbed body centrally symmetric; the
  // same profiles are reused across the eps grid.
  RngSequence rng(seed, /*stream=*/20);
  std::vector<Vector> noise(draws);
  for (int k = 0; k < draws; ++k) {
    Vector eta(P.facet_count());
    for (Index i = 0; i < half; ++i) {
      eta[i] = rng.next(-1.0, 1.0);
      eta[half + i] = eta[i];
    }
    noise[k] = eta;
  }

  PerturbationReport report;
  report.eps = eps_grid;
  for (double eps : eps_grid) {
    double signed_sum = 0.0;
    double worst = 0.0;
    for (const auto& eta : noise) {
      for (double sign : {1.0, -1.0}) {
        const Vector offsets = P.offsets() + sign * eps * eta;
        const auto perturbed =
            SymmetricPolytope::from_halfspaces(P.normals(), offsets);
        const double gap = base - integrate_against(sigma(perturbed, d), a);
        signed_sum += gap;
        worst = std::max(worst, std::abs(gap));
      }
    }
    report.mean_gap.push_back(std::abs(signed_sum) /
                              static_cast<double>(2 * draws));
    report.max_gap.push_back(worst);
  }

  auto decreasing = [](const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] > v[i - 1] * (1.0 + 1e-9) + 1e-15) return false;
    return true;
  };
  // Grid is expected largest-first.
  report.mean_monotone = decreasing(report.mean_gap);
  report.max_monotone = decreasing(report.max_gap);
  return report;
}

}  // namespace wmink
