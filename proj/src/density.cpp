#include "wmink/density.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "wmink/rng.hpp"

namespace wmink {

namespace {

Vector normalized_or_throw(Vector v, const char* what) {
  const double norm = v.norm();
  if (norm < 1e-12) throw DegenerateInput(std::string(what) + ": zero vector");
  if (std::abs(norm - 1.0) > 1e-12) v /= norm;
  return v;
}

}  // namespace

WeightedDensity WeightedDensity::lebesgue() {
  WeightedDensity d;
  d.kind_ = DensityKind::lebesgue;
  d.r_ = 0.0;
  d.p_ = std::numeric_limits<double>::infinity();
  d.even_ = true;
  d.label_ = "lebesgue";
  return d;
}

WeightedDensity WeightedDensity::abs_linear(Vector theta) {
  WeightedDensity d;
  d.kind_ = DensityKind::abs_linear;
  d.theta_ = normalized_or_throw(std::move(theta), "abs_linear");
  d.r_ = 1.0;
  d.p_ = 1.0;
  d.half_space_normal_ = d.theta_;
  d.even_ = true;
  d.label_ = "abs_linear";
  return d;
}

WeightedDensity WeightedDensity::power_cone(Vector theta, double inv_p) {
  if (!(inv_p > 0.0))
    throw DegenerateInput("power_cone: exponent 1/p must be positive");
  WeightedDensity d;
  d.kind_ = DensityKind::power_cone;
  d.theta_ = normalized_or_throw(std::move(theta), "power_cone");
  d.r_ = inv_p;
  d.p_ = 1.0 / inv_p;
  d.half_space_normal_ = d.theta_;
  d.even_ = false;
  d.label_ = "power_cone";
  return d;
}

WeightedDensity WeightedDensity::gaussian() {
  WeightedDensity d;
  d.kind_ = DensityKind::gaussian;
  d.even_ = true;
  d.label_ = "gaussian";
  return d;
}

WeightedDensity WeightedDensity::custom(Evaluator g, std::optional<double> r,
                                        std::optional<double> p,
                                        std::optional<Vector> half_space_normal,
                                        bool even, SupportPredicate support,
                                        std::string label) {
  WeightedDensity d;
  d.kind_ = DensityKind::custom;
  d.eval_ = std::move(g);
  d.r_ = r;
  d.p_ = p;
  if (half_space_normal)
    d.half_space_normal_ =
        normalized_or_throw(std::move(*half_space_normal), "half_space_normal");
  d.even_ = even;
  d.support_ = std::move(support);
  d.label_ = std::move(label);
  return d;
}

double WeightedDensity::operator()(const Vector& x) const {
  switch (kind_) {
    case DensityKind::lebesgue:
      return 1.0;
    case DensityKind::abs_linear:
      return std::abs(theta_->dot(x));
    case DensityKind::power_cone: {
      const double s = theta_->dot(x);
      return s > 0.0 ? std::pow(s, *r_) : 0.0;
    }
    case DensityKind::gaussian: {
      const Index n = x.size();
      return std::exp(-0.5 * x.squaredNorm()) *
             std::pow(2.0 * M_PI, -0.5 * static_cast<double>(n));
    }
    case DensityKind::custom: {
      if (support_ && !support_(x)) return 0.0;
      return eval_(x);
    }
  }
  return 0.0;
}

double WeightedDensity::homogeneity_degree() const {
  if (!r_)
    throw NonHomogeneousDensity(label_ + ": no declared homogeneity degree");
  return *r_;
}

bool WeightedDensity::in_support(const Vector& x) const {
  switch (kind_) {
    case DensityKind::power_cone:
      return theta_->dot(x) >= 0.0;
    case DensityKind::custom:
      return support_ ? support_(x) : true;
    default:
      return true;
  }
}

std::optional<int> WeightedDensity::piece_degree() const {
  switch (kind_) {
    case DensityKind::lebesgue:
      return 0;
    case DensityKind::abs_linear:
      return 1;
    case DensityKind::power_cone: {
      const double k = *r_;
      const double rounded = std::round(k);
      if (std::abs(k - rounded) < 1e-12) return static_cast<int>(rounded);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::optional<Vector> WeightedDensity::zero_hyperplane() const {
  if (kind_ == DensityKind::abs_linear || kind_ == DensityKind::power_cone)
    return theta_;
  return std::nullopt;
}

ConcavityProfile ConcavityProfile::of(const WeightedDensity& d, int n) {
  ConcavityProfile profile;
  profile.n = n;
  profile.r = d.homogeneity_degree();
  profile.q = 1.0 / (static_cast<double>(n) + profile.r);
  return profile;
}

namespace {

int infer_dimension(const WeightedDensity& d, int n) {
  if (n > 0) return n;
  if (d.direction()) return static_cast<int>(d.direction()->size());
  if (d.half_space_normal())
    return static_cast<int>(d.half_space_normal()->size());
  throw DomainError(d.label() + ": ambient dimension required for sampling");
}

/// Rejection-samples a point of the support inside [-1,1]^n.
Vector support_point(const WeightedDensity& d, int n, RngSequence& rng) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Vector x(n);
    for (int k = 0; k < n; ++k) x[k] = rng.next(-1.0, 1.0);
    if (d.in_support(x)) return x;
  }
  throw DomainError(d.label() + ": could not sample the support cone");
}

Vector half_space_point(const WeightedDensity& d, const Vector& v, int n,
                        RngSequence& rng) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Vector x = support_point(d, n, rng);
    const double s = v.dot(x);
    if (s > 1e-9) return x;
    if (s < -1e-9 && d.in_support(-x)) return -x;
  }
  throw DomainError(d.label() + ": could not sample the declared half space");
}

}  // namespace

HomogeneityReport check_homogeneity(const WeightedDensity& d, long samples,
                                    std::uint64_t seed, int n) {
  if (!d.is_homogeneous())
    throw NonHomogeneousDensity(d.label() + ": homogeneity check needs r");
  const int dim = infer_dimension(d, n);
  const double r = d.homogeneity_degree();

  RngSequence rng(seed, /*stream=*/1);
  HomogeneityReport report;
  report.samples = samples;
  for (long i = 0; i < samples; ++i) {
    const Vector x = support_point(d, dim, rng);
    const double a = rng.next(0.1, 10.0);
    const double lhs = d(a * x);
    const double rhs = std::pow(a, r) * d(x);
    const double dev =
        std::abs(lhs - rhs) / std::max(std::abs(lhs), kTinyDenominator);
    report.max_relative_deviation =
        std::max(report.max_relative_deviation, dev);
  }
  report.passed = report.max_relative_deviation <= 1e-9;
  return report;
}

ConcavityReport check_p_concavity(const WeightedDensity& d, long samples,
                                  std::uint64_t seed, int n) {
  const auto p = d.concavity_degree();
  if (!p) throw DomainError(d.label() + ": no declared concavity degree");
  ConcavityReport report;
  report.samples = samples;
  if (std::isinf(*p)) {
    // Constant-density convention: every segment check passes.
    report.passed = true;
    return report;
  }
  const auto v = d.half_space_normal();
  if (!v) throw DomainError(d.label() + ": no declared half-space normal");
  const int dim = infer_dimension(d, n);

  RngSequence rng(seed, /*stream=*/2);
  for (long i = 0; i < samples; ++i) {
    const Vector x = half_space_point(d, *v, dim, rng);
    const Vector y = half_space_point(d, *v, dim, rng);
    const double lambda = rng.next(0.01, 0.99);
    const Vector z = lambda * x + (1.0 - lambda) * y;
    const double lhs = std::pow(d(z), *p);
    const double rhs =
        lambda * std::pow(d(x), *p) + (1.0 - lambda) * std::pow(d(y), *p);
    report.worst_violation = std::max(report.worst_violation, rhs - lhs);
  }
  report.passed = report.worst_violation <= 1e-10;
  return report;
}

ConcavityReport check_implied_concavity(const WeightedDensity& d, long samples,
                                        std::uint64_t seed, int n) {
  if (!d.is_homogeneous() || !(d.homogeneity_degree() > 0.0))
    throw DomainError(d.label() + ": needs a positive homogeneity degree");
  const auto p = d.concavity_degree();
  if (!p || !(*p > 0.0))
    throw DomainError(d.label() + ": needs a positive concavity degree");
  const auto v = d.half_space_normal();
  if (!v) throw DomainError(d.label() + ": no declared half-space normal");
  const int dim = infer_dimension(d, n);
  const double r = d.homogeneity_degree();

  RngSequence rng(seed, /*stream=*/3);
  ConcavityReport report;
  report.samples = samples;
  for (long i = 0; i < samples; ++i) {
    const Vector x = half_space_point(d, *v, dim, rng);
    const Vector y = half_space_point(d, *v, dim, rng);
    const double lhs = d(x + y);
    const double rhs = std::pow(
        std::pow(d(x), 1.0 / r) + std::pow(d(y), 1.0 / r), r);
    report.worst_violation = std::max(report.worst_violation, rhs - lhs);
  }
  report.passed = report.worst_violation <= 1e-10;
  return report;
}

EvennessReport check_evenness(const WeightedDensity& d, long samples,
                              std::uint64_t seed, int n) {
  const int dim = infer_dimension(d, n);
  RngSequence rng(seed, /*stream=*/4);
  EvennessReport report;
  report.samples = samples;
  for (long i = 0; i < samples; ++i) {
    Vector x(dim);
    for (int k = 0; k < dim; ++k) x[k] = rng.next(-1.0, 1.0);
    report.max_deviation =
        std::max(report.max_deviation, std::abs(d(x) - d(-x)));
  }
  report.passed = !d.is_even() || report.max_deviation <= 1e-12;
  return report;
}

}  // namespace wmink
