#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace wmink {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Guard for relative deviations of densities that vanish on cone boundaries.
inline constexpr double kTinyDenominator = 1e-300;

struct UnboundedBody : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHomogeneousDensity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateGenerators : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FaceCollapsed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wmink
