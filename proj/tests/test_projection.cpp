#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wmink/geometry.hpp"
#include "wmink/projection.hpp"

using namespace wmink;
using namespace wmink::testing;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

/// Independent projection volume: project vertices onto theta-perp and
/// measure the hull (length in the plane, polygon area in R^3).
double projection_volume(const SymmetricPolytope& P, const Vector& theta) {
  const Matrix basis = orthogonal_complement(theta);
  if (P.dim() == 2) {
    double lo = 0, hi = 0;
    for (const auto& v : P.vertices()) {
      const double s = basis.col(0).dot(v);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    return hi - lo;
  }
  std::vector<Eigen::Vector2d> shadow;
  for (const auto& v : P.vertices())
    shadow.emplace_back(basis.col(0).dot(v), basis.col(1).dot(v));
  return polygon_area_2d(convex_hull_2d(shadow));
}

}  // namespace

TEST_SUITE("projection") {
  TEST_CASE("closed forms on the square") {
    const auto sq2 = make_sq2();
    const auto x1 = make_x1(2);
    CHECK(p_mu(sq2, x1, vec2(1, 0), 1.0) == doctest::Approx(4.0));
    // Atom weights scale by t^{n+r-1} = t^2.
    CHECK(p_mu(sq2, x1, vec2(1, 0), 0.5) == doctest::Approx(1.0));
    CHECK(P_mu(sq2, x1, vec2(1, 0)) == doctest::Approx(4.0 / 3.0));
    const double s = std::sqrt(0.5);
    CHECK(P_mu(sq2, x1, vec2(s, s)) == doctest::Approx(std::sqrt(2.0)));

    const auto leb = WeightedDensity::lebesgue();
    CHECK(p_mu(sq2, leb, vec2(1, 0), 1.0) == doctest::Approx(4.0));
    CHECK(P_mu(sq2, leb, vec2(1, 0)) == doctest::Approx(2.0));
  }

  TEST_CASE("lebesgue profile equals projection volume") {
    RngSequence rng(55);
    const auto leb = WeightedDensity::lebesgue();
    for (int n : {2, 3}) {
      for (int trial = 0; trial < 4; ++trial) {
        const auto P = random_body(n, 5, rng);
        const Matrix dirs = sample_directions(n, 16, 3);
        for (Index i = 0; i < dirs.rows(); ++i) {
          const Vector theta = dirs.row(i).transpose();
          CHECK(P_mu(P, leb, theta) ==
                doctest::Approx(projection_volume(P, theta)).epsilon(1e-9));
        }
      }
    }
  }

  TEST_CASE("profile scales with exponent n + r - 1") {
    // sigma atoms scale by t^{n+r-1} and the t-integral preserves the factor:
    // P_{mu, sK} = s^{n+r-1} P_{mu,K}. Verified against direct evaluation.
    RngSequence rng(56);
    const auto P = random_body(2, 5, rng);
    const auto x1 = make_x1(2);
    const double s = 1.3;
    for (int k = 0; k < 8; ++k) {
      const Vector theta = rng.unit_vector(2);
      CHECK(P_mu(P.scaled(s), x1, theta) ==
            doctest::Approx(std::pow(s, 2.0) * P_mu(P, x1, theta))
                .epsilon(1e-9));
    }
  }

  TEST_CASE("profile is even") {
    RngSequence rng(57);
    const auto P = random_body(3, 5, rng);
    const auto x1 = make_x1(3);
    for (int k = 0; k < 8; ++k) {
      const Vector theta = rng.unit_vector(3);
      CHECK(P_mu(P, x1, theta) ==
            doctest::Approx(P_mu(P, x1, -theta)).epsilon(1e-12));
    }
  }

  TEST_CASE("gaussian profile via the t-quadrature") {
    // Trapezoid oracle on a fine fixed grid.
    const auto sq2 = make_sq2();
    const auto gauss = WeightedDensity::gaussian();
    const Vector theta = vec2(1, 0);
    const int grid = 2000;
    double oracle = 0.0;
    for (int j = 1; j < grid; ++j)
      oracle += p_mu(sq2, gauss, theta, static_cast<double>(j) / grid);
    oracle += 0.5 * p_mu(sq2, gauss, theta, 1.0);
    oracle /= grid;
    CHECK(P_mu(sq2, gauss, theta) == doctest::Approx(oracle).epsilon(1e-6));
  }

  TEST_CASE("direction sampling") {
    const Matrix dirs = sample_directions(3, 64, 11);
    CHECK(dirs.rows() >= 64);
    for (Index i = 0; i < dirs.rows(); ++i)
      CHECK(dirs.row(i).norm() == doctest::Approx(1.0).epsilon(1e-12));
    // Axes included.
    bool has_e1 = false;
    for (Index i = 0; i < dirs.rows(); ++i)
      has_e1 = has_e1 || (dirs.row(i).transpose() - Vector::Unit(3, 0)).norm() <
                             1e-12;
    CHECK(has_e1);
    // Deterministic per seed.
    CHECK((sample_directions(3, 64, 11) - dirs).norm() == 0.0);
    CHECK((sample_directions(3, 64, 12) - dirs).norm() != 0.0);
  }

  TEST_CASE("marginal oracle matches the closed form") {
    const auto sq2 = make_sq2();
    const auto x1 = make_x1(2);
    const auto at_one = marginal_check(sq2, x1, vec2(1, 0), 1.0, 200000, 8);
    CHECK(at_one.reference == doctest::Approx(4.0));
    CHECK(at_one.passed);

    const auto at_half = marginal_check(sq2, x1, vec2(1, 0), 0.5, 200000, 8);
    CHECK(at_half.reference == doctest::Approx(1.0));
    CHECK(at_half.passed);

    const auto leb = marginal_check(sq2, WeightedDensity::lebesgue(),
                                    vec2(0, 1), 1.0, 200000, 8);
    CHECK(leb.reference == doctest::Approx(4.0));
    CHECK(leb.passed);

    const auto cube = marginal_check(make_cu3(), make_x1(3),
                                     Vector::Unit(3, 0), 1.0, 200000, 8);
    CHECK(cube.passed);
  }

  TEST_CASE("profile distance") {
    const auto sq2 = make_sq2();
    const auto x1 = make_x1(2);
    CHECK(projection_distance(sq2, sq2, x1, 64, 2).max_abs_diff <= 1e-9);

    const auto distinct = projection_distance(sq2, make_dia2(), x1, 64, 2);
    CHECK(distinct.max_abs_diff > 0.1);

    // Slightly inflated square: distance tracks the scaling law.
    const double s = 1.0 + 1e-3;
    const auto near = projection_distance(sq2, sq2.scaled(s), x1, 64, 2);
    CHECK(near.max_abs_diff > 0.0);
    CHECK(near.max_abs_diff == doctest::Approx((std::pow(s, 2.0) - 1.0) *
                                               std::sqrt(2.0))
                                   .epsilon(0.3));
  }
}
