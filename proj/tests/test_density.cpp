#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wmink/density.hpp"

using namespace wmink;
using namespace wmink::testing;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

}  // namespace

TEST_SUITE("density") {
  TEST_CASE("evaluation of built-in kinds") {
    const auto x1 = make_x1(2);
    CHECK(x1(vec2(2, 5)) == doctest::Approx(2.0));
    CHECK(x1(vec2(-3, 1)) == doctest::Approx(3.0));

    const auto leb = WeightedDensity::lebesgue();
    CHECK(leb(vec2(7, -4)) == 1.0);

    const auto cone = WeightedDensity::power_cone(vec2(1, 0), 2.0);
    CHECK(cone(vec2(3, 0)) == doctest::Approx(9.0));
    CHECK(cone(vec2(-3, 0)) == 0.0);  // zero outside the support cone

    const auto gauss = WeightedDensity::gaussian();
    CHECK(gauss(vec2(0, 0)) == doctest::Approx(1.0 / (2.0 * M_PI)));
  }

  TEST_CASE("declared degrees") {
    const auto x1 = make_x1(2);
    CHECK(x1.homogeneity_degree() == 1.0);
    CHECK(*x1.concavity_degree() == 1.0);
    CHECK(x1.is_even());

    const auto cone = WeightedDensity::power_cone(vec2(0, 1), 2.0);
    CHECK(cone.homogeneity_degree() == 2.0);
    CHECK(*cone.concavity_degree() == 0.5);
    CHECK(!cone.is_even());

    CHECK(WeightedDensity::lebesgue().homogeneity_degree() == 0.0);
    CHECK(std::isinf(*WeightedDensity::lebesgue().concavity_degree()));
    CHECK_THROWS_AS((void)WeightedDensity::gaussian().homogeneity_degree(),
                    NonHomogeneousDensity);
  }

  TEST_CASE("homogeneity check") {
    CHECK(check_homogeneity(make_x1(2), 1000, 7).passed);
    CHECK(check_homogeneity(make_x1(2), 1000, 7).max_relative_deviation <=
          1e-12);
    CHECK(check_homogeneity(WeightedDensity::lebesgue(), 1000, 7, 2).passed);
    CHECK(check_homogeneity(WeightedDensity::power_cone(vec2(1, 0), 3.0), 1000,
                            7)
              .passed);

    // |x1| + 1 declared 1-homogeneous is not homogeneous.
    const auto shifted = WeightedDensity::custom(
        [](const Vector& x) { return std::abs(x[0]) + 1.0; }, 1.0, 1.0,
        vec2(1, 0), true);
    const auto report = check_homogeneity(shifted, 1000, 7);
    CHECK(!report.passed);
    CHECK(report.max_relative_deviation > 1e-9);
  }

  TEST_CASE("p-concavity check") {
    CHECK(check_p_concavity(make_x1(2), 2000, 11).passed);
    CHECK(check_p_concavity(WeightedDensity::power_cone(vec2(1, 0), 2.0), 2000,
                            11)
              .passed);
    CHECK(check_p_concavity(WeightedDensity::lebesgue(), 10, 11, 2).passed);

    // x1^2 declared 1-concave on {x1 > 0} is convex, not concave.
    const auto square = WeightedDensity::custom(
        [](const Vector& x) { return x[0] > 0.0 ? x[0] * x[0] : 0.0; }, 2.0,
        1.0, vec2(1, 0), false);
    const auto report = check_p_concavity(square, 2000, 11);
    CHECK(!report.passed);
    CHECK(report.worst_violation > 1e-10);
  }

  TEST_CASE("implied superadditivity") {
    // Equality on a common ray: x = y = e1 gives 2 >= (1+1)^1.
    CHECK(check_implied_concavity(make_x1(2), 10000, 13).passed);
    CHECK(check_implied_concavity(WeightedDensity::power_cone(vec2(1, 0), 3.0),
                                  10000, 13)
              .passed);
  }

  TEST_CASE("evenness check") {
    CHECK(check_evenness(make_x1(2), 10000, 17).passed);
    CHECK(check_evenness(WeightedDensity::gaussian(), 10000, 17, 2).passed);
    CHECK(check_evenness(WeightedDensity::lebesgue(), 100, 17, 3).passed);
    const auto cone = WeightedDensity::power_cone(vec2(1, 0), 2.0);
    CHECK(check_evenness(cone, 100, 17).max_deviation > 0.0);
  }

  TEST_CASE("concavity profile") {
    const auto profile = ConcavityProfile::of(make_x1(2), 2);
    CHECK(profile.q == doctest::Approx(1.0 / 3.0));
    CHECK(std::abs(profile.q * (profile.n + profile.r) - 1.0) < 1e-14);

    const auto leb = ConcavityProfile::of(WeightedDensity::lebesgue(), 4);
    CHECK(leb.q == doctest::Approx(0.25));
    CHECK(std::abs(leb.q * (leb.n + leb.r) - 1.0) < 1e-14);

    // q = p/(np+1) with r = 1/p matches 1/(n+r).
    const auto cone = WeightedDensity::power_cone(vec2(1, 0), 2.0);
    const auto cp = ConcavityProfile::of(cone, 2);
    const double p = *cone.concavity_degree();
    CHECK(cp.q == doctest::Approx(p / (2.0 * p + 1.0)));
  }

  TEST_CASE("gaussian rejected by homogeneity-dependent checks") {
    CHECK_THROWS_AS(
        (void)check_homogeneity(WeightedDensity::gaussian(), 10, 1, 2),
        NonHomogeneousDensity);
    CHECK_THROWS_AS(
        (void)check_p_concavity(WeightedDensity::gaussian(), 10, 1, 2),
        DomainError);
  }
}
