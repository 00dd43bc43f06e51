#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "wmink/geometry.hpp"
#include "wmink/integrate.hpp"

using namespace wmink;
using namespace wmink::testing;

namespace {

const Face& face_with_normal(const SymmetricPolytope& P, const Vector& u) {
  for (Index i = 0; i < P.facet_count(); ++i)
    if ((P.normals().row(i).transpose() - u).norm() < 1e-12)
      return P.faces()[i];
  throw std::runtime_error("no such face");
}

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

/// Independent CDF oracle via the classical power series
/// psi(a) = 1/2 + phi(a) * (a + a^3/3 + a^5/(3*5) + ...).
double cdf_oracle(double a) {
  double term = a, sum = a;
  for (int k = 1; k < 200; ++k) {
    term *= a * a / (2.0 * k + 1.0);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return 0.5 + sum * std::exp(-0.5 * a * a) / std::sqrt(2.0 * M_PI);
}

}  // namespace

TEST_SUITE("integrate") {
  TEST_CASE("face measures of the square under |x1|") {
    const auto sq2 = make_sq2();
    const auto x1 = make_x1(2);
    // Face {x1=1} x [-1,1]: integral of |1| dy = 2.
    CHECK(face_measure(face_with_normal(sq2, vec2(1, 0)), x1) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // Face [-1,1] x {x2=1}: integral of |x1| dx1 = 1.
    CHECK(face_measure(face_with_normal(sq2, vec2(0, 1)), x1) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("face measures of the cube under |x1|") {
    const auto cu3 = make_cu3();
    const auto x1 = make_x1(3);
    // Face {x2=1}: integral of |x1| over [-1,1]^2 = 2.
    CHECK(face_measure(face_with_normal(cu3, Vector::Unit(3, 1)), x1) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(face_measure(face_with_normal(cu3, Vector::Unit(3, 0)), x1) ==
          doctest::Approx(4.0).epsilon(1e-12));
  }

  TEST_CASE("face measure of the diamond edge under |x1|") {
    // Edge (1,0)-(0,1): parametrize (1-s, s); integral of (1-s) sqrt(2) ds
    // over [0,1] = sqrt(2)/2.
    const auto dia2 = make_dia2();
    const auto x1 = make_x1(2);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(face_measure(face_with_normal(dia2, vec2(s, s)), x1) ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
  }

  TEST_CASE("power cone face measures") {
    // Face {x1=1} x [-1,1] under <x,e1>_+^2: integral of 1 dy = 2.
    const auto sq2 = make_sq2();
    const auto cone = WeightedDensity::power_cone(vec2(1, 0), 2.0);
    CHECK(face_measure(face_with_normal(sq2, vec2(1, 0)), cone) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // Face [-1,1] x {1}: integral of x^2 over [0,1] = 1/3.
    CHECK(face_measure(face_with_normal(sq2, vec2(0, 1)), cone) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // Negative-side face carries no mass.
    CHECK(face_measure(face_with_normal(sq2, vec2(-1, 0)), cone) ==
          doctest::Approx(0.0));
  }

  TEST_CASE("cone formula on fixtures") {
    const auto x1_2 = make_x1(2);
    CHECK(body_measure_cone(make_sq2(), x1_2) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(body_measure_cone(make_cu3(), make_x1(3)) ==
          doctest::Approx(4.0).epsilon(1e-12));
    const auto leb = WeightedDensity::lebesgue();
    CHECK(body_measure_cone(make_sq2(), leb) ==
          doctest::Approx(4.0).epsilon(1e-12));
    CHECK(body_measure_cone(make_dia2(), leb) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // Integral of |x1| over the diamond: 4 * 1/6 = 2/3.
    CHECK(body_measure_cone(make_dia2(), x1_2) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(
        (void)body_measure_cone(make_sq2(), WeightedDensity::gaussian()),
        NonHomogeneousDensity);
  }

  TEST_CASE("cone formula matches Monte Carlo") {
    const auto mc_sq =
        body_measure_mc(make_sq2(), make_x1(2), 1000000, 42);
    CHECK(std::abs(mc_sq.estimate - 2.0) <= 3.0 * mc_sq.se);
    const auto leb = WeightedDensity::lebesgue();
    const auto mc_cu = body_measure_mc(make_cu3(), leb, 1000000, 42);
    CHECK(mc_cu.estimate == doctest::Approx(8.0));  // box sampling is exact
    const auto mc_dia = body_measure_mc(make_dia2(), leb, 1000000, 42);
    CHECK(std::abs(mc_dia.estimate - 2.0) <= 3.0 * mc_dia.se);
    CHECK(mc_dia.se > 0.0);
  }

  TEST_CASE("monte carlo reproducibility") {
    const auto a = body_measure_mc(make_sq2(), make_x1(2), 50000, 4242);
    const auto b = body_measure_mc(make_sq2(), make_x1(2), 50000, 4242);
    CHECK(a.estimate == b.estimate);
    CHECK(a.se == b.se);
    const auto c = body_measure_mc(make_sq2(), make_x1(2), 50000, 4243);
    CHECK(a.estimate != c.estimate);
  }

  TEST_CASE("measure homogeneity under scaling") {
    RngSequence rng(314);
    const auto x1 = make_x1(2);
    for (int trial = 0; trial < 5; ++trial) {
      const auto P = random_body(2, 5, rng);
      const double t = rng.next(0.3, 2.5);
      const double direct = body_measure_cone(P.scaled(t), x1);
      const double scaled = std::pow(t, 3.0) * body_measure_cone(P, x1);
      CHECK(direct == doctest::Approx(scaled).epsilon(1e-9));
    }
  }

  TEST_CASE("refining the decomposition does not change face measures") {
    const auto cu3 = make_cu3();
    const auto x1 = make_x1(3);
    Face refined = face_with_normal(cu3, Vector::Unit(3, 1));
    const double coarse = face_measure(refined, x1);
    std::vector<Matrix> children;
    for (const auto& S : refined.simplices) {
      const auto [l, r] = bisect_simplex(S);
      const auto [ll, lr] = bisect_simplex(l);
      const auto [rl, rr] = bisect_simplex(r);
      children.insert(children.end(), {ll, lr, rl, rr});
    }
    refined.simplices = children;
    CHECK(face_measure(refined, x1) == doctest::Approx(coarse).epsilon(1e-12));
  }

  TEST_CASE("gaussian cdf and quantile") {
    CHECK(gaussian_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(gaussian_cdf(1.0) - cdf_oracle(1.0)) < 1e-12);
    CHECK(std::abs(gaussian_cdf(-1.0) - cdf_oracle(-1.0)) < 1e-12);
    CHECK(std::abs(gaussian_cdf(2.5) - cdf_oracle(2.5)) < 1e-12);
    CHECK(gaussian_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-12));
    for (double u : {1e-6, 0.1, 0.25, 0.7, 0.9, 1.0 - 1e-6})
      CHECK(std::abs(gaussian_cdf(gaussian_quantile(u)) - u) < 1e-10);
    CHECK_THROWS_AS((void)gaussian_quantile(0.0), DomainError);
    CHECK_THROWS_AS((void)gaussian_quantile(1.5), DomainError);
  }

  TEST_CASE("gaussian measures of boxes") {
    const double edge = 2.0 * gaussian_cdf(1.0) - 1.0;
    const auto mc2 = gaussian_body_measure(make_sq2(), 1000000, 1);
    CHECK(std::abs(mc2.estimate - edge * edge) <= 3.0 * mc2.se);
    const auto mc3 = gaussian_body_measure(make_cu3(), 1000000, 1);
    CHECK(std::abs(mc3.estimate - edge * edge * edge) <= 3.0 * mc3.se);
    const auto big = gaussian_body_measure(make_sq2().scaled(100.0), 10000, 1);
    CHECK(big.estimate == doctest::Approx(1.0));
  }

  TEST_CASE("planar gaussian quadrature is near exact") {
    const double edge = 2.0 * gaussian_cdf(1.0) - 1.0;
    CHECK(std::abs(gaussian_polytope_measure_2d(make_sq2()) - edge * edge) <
          1e-10);
    const double wide = (2.0 * gaussian_cdf(2.0) - 1.0) * edge;
    const auto rect = SymmetricPolytope::from_halfspaces(
        make_sq2().normals(), (Vector(4) << 2, 1, 2, 1).finished());
    CHECK(std::abs(gaussian_polytope_measure_2d(rect) - wide) < 1e-10);
    CHECK(gaussian_polytope_measure_2d(make_sq2().scaled(100.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("gaussian segment integrals are rotation invariant") {
    // Axis-aligned closed form: segment {x=a} x [c,d] in the plane.
    const double a = 0.4, c = -0.3, d = 1.1;
    Matrix seg(2, 2);
    seg << a, a, c, d;
    const double expected = std::exp(-0.5 * a * a) / (2.0 * M_PI) *
                            std::sqrt(2.0 * M_PI) *
                            (gaussian_cdf(d) - gaussian_cdf(c));
    CHECK(gaussian_simplex_integral(seg) ==
          doctest::Approx(expected).epsilon(1e-13));

    const double phi = 0.7;
    Matrix rot(2, 2);
    rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
    CHECK(gaussian_simplex_integral(rot * seg) ==
          doctest::Approx(expected).epsilon(1e-12));
  }

  TEST_CASE("brunn-minkowski for the induced q-concave measures") {
    RngSequence rng(2718);
    for (int n : {2, 3}) {
      const auto x1 = make_x1(n);
      const auto leb = WeightedDensity::lebesgue();
      for (int trial = 0; trial < 3; ++trial) {
        const auto A = random_body(n, n + 2, rng);
        const auto B = random_body(n, n + 2, rng);
        const double lambda = rng.next(0.2, 0.8);
        const auto blend =
            minkowski_sum(A.scaled(lambda), B.scaled(1.0 - lambda));
        for (const auto& d : {leb, x1}) {
          const double q = 1.0 / (n + d.homogeneity_degree());
          const double lhs = body_measure_cone(blend, d);
          const double rhs = p_average(body_measure_cone(A, d),
                                       body_measure_cone(B, d), lambda, q);
          CHECK(lhs >= rhs - 1e-9);
        }
      }
    }
  }

  TEST_CASE("q-averages") {
    CHECK(p_average(4.0, 9.0, 0.5, 0.0) == doctest::Approx(6.0));
    CHECK(p_average(2.0, 2.0, 0.3, 0.7) == doctest::Approx(2.0));
    CHECK(p_average(1.0, 4.0, 0.5, 1.0) == doctest::Approx(2.5));
    // Monotone in q.
    CHECK(p_average(1.0, 4.0, 0.5, 0.2) <= p_average(1.0, 4.0, 0.5, 0.8));
  }
}
