#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "wmink/body.hpp"
#include "wmink/geometry.hpp"
#include "wmink/rng.hpp"

using namespace wmink;
using namespace wmink::testing;

namespace {

bool has_vertex(const SymmetricPolytope& P, const Vector& v, double tol = 1e-9) {
  return std::any_of(P.vertices().begin(), P.vertices().end(),
                     [&](const Vector& w) {
                       return (w - v).lpNorm<Eigen::Infinity>() < tol;
                     });
}

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

}  // namespace

TEST_SUITE("body") {
  TEST_CASE("unit square from halfspaces") {
    const auto sq2 = make_sq2();
    CHECK(sq2.vertices().size() == 4);
    for (double sx : {-1.0, 1.0})
      for (double sy : {-1.0, 1.0}) CHECK(has_vertex(sq2, vec2(sx, sy)));
    CHECK(sq2.faces().size() == 4);
    for (const auto& F : sq2.faces()) CHECK(F.area == doctest::Approx(2.0));
  }

  TEST_CASE("unit cube from halfspaces") {
    const auto cu3 = make_cu3();
    CHECK(cu3.vertices().size() == 8);
    CHECK(cu3.faces().size() == 6);
    for (const auto& F : cu3.faces()) {
      CHECK(F.area == doctest::Approx(4.0));
      CHECK(F.vertices.size() == 4);
    }
  }

  TEST_CASE("cross polytope from halfspaces") {
    // Solving the 2x2 active systems by hand: {x+y=1, x-y=1} -> (1,0), etc.
    const auto dia2 = make_dia2();
    CHECK(dia2.vertices().size() == 4);
    CHECK(has_vertex(dia2, vec2(1, 0)));
    CHECK(has_vertex(dia2, vec2(0, 1)));
    CHECK(has_vertex(dia2, vec2(-1, 0)));
    CHECK(has_vertex(dia2, vec2(0, -1)));
  }

  TEST_CASE("tesseract vertices and facets") {
    Matrix normals(8, 4);
    normals.setZero();
    for (int k = 0; k < 4; ++k) {
      normals(k, k) = 1.0;
      normals(4 + k, k) = -1.0;
    }
    const auto box4 = SymmetricPolytope::from_halfspaces(normals, Vector::Ones(8));
    CHECK(box4.vertices().size() == 16);
    for (const auto& F : box4.faces()) CHECK(F.area == doctest::Approx(8.0));
  }

  TEST_CASE("support function") {
    const auto sq2 = make_sq2();
    CHECK(sq2.support(vec2(1, 0)) == doctest::Approx(1.0));
    CHECK(sq2.support(vec2(1, 1)) == doctest::Approx(2.0));
    const auto dia2 = make_dia2();
    CHECK(dia2.support(vec2(0.6, 0.8)) == doctest::Approx(0.8));
  }

  TEST_CASE("support equals offset on nonempty faces") {
    RngSequence rng(011235);
    for (int trial = 0; trial < 8; ++trial) {
      const int n = trial % 2 == 0 ? 2 : 3;
      const auto P = random_body(n, 4 + trial % 3, rng);
      for (Index i = 0; i < P.facet_count(); ++i) {
        REQUIRE(!P.faces()[i].empty());
        CHECK(P.support(P.normals().row(i).transpose()) ==
              doctest::Approx(P.offsets()[i]).epsilon(1e-9));
      }
      for (const auto& v : P.vertices()) {
        CHECK(((P.normals() * v) - P.offsets()).maxCoeff() <= 1e-9);
        CHECK(has_vertex(P, -v));  // central symmetry
      }
    }
  }

  TEST_CASE("scaling") {
    const auto sq2 = make_sq2();
    const auto big = sq2.scaled(2.0);
    CHECK(big.support(vec2(1, 0)) == doctest::Approx(2.0));
    CHECK(big.faces()[0].area == doctest::Approx(4.0));
    const auto small = make_cu3().scaled(0.5);
    CHECK(small.support(Vector::Unit(3, 2)) == doctest::Approx(0.5));

    RngSequence rng(7);
    const auto P = random_body(2, 5, rng);
    for (int k = 0; k < 16; ++k) {
      const Vector x = rng.unit_vector(2);
      CHECK(P.scaled(3.0).support(x) == doctest::Approx(3.0 * P.support(x)));
    }
  }

  TEST_CASE("minkowski sums of fixtures") {
    const auto sq2 = make_sq2();
    const auto twice = minkowski_sum(sq2, sq2);
    CHECK(twice.support(vec2(1, 0)) == doctest::Approx(2.0));
    CHECK(twice.vertices().size() == 4);

    const auto octagon = minkowski_sum(sq2, make_dia2());
    CHECK(octagon.vertices().size() == 8);
    for (double sx : {-1.0, 1.0})
      for (double sy : {-1.0, 1.0}) {
        CHECK(has_vertex(octagon, vec2(2 * sx, sy)));
        CHECK(has_vertex(octagon, vec2(sx, 2 * sy)));
      }
  }

  TEST_CASE("minkowski sum support additivity") {
    RngSequence rng(42);
    for (int n : {2, 3}) {
      const auto P = random_body(n, 4, rng);
      const auto Q = random_body(n, 5, rng);
      const auto S = minkowski_sum(P, Q);
      for (int k = 0; k < 100; ++k) {
        const Vector x = rng.unit_vector(n);
        CHECK(S.support(x) ==
              doctest::Approx(P.support(x) + Q.support(x)).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("sum with a small dilate is a dilate") {
    const auto P = make_dia2();
    const auto S = minkowski_sum(P, P.scaled(0.25));
    const auto D = P.scaled(1.25);
    RngSequence rng(3);
    for (int k = 0; k < 50; ++k) {
      const Vector x = rng.unit_vector(2);
      CHECK(S.support(x) == doctest::Approx(D.support(x)).epsilon(1e-10));
    }
  }

  TEST_CASE("minkowski sum rejects n == 4") {
    Matrix normals(8, 4);
    normals.setZero();
    for (int k = 0; k < 4; ++k) {
      normals(k, k) = 1.0;
      normals(4 + k, k) = -1.0;
    }
    const auto box4 = SymmetricPolytope::from_halfspaces(normals, Vector::Ones(8));
    CHECK_THROWS_AS((void)minkowski_sum(box4, box4), DimensionTooLarge);
  }

  TEST_CASE("construction errors") {
    // Normals confined to a plane of R^3: unbounded cylinder.
    Matrix flat(6, 3);
    const double s = 1.0 / std::sqrt(2.0);
    flat << 1, 0, 0, 0, 1, 0, s, s, 0, -1, 0, 0, 0, -1, 0, -s, -s, 0;
    CHECK_THROWS_AS(
        (void)SymmetricPolytope::from_halfspaces(flat, Vector::Ones(6)),
        UnboundedBody);

    // Coincident normals.
    Matrix dup(4, 2);
    dup << 1, 0, 1, 0, -1, 0, -1, 0;
    CHECK_THROWS_AS(
        (void)SymmetricPolytope::from_halfspaces(dup, Vector::Ones(4)),
        DegenerateInput);

    // Broken pairing.
    Matrix broken(4, 2);
    broken << 1, 0, 0, 1, 0, -1, -1, 0;
    CHECK_THROWS_AS(
        (void)SymmetricPolytope::from_halfspaces(broken, Vector::Ones(4)),
        DegenerateInput);

    Matrix ok(4, 2);
    ok << 1, 0, 0, 1, -1, 0, 0, -1;
    Vector bad_offsets(4);
    bad_offsets << 1, -1, 1, -1;
    CHECK_THROWS_AS((void)SymmetricPolytope::from_halfspaces(ok, bad_offsets),
                    DegenerateInput);
  }

  TEST_CASE("redundant halfspaces give empty faces") {
    Matrix normals(6, 2);
    const double s = 1.0 / std::sqrt(2.0);
    normals << 1, 0, 0, 1, s, s, -1, 0, 0, -1, -s, -s;
    Vector offsets(6);
    offsets << 1, 1, 5, 1, 1, 5;  // diagonal constraints never bind
    const auto P = SymmetricPolytope::from_halfspaces(normals, offsets);
    CHECK(P.vertices().size() == 4);
    CHECK(P.faces()[2].empty());
    CHECK(P.faces()[2].area == 0.0);
    CHECK(P.faces()[5].empty());
  }

  TEST_CASE("zonotope detection") {
    CHECK(is_zonotope(make_cu3()).zonotope);

    const auto oct = make_octahedron();
    const auto check = is_zonotope(oct);
    CHECK(!check.zonotope);
    CHECK(!check.certificate.empty());  // triangular 2-face

    // Every origin symmetric planar body passes.
    RngSequence rng(5);
    CHECK(is_zonotope(make_dia2()).zonotope);
    CHECK(is_zonotope(random_body(2, 6, rng)).zonotope);
  }

  TEST_CASE("zonotope detection in dimension 4") {
    Matrix gens = Matrix::Identity(4, 4);
    CHECK(is_zonotope(Zonotope(gens).realize()).zonotope);

    // 4-orthoplex conv{+-e_i}: 2-faces are triangles.
    Matrix normals(16, 4);
    for (int i = 0; i < 8; ++i) {
      for (int k = 0; k < 4; ++k) {
        const double sign = (i >> k) & 1 ? 1.0 : -1.0;
        normals(i, k) = 0.5 * sign;
        normals(8 + i, k) = -0.5 * sign;
      }
    }
    const auto orthoplex =
        SymmetricPolytope::from_halfspaces(normals, Vector::Constant(16, 0.5));
    CHECK(orthoplex.vertices().size() == 8);
    CHECK(!is_zonotope(orthoplex).zonotope);
  }

  TEST_CASE("zonotope realization of fixtures") {
    const auto sq2 = Zonotope(Matrix::Identity(2, 2)).realize();
    CHECK(sq2.vertices().size() == 4);
    CHECK(sq2.support(vec2(1, 1)) == doctest::Approx(2.0));

    const auto cu3 = Zonotope(Matrix::Identity(3, 3)).realize();
    CHECK(cu3.vertices().size() == 8);

    // Three planar generators: hexagon (2m edges). Oracle below is the hull
    // of the 2^m signed generator sums.
    Matrix gens(3, 2);
    const double s = 1.0 / std::sqrt(2.0);
    gens << 1, 0, 0, 1, s, s;
    const auto hexagon = Zonotope(gens).realize();

    std::vector<Eigen::Vector2d> sums;
    for (int mask = 0; mask < 8; ++mask) {
      Eigen::Vector2d p = Eigen::Vector2d::Zero();
      for (int j = 0; j < 3; ++j)
        p += ((mask >> j) & 1 ? 1.0 : -1.0) * Eigen::Vector2d(gens.row(j));
      sums.push_back(p);
    }
    const auto hull = convex_hull_2d(sums);
    CHECK(hexagon.vertices().size() == hull.size());
    for (const auto& h : hull) {
      Vector v(2);
      v << h.x(), h.y();
      CHECK(has_vertex(hexagon, v));
    }
    // Area of a planar zonotope: 4 * sum over generator pairs of |det|.
    const double area = 4.0 * (1.0 + s + s);
    CHECK(polygon_area_2d(hull) == doctest::Approx(area));
    CHECK(is_zonotope(hexagon).zonotope);
  }

  TEST_CASE("random zonotope realizations are zonotopes") {
    RngSequence rng(99);
    for (int trial = 0; trial < 6; ++trial) {
      const int n = 2 + trial % 3;
      const auto Z = random_zonotope(n, n + 2 + trial % 3, rng);
      CHECK(is_zonotope(Z).zonotope);
    }
  }

  TEST_CASE("degenerate generators rejected") {
    Matrix gens(3, 3);
    gens << 1, 0, 0, 0, 1, 0, 1, 1, 0;  // rank 2
    CHECK_THROWS_AS((void)Zonotope(gens), DegenerateGenerators);
  }
}
