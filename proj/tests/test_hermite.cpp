#include <doctest.h>

#include <random>

#include "spatch/hermite.hpp"
#include "test_helpers.hpp"

using namespace spatch;
using namespace spatch::testing;

namespace {

Patch3<double> planar_uv_patch() {
  return construct_spatch(planar_uv_boundary(), ConstructionPolicy::Strict)
      .patch;
}

}  // namespace

TEST_SUITE("hermite") {

TEST_CASE("hermite matrix entries") {
  const auto mh = hermite_matrix<Rational>();
  CHECK(mh(0, 0) == Rational(2));
  CHECK(mh(3, 1) == Rational(-1));
  // Row sums: only the second basis row survives at u = 1.
  const std::array<long, 4> expected = {0, 1, 0, 0};
  for (int r = 0; r < 4; ++r) {
    Rational sum = rat(0);
    for (int c = 0; c < 4; ++c) sum += mh(r, c);
    CHECK(sum == Rational(expected[r]));
  }
}

TEST_CASE("curve evaluation") {
  HermiteCurve c{};
  SUBCASE("midpoint of the symmetric blend") {
    c.p1 = {1.0, 0.0, 0.0};  // control vector (0, 1, 0, 0) in x
    const auto r = curve_eval(c, 0.5);
    CHECK(r.position.x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(!r.extrapolated);
  }
  SUBCASE("endpoint interpolation") {
    c = {{1.5, -2.0, 0.25}, {9.0, 1.0, 2.0}, {3.0, 1.0, 4.0}, {1.0, 5.0, 9.0}};
    const auto r = curve_eval(c, 0.0);
    CHECK(r.position.x == 1.5);
    CHECK(r.position.y == -2.0);
    CHECK(r.position.z == 0.25);
    CHECK(curve_eval(c, 1.0).position.x == doctest::Approx(9.0).epsilon(1e-14));
  }
  SUBCASE("tangent basis value H3(1/2) = 1/8") {
    c.m0 = {1.0, 0.0, 0.0};  // control vector (0, 0, 1, 0) in x
    CHECK(curve_eval(c, 0.5).position.x ==
          doctest::Approx(0.125).epsilon(1e-14));
  }
  SUBCASE("extrapolation is flagged, not rejected") {
    CHECK(curve_eval(c, 1.25).extrapolated);
    CHECK(!curve_eval(c, 1.0).extrapolated);
  }
}

TEST_CASE("patch corner interpolation") {
  std::mt19937 g(101);
  for (int trial = 0; trial < 25; ++trial) {
    const Patch3<double> p = random_patch(g);
    for (auto [u, v] : {std::pair{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}}) {
      const Vec3 pos = patch_eval(p, u, v).position;
      const int r = u > 0.5 ? 1 : 0, c = v > 0.5 ? 1 : 0;
      for (int i = 0; i < 3; ++i)
        CHECK(pos[i] == doctest::Approx(p.coord(i)(r, c)).epsilon(1e-12));
    }
  }
}

TEST_CASE("planar patch evaluation x = u + v") {
  const Patch3<double> p = planar_uv_patch();
  CHECK(patch_eval(p, 0.25, 0.5).position.x ==
        doctest::Approx(0.75).epsilon(1e-14));
  // Bilinear precision at random parameters.
  std::mt19937 g(7);
  for (int trial = 0; trial < 100; ++trial) {
    const double u = urand(g, 0.0, 1.0), v = urand(g, 0.0, 1.0);
    const Vec3 pos = patch_eval(p, u, v).position;
    CHECK(pos.x == doctest::Approx(u + v).epsilon(1e-12));
    CHECK(pos.y == doctest::Approx(u).epsilon(1e-12));
    CHECK(pos.z == doctest::Approx(v).epsilon(1e-12));
  }
}

TEST_CASE("patch extrapolation is flagged, not rejected") {
  const Patch3<double> p = planar_uv_patch();
  CHECK(!patch_eval(p, 0.0, 1.0).extrapolated);
  CHECK(patch_eval(p, 1.5, 0.5).extrapolated);
  CHECK(patch_eval(p, 0.5, -0.01).extrapolated);
  // Still the polynomial extension: x = u + v holds outside the square.
  CHECK(patch_eval(p, 1.5, 0.5).position.x ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("partial derivatives") {
  SUBCASE("planar patch has constant du") {
    const Patch3<double> p = planar_uv_patch();
    std::mt19937 g(13);
    for (int trial = 0; trial < 20; ++trial) {
      const auto d = patch_partials(p, urand(g, 0, 1), urand(g, 0, 1));
      CHECK(d.du.x == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(d.dv.x == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("corner partials reproduce the tangent blocks") {
    std::mt19937 g(17);
    const Patch3<double> p = random_patch(g);
    const auto d = patch_partials(p, 0.0, 0.0);
    for (int i = 0; i < 3; ++i) {
      CHECK(d.dv[i] == doctest::Approx(p.coord(i)(0, 2)).epsilon(1e-12));
      CHECK(d.du[i] == doctest::Approx(p.coord(i)(2, 0)).epsilon(1e-12));
    }
    const auto d11 = patch_partials(p, 1.0, 1.0);
    for (int i = 0; i < 3; ++i) {
      CHECK(d11.dv[i] == doctest::Approx(p.coord(i)(1, 3)).epsilon(1e-12));
      CHECK(d11.du[i] == doctest::Approx(p.coord(i)(3, 1)).epsilon(1e-12));
    }
  }
  SUBCASE("constant patch has vanishing partials") {
    Patch3<double> p;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        p.x(r, c) = 4.0;
        p.y(r, c) = -1.0;
        p.z(r, c) = 0.5;
      }
    const auto d = patch_partials(p, 0.3, 0.7);
    for (int i = 0; i < 3; ++i) {
      CHECK(d.du[i] == doctest::Approx(0.0));
      CHECK(d.dv[i] == doctest::Approx(0.0));
    }
  }
}

TEST_CASE("partials agree with central differences") {
  std::mt19937 g(19);
  const double h = 1e-5;
  for (int trial = 0; trial < 50; ++trial) {
    const Patch3<double> p = random_patch(g);
    const double u = urand(g, 0.0, 1.0), v = urand(g, 0.0, 1.0);
    const auto d = patch_partials(p, u, v);
    const Vec3 du_fd =
        (1.0 / (2 * h)) * (patch_eval(p, u + h, v).position -
                           patch_eval(p, u - h, v).position);
    const Vec3 dv_fd =
        (1.0 / (2 * h)) * (patch_eval(p, u, v + h).position -
                           patch_eval(p, u, v - h).position);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::fabs(d.du[i] - du_fd[i]) < 1e-6);
      CHECK(std::fabs(d.dv[i] - dv_fd[i]) < 1e-6);
    }
  }
}

TEST_CASE("normals") {
  SUBCASE("flat z = 0 patch") {
    const Patch3<double> p =
        construct_spatch(flat_z0_boundary(), ConstructionPolicy::Strict).patch;
    const Vec3 n = patch_normal(p, 0.5, 0.5);
    CHECK(n.x == doctest::Approx(0.0));
    CHECK(n.y == doctest::Approx(0.0));
    CHECK(std::fabs(n.z) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("constant patch is degenerate everywhere") {
    Patch3<double> p;
    p.x(0, 0) = p.x(0, 1) = p.x(1, 0) = p.x(1, 1) = 2.0;
    CHECK_THROWS_AS(patch_normal(p, 0.5, 0.5), DegenerateNormalError);
    try {
      patch_normal(p, 0.25, 0.75);
    } catch (const DegenerateNormalError& e) {
      CHECK(e.u == 0.25);
      CHECK(e.v == 0.75);
    }
  }
  SUBCASE("axis-aligned face center normal") {
    // Face of the unit cube in the z = 0 plane, parametrized (u,v,0):
    // du x dv points along +z to machine precision.
    const Patch3<double> p =
        construct_spatch(flat_z0_boundary(), ConstructionPolicy::Strict).patch;
    const Vec3 n = patch_normal(p, 0.5, 0.5);
    CHECK(dot(n, Vec3{0.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("boundary curves") {
  SUBCASE("edge v1 exposes the second value column") {
    std::mt19937 g(29);
    const Patch3<double> p = random_patch(g);
    const HermiteCurve c = boundary_curve(p, PatchEdge::V1);
    for (int i = 0; i < 3; ++i) {
      CHECK(c.p0[i] == p.coord(i)(0, 1));
      CHECK(c.p1[i] == p.coord(i)(1, 1));
      CHECK(c.m0[i] == p.coord(i)(2, 1));
      CHECK(c.m1[i] == p.coord(i)(3, 1));
    }
  }
  SUBCASE("planar patch edge v0 is x(t) = t") {
    const Patch3<double> p = planar_uv_patch();
    const HermiteCurve c = boundary_curve(p, PatchEdge::V0);
    for (int s = 0; s <= 10; ++s) {
      const double t = s / 10.0;
      CHECK(curve_eval(c, t).position.x == doctest::Approx(t).epsilon(1e-12));
    }
  }
  SUBCASE("curves match the surface restriction on all four edges") {
    std::mt19937 g(31);
    for (int trial = 0; trial < 100; ++trial) {
      const Patch3<double> p = random_patch(g);
      for (PatchEdge e :
           {PatchEdge::U0, PatchEdge::U1, PatchEdge::V0, PatchEdge::V1}) {
        const HermiteCurve c = boundary_curve(p, e);
        for (int s = 0; s < 20; ++s) {
          const double t = static_cast<double>(s) / 19;
          const auto [u, v] = edge_parameter(e, t);
          const Vec3 on_curve = curve_eval(c, t).position;
          const Vec3 on_patch = patch_eval(p, u, v).position;
          for (int i = 0; i < 3; ++i)
            CHECK(std::fabs(on_curve[i] - on_patch[i]) < 1e-10);
        }
      }
    }
  }
}

}  // TEST_SUITE
