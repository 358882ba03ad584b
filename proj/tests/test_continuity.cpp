#include <doctest.h>

#include <cstring>
#include <random>

#include "spatch/continuity.hpp"
#include "test_helpers.hpp"

using namespace spatch;
using namespace spatch::testing;

namespace {

// A smooth non-planar but compatible boundary: corners on a paraboloid-ish
// height field with matching tangents chosen by projection.
PatchBoundary<double> curved_boundary(std::mt19937& g) {
  PatchBoundary<double> b = random_boundary(g, -0.5, 0.5);
  for (int k = 0; k < 4; ++k) {
    const double u = k >= 2 ? 1.0 : 0.0;
    const double v = k % 2 ? 1.0 : 0.0;
    b.corners[k] = {u, v, b.corners[k].z};
    b.tangents_u[k].x = 1.0;
    b.tangents_u[k].y = 0.0;
    b.tangents_v[k].x = 0.0;
    b.tangents_v[k].y = 1.0;
  }
  return b;
}

double edge_scale(const SPatch<double>& a, const SPatch<double>& b) {
  return std::max(control_scale(a.patch), control_scale(b.patch));
}

}  // namespace

TEST_SUITE("continuity") {

TEST_CASE("joining two coplanar flat patches") {
  // Patch a: (u,v) -> (u,v,0). Patch b extends it in v: shares a's v1 edge.
  const SPatch<double> a =
      construct_spatch(flat_z0_boundary(), ConstructionPolicy::Strict);
  PatchBoundary<double> b_spec;
  for (int k = 0; k < 4; ++k) {
    const double u = k >= 2 ? 1.0 : 0.0;
    const double v = k % 2 ? 2.0 : 1.0;
    b_spec.corners[k] = {u, v, 0.0};
    b_spec.tangents_u[k] = {1.0, 0.0, 0.0};
    b_spec.tangents_v[k] = {0.0, 1.0, 0.0};
  }
  const SPatch<double> b = join_edge(a, PatchEdge::V1, b_spec, PatchEdge::V0);

  PatchComplex complex;
  complex.patches = {a, b};
  complex.ids = {"a", "b"};
  complex.adjacencies = {{0, PatchEdge::V1, 1, PatchEdge::V0, false}};
  const ContinuityReport rep = check_continuity(complex, 33);
  REQUIRE(rep.edges.size() == 1);
  CHECK(rep.edges[0].max_position_gap <= 1e-12);
  CHECK(rep.edges[0].max_normal_angle <= 1e-12);
}

TEST_CASE("joined pair is C0 along the shared edge") {
  std::mt19937 g(113);
  for (int trial = 0; trial < 10; ++trial) {
    const SPatch<double> a =
        construct_spatch(curved_boundary(g), ConstructionPolicy::Project);
    const PatchBoundary<double> b_raw = random_boundary(g);
    for (PatchEdge ea :
         {PatchEdge::U0, PatchEdge::U1, PatchEdge::V0, PatchEdge::V1}) {
      for (PatchEdge eb : {PatchEdge::U0, PatchEdge::V1}) {
        const SPatch<double> b = join_edge(a, ea, b_raw, eb);
        CHECK(b.report.pass);
        const double scale = edge_scale(a, b);
        for (int s = 0; s < 33; ++s) {
          const double t = s / 32.0;
          const auto [ua, va] = edge_parameter(ea, t);
          const auto [ub, vb] = edge_parameter(eb, t);
          const double gap = distance(patch_eval(a.patch, ua, va).position,
                                      patch_eval(b.patch, ub, vb).position);
          CHECK(gap <= 1e-12 * scale);
        }
      }
    }
  }
}

TEST_CASE("join pins the shared edge bitwise") {
  std::mt19937 g(127);
  const SPatch<double> a =
      construct_spatch(curved_boundary(g), ConstructionPolicy::Project);
  const PatchBoundary<double> b_raw = random_boundary(g);
  const SPatch<double> b = join_edge(a, PatchEdge::U1, b_raw, PatchEdge::U0);

  // Patch b's u0 edge data: positions x11 x12, d/dv tangents x13 x14 must
  // equal patch a's u1 edge data (x21 x22 x23 x24) byte for byte.
  for (int i = 0; i < 3; ++i) {
    const auto& ma = a.patch.coord(i);
    const auto& mb = b.patch.coord(i);
    for (int c = 0; c < 4; ++c) {
      const double from_a = ma(1, c);
      const double in_b = mb(0, c);
      CHECK(std::memcmp(&from_a, &in_b, sizeof(double)) == 0);
    }
  }
}

TEST_CASE("join keeps both patches valid S-Patches") {
  std::mt19937 g(131);
  for (int trial = 0; trial < 10; ++trial) {
    const SPatch<double> a =
        construct_spatch(random_boundary(g), ConstructionPolicy::Project);
    const SPatch<double> b =
        join_edge(a, PatchEdge::V1, random_boundary(g), PatchEdge::V0);
    CHECK(check_spatch(a.patch, 1e-9).pass);
    CHECK(check_spatch(b.patch, 1e-9).pass);
  }
}

TEST_CASE("empty complex reports nothing") {
  PatchComplex complex;
  complex.patches.push_back(
      construct_spatch(flat_z0_boundary(), ConstructionPolicy::Strict));
  complex.ids.push_back("only");
  const ContinuityReport rep = check_continuity(complex, 16);
  CHECK(rep.edges.empty());
  CHECK(rep.shared_vertices.empty());
}

TEST_CASE("report angles are symmetric in adjacency order") {
  const PatchComplex base = half_cube_demo();
  PatchComplex swapped = base;
  for (Adjacency& adj : swapped.adjacencies) {
    std::swap(adj.a, adj.b);
    std::swap(adj.edge_a, adj.edge_b);
  }
  const ContinuityReport r1 = check_continuity(base, 17);
  const ContinuityReport r2 = check_continuity(swapped, 17);
  REQUIRE(r1.edges.size() == r2.edges.size());
  for (size_t i = 0; i < r1.edges.size(); ++i) {
    CHECK(r1.edges[i].max_normal_angle ==
          doctest::Approx(r2.edges[i].max_normal_angle).epsilon(1e-12));
    CHECK(r1.edges[i].max_position_gap ==
          doctest::Approx(r2.edges[i].max_position_gap).epsilon(1e-12));
  }
}

TEST_CASE("half-cube demo") {
  const PatchComplex complex = half_cube_demo();
  REQUIRE(complex.patches.size() == 3);
  REQUIRE(complex.adjacencies.size() == 3);

  SUBCASE("corners are unit-cube corners") {
    for (const SPatch<double>& sp : complex.patches)
      for (auto [u, v] :
           {std::pair{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}}) {
        const Vec3 p = patch_eval(sp.patch, u, v).position;
        for (int i = 0; i < 3; ++i)
          CHECK((p[i] == doctest::Approx(0.0) || p[i] == doctest::Approx(1.0)));
      }
  }
  SUBCASE("all faces are valid S-Patches") {
    for (const SPatch<double>& sp : complex.patches)
      CHECK(check_spatch(sp.patch, 1e-9).pass);
  }
  SUBCASE("shared edges are C0; the triple corner shows the C1 break") {
    const ContinuityReport rep = check_continuity(complex, 33);
    REQUIRE(rep.edges.size() == 3);
    for (const EdgeContinuity& ec : rep.edges)
      CHECK(ec.max_position_gap <= 1e-12);

    // One vertex (the origin) is shared by all three faces, and the face
    // normals there are mutually orthogonal.
    bool found_triple = false;
    for (const SharedVertexDiagnostic& v : rep.shared_vertices) {
      if (v.patches.size() != 3) continue;
      found_triple = true;
      CHECK(norm(v.position) <= 1e-12);
      REQUIRE(v.pairwise_normal_angles.size() == 3);
      for (double angle : v.pairwise_normal_angles)
        CHECK(angle == doctest::Approx(std::acos(0.0)).epsilon(1e-9));
    }
    CHECK(found_triple);
  }
}

}  // TEST_SUITE
