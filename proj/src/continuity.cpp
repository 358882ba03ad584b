#include "spatch/continuity.hpp"

#include <algorithm>
#include <cmath>

namespace spatch {

namespace {

// Corner indices (into PatchBoundary corner order (0,0),(0,1),(1,0),(1,1))
// lying on a given edge, ordered along the edge parameter.
std::array<int, 2> edge_corners(PatchEdge e) {
  switch (e) {
    case PatchEdge::U0: return {0, 1};
    case PatchEdge::U1: return {2, 3};
    case PatchEdge::V0: return {0, 2};
    case PatchEdge::V1: return {1, 3};
  }
  return {0, 0};
}

bool edge_runs_in_u(PatchEdge e) {
  return e == PatchEdge::V0 || e == PatchEdge::V1;
}

double clamp_unit(double x) { return std::max(-1.0, std::min(1.0, x)); }

}  // namespace

SPatch<double> join_edge(const SPatch<double>& a, PatchEdge edge_a,
                         PatchBoundary<double> b_spec, PatchEdge edge_b) {
  // Shared boundary data from the built patch a.
  const HermiteCurve shared = boundary_curve(a.patch, edge_a);

  const std::array<int, 2> corners_b = edge_corners(edge_b);
  b_spec.corners[corners_b[0]] = shared.p0;
  b_spec.corners[corners_b[1]] = shared.p1;
  auto& along = edge_runs_in_u(edge_b) ? b_spec.tangents_u : b_spec.tangents_v;
  along[corners_b[0]] = shared.m0;
  along[corners_b[1]] = shared.m1;

  // Free slots: both tangents at the two corners away from the shared edge.
  // All slots at shared-edge corners stay pinned, including the caller's
  // cross-edge tangents there.
  std::array<bool, kTangentSlots> free_slots{};
  for (int corner = 0; corner < 4; ++corner) {
    const bool on_edge = corner == corners_b[0] || corner == corners_b[1];
    free_slots[corner] = !on_edge;      // du slot of this corner
    free_slots[4 + corner] = !on_edge;  // dv slot of this corner
  }

  SPatch<double> out;
  for (int i = 0; i < 3; ++i) {
    CoordBoundary<double> cb = b_spec.coord(i);
    cb = project_tangents(cb, free_slots);
    const Twists<double> t = solve_twists(cb);
    out.patch.coord(i) = assemble_control_matrix(cb, t);
    out.alpha[i] = std::nullopt;
    out.beta[i] = std::nullopt;
    if (auto ab = alpha_beta(out.patch.coord(i))) {
      out.alpha[i] = ab->first;
      out.beta[i] = ab->second;
    }
  }
  out.report = check_spatch(out.patch, spatch_tolerance<double>());
  if (!out.report.pass)
    throw InternalDegreeError("joined patch failed its diagonal degree check");
  return out;
}

ContinuityReport check_continuity(const PatchComplex& complex, int samples) {
  if (samples < 2) throw Error("check_continuity: samples must be >= 2");
  ContinuityReport rep;

  for (const Adjacency& adj : complex.adjacencies) {
    EdgeContinuity ec;
    ec.adjacency = adj;
    ec.samples = samples;
    const Patch3<double>& pa = complex.patches[adj.a].patch;
    const Patch3<double>& pb = complex.patches[adj.b].patch;
    for (int s = 0; s < samples; ++s) {
      const double t = static_cast<double>(s) / (samples - 1);
      const double tb = adj.reversed ? 1.0 - t : t;
      const auto [ua, va] = edge_parameter(adj.edge_a, t);
      const auto [ub, vb] = edge_parameter(adj.edge_b, tb);
      const Vec3 qa = patch_eval(pa, ua, va).position;
      const Vec3 qb = patch_eval(pb, ub, vb).position;
      ec.max_position_gap = std::max(ec.max_position_gap, distance(qa, qb));
      const auto na = maybe_patch_normal(pa, ua, va);
      const auto nb = maybe_patch_normal(pb, ub, vb);
      if (na && nb) {
        const double angle = std::acos(clamp_unit(std::fabs(dot(*na, *nb))));
        ec.max_normal_angle = std::max(ec.max_normal_angle, angle);
      } else {
        ++ec.degenerate_samples;
      }
    }
    rep.edges.push_back(ec);
  }

  // Shared-vertex diagnostics: cluster the patch corners by position.
  struct Corner {
    int patch;
    double u, v;
    Vec3 position;
  };
  std::vector<Corner> corners;
  double scale = 1.0;
  for (size_t pi = 0; pi < complex.patches.size(); ++pi) {
    const Patch3<double>& p = complex.patches[pi].patch;
    for (auto [u, v] : {std::pair{0.0, 0.0}, {0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}}) {
      const Vec3 pos = patch_eval(p, u, v).position;
      corners.push_back({static_cast<int>(pi), u, v, pos});
      scale = std::max({scale, std::fabs(pos.x), std::fabs(pos.y),
                        std::fabs(pos.z)});
    }
  }
  const double same_point = 1e-9 * scale;
  std::vector<bool> used(corners.size(), false);
  for (size_t i = 0; i < corners.size(); ++i) {
    if (used[i]) continue;
    std::vector<size_t> cluster{i};
    for (size_t j = i + 1; j < corners.size(); ++j) {
      if (used[j]) continue;
      if (distance(corners[i].position, corners[j].position) <= same_point)
        cluster.push_back(j);
    }
    // Only positions where distinct patches meet are interesting.
    bool multi_patch = false;
    for (size_t k = 1; k < cluster.size(); ++k)
      if (corners[cluster[k]].patch != corners[cluster[0]].patch)
        multi_patch = true;
    if (!multi_patch) continue;
    for (size_t k : cluster) used[k] = true;

    SharedVertexDiagnostic diag;
    diag.position = corners[i].position;
    std::vector<std::optional<Vec3>> normals;
    for (size_t k : cluster) {
      diag.patches.push_back(corners[k].patch);
      normals.push_back(maybe_patch_normal(complex.patches[corners[k].patch].patch,
                                           corners[k].u, corners[k].v));
    }
    for (size_t x = 0; x < normals.size(); ++x)
      for (size_t y = x + 1; y < normals.size(); ++y) {
        if (!normals[x] || !normals[y]) continue;
        diag.pairwise_normal_angles.push_back(
            std::acos(clamp_unit(dot(*normals[x], *normals[y]))));
      }
    rep.shared_vertices.push_back(std::move(diag));
  }
  return rep;
}

PatchComplex half_cube_demo() {
  auto planar_face = [](Vec3 origin, Vec3 u_dir, Vec3 v_dir) {
    PatchBoundary<double> b;
    for (int k = 0; k < 4; ++k) {
      const double cu = k >= 2 ? 1.0 : 0.0;
      const double cv = k % 2 ? 1.0 : 0.0;
      b.corners[k] = origin + cu * u_dir + cv * v_dir;
      b.tangents_u[k] = u_dir;
      b.tangents_v[k] = v_dir;
    }
    return b;
  };

  PatchComplex complex;
  // bottom: (u,v) -> (u,v,0); side_x: (u,v) -> (0,u,v); side_y: (u,v) -> (u,0,v)
  complex.patches.push_back(construct_spatch(
      planar_face({0, 0, 0}, {1, 0, 0}, {0, 1, 0}), ConstructionPolicy::Strict));
  complex.ids.push_back("bottom");
  complex.patches.push_back(construct_spatch(
      planar_face({0, 0, 0}, {0, 1, 0}, {0, 0, 1}), ConstructionPolicy::Strict));
  complex.ids.push_back("side_x");
  complex.patches.push_back(construct_spatch(
      planar_face({0, 0, 0}, {1, 0, 0}, {0, 0, 1}), ConstructionPolicy::Strict));
  complex.ids.push_back("side_y");

  // bottom u=0 is (0,t,0), side_x v=0 is (0,t,0); bottom v=0 is (t,0,0),
  // side_y v=0 is (t,0,0); side_x u=0 is (0,0,t), side_y u=0 is (0,0,t).
  complex.adjacencies.push_back({0, PatchEdge::U0, 1, PatchEdge::V0, false});
  complex.adjacencies.push_back({0, PatchEdge::V0, 2, PatchEdge::V0, false});
  complex.adjacencies.push_back({1, PatchEdge::U0, 2, PatchEdge::U0, false});
  return complex;
}

}  // namespace spatch
