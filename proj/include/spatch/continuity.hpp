#pragma once

#include <string>
#include <vector>

#include "spatch/spatch.hpp"

namespace spatch {

// Declared shared edge between two patches of a complex. Edge parameters
// run in the same direction unless reversed is set.
struct Adjacency {
  int a = 0;
  PatchEdge edge_a = PatchEdge::U0;
  int b = 0;
  PatchEdge edge_b = PatchEdge::U0;
  bool reversed = false;
};

// A set of S-Patches with declared adjacencies. ids label patches in
// reports and exports.
struct PatchComplex {
  std::vector<SPatch<double>> patches;
  std::vector<std::string> ids;
  std::vector<Adjacency> adjacencies;
};

struct EdgeContinuity {
  Adjacency adjacency;
  int samples = 0;
  double max_position_gap = 0.0;   // C0, length units
  double max_normal_angle = 0.0;   // tangent-plane angle, radians, [0, pi/2]
  int degenerate_samples = 0;      // samples where a normal was undefined
};

// A position shared by several patch corners, with the pairwise angles
// between the incident surface normals there.
struct SharedVertexDiagnostic {
  Vec3 position;
  std::vector<int> patches;  // incident patch indices
  std::vector<double> pairwise_normal_angles;  // radians, [0, pi]
};

struct ContinuityReport {
  std::vector<EdgeContinuity> edges;
  std::vector<SharedVertexDiagnostic> shared_vertices;
};

// Samples every declared adjacency at matched edge parameters and
// aggregates corner-vertex diagnostics. Tangent-plane angles are folded to
// [0, pi/2]: winding is a parametrization artifact, not a continuity
// defect.
ContinuityReport check_continuity(const PatchComplex& complex, int samples);

// Constructs patch b against the existing patch a: positions and
// along-edge tangents of b along edge_b are copied from a's edge_a (same
// parameter direction), then b is built with the compatibility residual
// absorbed only by the four tangent slots away from the shared edge. The
// shared edge is never modified, so the pair is C0 by construction.
SPatch<double> join_edge(const SPatch<double>& a, PatchEdge edge_a,
                         PatchBoundary<double> b_spec, PatchEdge edge_b);

// Three unit-square faces of a half cube (z = 0, x = 0, y = 0) meeting at
// the origin, with the three shared edges declared. The classic stress
// case: a vertex shared by three patches, where tangent-plane continuity
// cannot hold.
PatchComplex half_cube_demo();

}  // namespace spatch
