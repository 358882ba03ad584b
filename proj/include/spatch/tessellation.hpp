#pragma once

#include <span>
#include <vector>

#include "spatch/hermite.hpp"
#include "spatch/spatch.hpp"

namespace spatch {

// Cell-diagonal choice when triangulating the parameter grid. Main splits
// every cell along the v = u direction, Anti along v = 1 - u, Alternating
// checkerboards the two (cell (i,j) uses Main iff i+j is even).
enum class TessellationPattern { DiagMain, DiagAnti, Alternating };

const char* pattern_name(TessellationPattern p);

struct VertexProvenance {
  int patch_id = 0;
  double u = 0.0, v = 0.0;
};

// Indexed triangle mesh. Vertices are always produced by surface
// evaluation at the provenance parameters, never interpolated, so the
// vertex buffer is independent of the triangulation pattern.
struct TriangleMesh {
  std::vector<Vec3> vertices;
  std::vector<Vec3> normals;
  std::vector<std::array<int, 3>> triangles;
  std::vector<VertexProvenance> provenance;
  // Normal at this vertex was degenerate and replaced by a neighbor
  // average (or the +z fallback).
  std::vector<uint8_t> degenerate_normal;
};

// Uniform (cells+1)^2 grid, 2*cells^2 triangles, winding consistent with
// the du x dv normal orientation.
TriangleMesh tessellate(const Patch3<double>& p, int cells,
                        TessellationPattern pattern, int patch_id = 0);

// Appends src to dst, shifting triangle indices.
void append_mesh(TriangleMesh& dst, const TriangleMesh& src);

// Samples of the full-domain diagonal curve at segments+1 uniform
// parameters.
std::vector<Vec3> diagonal_polyline(const Patch3<double>& p, DiagonalKind d,
                                    int segments);

struct CubicFit {
  std::array<double, 4> coeffs{};  // ascending
  double max_residual = 0.0;       // max |p(t_i) - y_i|
};

// Least-squares cubic through (t_i, y_i).
CubicFit fit_cubic(std::span<const double> t, std::span<const double> y);

// Per-pattern mesh statistics plus the cubic-fit residuals of both
// full-domain diagonals (33 samples per coordinate). For a valid S-Patch
// the fit residuals vanish to rounding; a generic bicubic patch leaves a
// visible degree-6 remainder.
struct PatternEquivalenceReport {
  struct PerPattern {
    TessellationPattern pattern;
    // Max over cells of |chord midpoint - surface midpoint| of the chosen
    // cell diagonal.
    double max_midpoint_deviation = 0.0;
  };
  std::array<PerPattern, 3> patterns;
  std::array<double, 3> main_fit_residual{};  // per coordinate
  std::array<double, 3> anti_fit_residual{};
  double scale = 1.0;  // control scale of the patch
};

PatternEquivalenceReport pattern_equivalence_report(const Patch3<double>& p,
                                                    int cells);

}  // namespace spatch
