#include "spatch/tessellation.hpp"

#include "spatch/errors.hpp"
#include "spatch/least_squares.hpp"

namespace spatch {

const char* pattern_name(TessellationPattern p) {
  switch (p) {
    case TessellationPattern::DiagMain: return "main";
    case TessellationPattern::DiagAnti: return "anti";
    case TessellationPattern::Alternating: return "alternating";
  }
  return "?";
}

TriangleMesh tessellate(const Patch3<double>& p, int cells,
                        TessellationPattern pattern, int patch_id) {
  if (cells < 1) throw Error("tessellate: cells must be >= 1");
  const int n = cells;
  const int verts_per_side = n + 1;

  TriangleMesh mesh;
  mesh.vertices.reserve(static_cast<size_t>(verts_per_side) * verts_per_side);
  auto vid = [&](int i, int j) { return i * verts_per_side + j; };

  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double u = static_cast<double>(i) / n;
      const double v = static_cast<double>(j) / n;
      mesh.vertices.push_back(patch_eval(p, u, v).position);
      mesh.provenance.push_back({patch_id, u, v});
      if (auto nrm = maybe_patch_normal(p, u, v)) {
        mesh.normals.push_back(*nrm);
        mesh.degenerate_normal.push_back(0);
      } else {
        mesh.normals.push_back({0.0, 0.0, 0.0});
        mesh.degenerate_normal.push_back(1);
      }
    }
  }

  // Degenerate normals take the average of valid grid neighbors, or +z when
  // isolated (constant patches).
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const int k = vid(i, j);
      if (!mesh.degenerate_normal[k]) continue;
      Vec3 acc{0.0, 0.0, 0.0};
      for (auto [di, dj] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
        const int ni = i + di, nj = j + dj;
        if (ni < 0 || ni > n || nj < 0 || nj > n) continue;
        if (mesh.degenerate_normal[vid(ni, nj)]) continue;
        acc = acc + mesh.normals[vid(ni, nj)];
      }
      mesh.normals[k] = norm(acc) > 0.0 ? normalized(acc) : Vec3{0.0, 0.0, 1.0};
    }
  }

  mesh.triangles.reserve(2 * static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool main_split = pattern == TessellationPattern::DiagMain;
      if (pattern == TessellationPattern::Alternating)
        main_split = (i + j) % 2 == 0;
      const int a = vid(i, j), b = vid(i + 1, j), c = vid(i + 1, j + 1),
                d = vid(i, j + 1);
      if (main_split) {
        mesh.triangles.push_back({a, b, c});
        mesh.triangles.push_back({a, c, d});
      } else {
        mesh.triangles.push_back({a, b, d});
        mesh.triangles.push_back({b, c, d});
      }
    }
  }
  return mesh;
}

void append_mesh(TriangleMesh& dst, const TriangleMesh& src) {
  const int offset = static_cast<int>(dst.vertices.size());
  dst.vertices.insert(dst.vertices.end(), src.vertices.begin(),
                      src.vertices.end());
  dst.normals.insert(dst.normals.end(), src.normals.begin(), src.normals.end());
  dst.provenance.insert(dst.provenance.end(), src.provenance.begin(),
                        src.provenance.end());
  dst.degenerate_normal.insert(dst.degenerate_normal.end(),
                               src.degenerate_normal.begin(),
                               src.degenerate_normal.end());
  for (const auto& t : src.triangles)
    dst.triangles.push_back({t[0] + offset, t[1] + offset, t[2] + offset});
}

std::vector<Vec3> diagonal_polyline(const Patch3<double>& p, DiagonalKind d,
                                    int segments) {
  if (segments < 1) throw Error("diagonal_polyline: segments must be >= 1");
  std::vector<Vec3> out;
  out.reserve(segments + 1);
  for (int i = 0; i <= segments; ++i) {
    const double t = static_cast<double>(i) / segments;
    const double v = d == DiagonalKind::Main ? t : 1.0 - t;
    out.push_back(patch_eval(p, t, v).position);
  }
  return out;
}

CubicFit fit_cubic(std::span<const double> t, std::span<const double> y) {
  if (t.size() != y.size() || t.size() < 4)
    throw ShapeError("fit_cubic: need matching sample arrays of size >= 4");
  MatRect<double> vand(static_cast<int>(t.size()), 4);
  for (size_t i = 0; i < t.size(); ++i) {
    double pw = 1.0;
    for (int k = 0; k < 4; ++k) {
      vand(static_cast<int>(i), k) = pw;
      pw *= t[i];
    }
  }
  const LeastSquaresResult ls = solve_least_squares(vand, y);
  CubicFit fit;
  for (int k = 0; k < 4; ++k) fit.coeffs[k] = ls.solution[k];
  for (size_t i = 0; i < t.size(); ++i) {
    double val = 0.0, pw = 1.0;
    for (int k = 0; k < 4; ++k) {
      val += fit.coeffs[k] * pw;
      pw *= t[i];
    }
    fit.max_residual = std::max(fit.max_residual, std::fabs(val - y[i]));
  }
  return fit;
}

namespace {

std::array<double, 3> diagonal_fit_residuals(const Patch3<double>& p,
                                             DiagonalKind d) {
  constexpr int kSegments = 32;
  const std::vector<Vec3> pts = diagonal_polyline(p, d, kSegments);
  std::vector<double> ts(pts.size());
  for (size_t i = 0; i < pts.size(); ++i)
    ts[i] = static_cast<double>(i) / kSegments;
  std::array<double, 3> out{};
  for (int c = 0; c < 3; ++c) {
    std::vector<double> ys(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) ys[i] = pts[i][c];
    out[c] = fit_cubic(ts, ys).max_residual;
  }
  return out;
}

}  // namespace

PatternEquivalenceReport pattern_equivalence_report(const Patch3<double>& p,
                                                    int cells) {
  PatternEquivalenceReport rep;
  rep.scale = control_scale(p);
  rep.main_fit_residual = diagonal_fit_residuals(p, DiagonalKind::Main);
  rep.anti_fit_residual = diagonal_fit_residuals(p, DiagonalKind::Anti);

  const std::array<TessellationPattern, 3> kPatterns = {
      TessellationPattern::DiagMain, TessellationPattern::DiagAnti,
      TessellationPattern::Alternating};
  const int n = cells;
  for (int pi = 0; pi < 3; ++pi) {
    rep.patterns[pi].pattern = kPatterns[pi];
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        bool main_split = kPatterns[pi] == TessellationPattern::DiagMain;
        if (kPatterns[pi] == TessellationPattern::Alternating)
          main_split = (i + j) % 2 == 0;
        // Endpoints of the cell's chosen diagonal edge, in parameters.
        double u0 = static_cast<double>(i) / n, u1 = static_cast<double>(i + 1) / n;
        double v0 = static_cast<double>(j) / n, v1 = static_cast<double>(j + 1) / n;
        Vec3 pa, pb;
        double um, vm;
        if (main_split) {
          pa = patch_eval(p, u0, v0).position;
          pb = patch_eval(p, u1, v1).position;
        } else {
          pa = patch_eval(p, u1, v0).position;
          pb = patch_eval(p, u0, v1).position;
        }
        um = 0.5 * (u0 + u1);
        vm = 0.5 * (v0 + v1);
        const Vec3 chord_mid = 0.5 * (pa + pb);
        const Vec3 surf_mid = patch_eval(p, um, vm).position;
        worst = std::max(worst, distance(chord_mid, surf_mid));
      }
    }
    rep.patterns[pi].max_midpoint_deviation = worst;
  }
  return rep;
}

}  // namespace spatch
