#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "spatch/errors.hpp"
#include "spatch/geometry.hpp"
#include "spatch/matrix.hpp"

namespace spatch {

// Hermite cubic basis matrix. A curve is x(t) = g^T M_H [t^3, t^2, t, 1]^T
// with geometry vector g = [p0, p1, m0, m1] (end points, end derivatives).
template <Scalar S>
Mat4<S> hermite_matrix() {
  return Mat4<S>::from_rows({{2, -3, 0, 1},  //
                             {-2, 3, 0, 0},
                             {1, -2, 1, 0},
                             {1, -1, 0, 0}});
}

// [t^3, t^2, t, 1]
template <Scalar S>
Vec4<S> parameter_powers(const S& t) {
  return {S(t * t * t), S(t * t), t, scalar_of<S>(1)};
}

// d/dt of parameter_powers: [3t^2, 2t, 1, 0]
template <Scalar S>
Vec4<S> parameter_powers_derivative(const S& t) {
  return {S(scalar_of<S>(3) * t * t), S(scalar_of<S>(2) * t), scalar_of<S>(1),
          scalar_of<S>(0)};
}

inline bool outside_unit_interval(double t) { return t < 0.0 || t > 1.0; }

// One Hermite cubic curve in E3: endpoint positions p0, p1 and endpoint
// derivatives m0, m1 with respect to t in [0,1].
struct HermiteCurve {
  Vec3 p0, p1, m0, m1;
};

struct CurvePoint {
  Vec3 position;
  // Parameter fell outside [0,1]; the value is the polynomial extension.
  bool extrapolated = false;
};

inline CurvePoint curve_eval(const HermiteCurve& c, double t) {
  const Vec4<double> w = hermite_matrix<double>() * parameter_powers(t);
  Vec3 p = w[0] * c.p0 + w[1] * c.p1 + w[2] * c.m0 + w[3] * c.m1;
  return {p, outside_unit_interval(t)};
}

// Control matrix of one coordinate of a bicubic Hermite patch,
// x(u,v) = u^T M_H^T X M_H v. Block layout (1-based math indices on the
// left, 0-based storage on the right):
//
//   x11 x12 | x13 x14      (0,0) (0,1) | (0,2) (0,3)
//   x21 x22 | x23 x24      (1,0) (1,1) | (1,2) (1,3)
//   --------+--------  ~~  ------------+------------
//   x31 x32 | x33 x34      (2,0) (2,1) | (2,2) (2,3)
//   x41 x42 | x43 x44      (3,0) (3,1) | (3,2) (3,3)
//
// Upper-left: corner values. Upper-right: d/dv tangents. Lower-left: d/du
// tangents. Lower-right: twists d2/dudv. Rows follow u, columns follow v:
// x11 = x(0,0), x12 = x(0,1), x21 = x(1,0), x22 = x(1,1).
template <Scalar S>
using GeometryMatrix4 = Mat4<S>;

// One surface patch in E3: a control matrix per coordinate, 48 scalars.
template <Scalar S>
struct Patch3 {
  GeometryMatrix4<S> x, y, z;

  const GeometryMatrix4<S>& coord(int i) const {
    return i == 0 ? x : (i == 1 ? y : z);
  }
  GeometryMatrix4<S>& coord(int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

template <Scalar S>
struct SurfacePoint {
  Vec3T<S> position;
  bool extrapolated = false;
};

template <Scalar S>
SurfacePoint<S> patch_eval(const Patch3<S>& p, const S& u, const S& v) {
  const Mat4<S> mh = hermite_matrix<S>();
  const Vec4<S> wu = mh * parameter_powers(u);
  const Vec4<S> wv = mh * parameter_powers(v);
  Vec3T<S> pos{quad_form(wu, p.x, wv), quad_form(wu, p.y, wv),
               quad_form(wu, p.z, wv)};
  bool extra = false;
  if constexpr (is_rational_v<S>)
    extra = u < Rational(0) || u > Rational(1) || v < Rational(0) || v > Rational(1);
  else
    extra = outside_unit_interval(u) || outside_unit_interval(v);
  return {pos, extra};
}

struct PatchPartials {
  Vec3 du, dv;
};

inline PatchPartials patch_partials(const Patch3<double>& p, double u, double v) {
  const Mat4<double> mh = hermite_matrix<double>();
  const Vec4<double> wu = mh * parameter_powers(u);
  const Vec4<double> wv = mh * parameter_powers(v);
  const Vec4<double> wdu = mh * parameter_powers_derivative(u);
  const Vec4<double> wdv = mh * parameter_powers_derivative(v);
  PatchPartials out;
  for (int i = 0; i < 3; ++i) {
    out.du[i] = quad_form(wdu, p.coord(i), wv);
    out.dv[i] = quad_form(wu, p.coord(i), wdv);
  }
  return out;
}

// Diagonal of the bounding box of the four patch corners; the scale factor
// for degeneracy thresholds.
inline double corner_bbox_diagonal(const Patch3<double>& p) {
  Vec3 lo, hi;
  for (int i = 0; i < 3; ++i) {
    const auto& m = p.coord(i);
    double mn = m(0, 0), mx = m(0, 0);
    for (auto [r, c] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
      mn = std::min(mn, m(r, c));
      mx = std::max(mx, m(r, c));
    }
    lo[i] = mn;
    hi[i] = mx;
  }
  return distance(lo, hi);
}

// |du x dv| at (u,v) below this is treated as degenerate. Scale-aware:
// the cross product has units of length squared.
inline double degenerate_normal_threshold(const Patch3<double>& p) {
  const double d = corner_bbox_diagonal(p);
  return 1e-12 * d * d;
}

// Unit normal where defined, empty where du x dv vanishes.
inline std::optional<Vec3> maybe_patch_normal(const Patch3<double>& p, double u,
                                              double v) {
  const PatchPartials d = patch_partials(p, u, v);
  const Vec3 n = cross(d.du, d.dv);
  if (norm(n) <= degenerate_normal_threshold(p)) return std::nullopt;
  return normalized(n);
}

inline Vec3 patch_normal(const Patch3<double>& p, double u, double v) {
  if (auto n = maybe_patch_normal(p, u, v)) return *n;
  throw DegenerateNormalError("degenerate normal at (u,v) = (" +
                                  std::to_string(u) + ", " + std::to_string(v) +
                                  ")",
                              u, v);
}

// The four fixed-parameter boundaries of a patch.
enum class PatchEdge { U0, U1, V0, V1 };

constexpr const char* edge_name(PatchEdge e) {
  switch (e) {
    case PatchEdge::U0: return "u0";
    case PatchEdge::U1: return "u1";
    case PatchEdge::V0: return "v0";
    case PatchEdge::V1: return "v1";
  }
  return "?";
}

// Parameter point of edge e at edge parameter t.
inline std::pair<double, double> edge_parameter(PatchEdge e, double t) {
  switch (e) {
    case PatchEdge::U0: return {0.0, t};
    case PatchEdge::U1: return {1.0, t};
    case PatchEdge::V0: return {t, 0.0};
    case PatchEdge::V1: return {t, 1.0};
  }
  return {0.0, 0.0};
}

// Restriction of the patch to one edge, as a Hermite curve in the edge
// parameter. Edge v0 runs in u: positions x11, x21 and d/du tangents
// x31, x41; edge u0 runs in v: positions x11, x12 and d/dv tangents
// x13, x14; the others mirror these one row/column over.
inline HermiteCurve boundary_curve(const Patch3<double>& p, PatchEdge e) {
  auto pick = [&](int r0, int c0, int r1, int c1, int r2, int c2, int r3,
                  int c3) {
    HermiteCurve c;
    for (int i = 0; i < 3; ++i) {
      const auto& m = p.coord(i);
      c.p0[i] = m(r0, c0);
      c.p1[i] = m(r1, c1);
      c.m0[i] = m(r2, c2);
      c.m1[i] = m(r3, c3);
    }
    return c;
  };
  switch (e) {
    case PatchEdge::U0: return pick(0, 0, 0, 1, 0, 2, 0, 3);  // x11 x12 x13 x14
    case PatchEdge::U1: return pick(1, 0, 1, 1, 1, 2, 1, 3);  // x21 x22 x23 x24
    case PatchEdge::V0: return pick(0, 0, 1, 0, 2, 0, 3, 0);  // x11 x21 x31 x41
    case PatchEdge::V1: return pick(0, 1, 1, 1, 2, 1, 3, 1);  // x12 x22 x32 x42
  }
  return {};
}

}  // namespace spatch
