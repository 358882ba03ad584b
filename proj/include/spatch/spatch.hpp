#pragma once

#include <optional>

#include "spatch/hermite.hpp"
#include "spatch/polynomial.hpp"

namespace spatch {

// A bicubic patch restricted to a domain diagonal is a degree-6 curve in
// general. Main: v = u. Anti: v = 1 - u.
enum class DiagonalKind { Main, Anti };

// Substitution matrix for v = 1 - u: the power vector of (1-u) equals
// T [u^3, u^2, u, 1]^T.
template <Scalar S>
Mat4<S> t_matrix() {
  return Mat4<S>::from_rows({{-1, 3, -3, 1},  //
                             {0, 1, -2, 1},
                             {0, 0, -1, 1},
                             {0, 0, 0, 1}});
}

// Coefficient matrix of the diagonal curve in tensor form:
// Main: R = M_H^T X M_H, so x(u)|_{v=u} = u^T R u.
// Anti: R = M_H^T X M_H T, so x(u)|_{v=1-u} = u^T R u.
template <Scalar S>
Mat4<S> r_matrix(const GeometryMatrix4<S>& g, DiagonalKind d) {
  const Mat4<S> mh = hermite_matrix<S>();
  Mat4<S> r = mh.transposed() * g * mh;
  if (d == DiagonalKind::Anti) r = r * t_matrix<S>();
  return r;
}

// Diagonal curve coefficients by anti-diagonal sums of R: with power
// vectors descending, u^T R u = sum_ij r_ij u^(3-i) u^(3-j) (0-based), so
//   a6 = r00, a5 = r01+r10, a4 = r02+r11+r20, a3 = r03+r12+r21+r30,
//   a2 = r13+r22+r31, a1 = r23+r32, a0 = r33.
// Returned ascending: coeff(k) multiplies u^k.
template <Scalar S>
Poly1<S> diagonal_coeffs(const GeometryMatrix4<S>& g, DiagonalKind d) {
  const Mat4<S> r = r_matrix(g, d);
  std::vector<S> a(7, scalar_of<S>(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[6 - (i + j)] += r(i, j);
  return Poly1<S>(std::move(a));
}

// Independent cross-check of diagonal_coeffs: expand the surface in the
// Hermite blending basis and substitute the diagonal by polynomial
// composition. Shares only the polynomial primitives with the matrix
// route; the basis coefficients are written out directly.
inline Poly1<Rational> diagonal_oracle(const GeometryMatrix4<Rational>& g,
                                       DiagonalKind d) {
  using P = Poly1<Rational>;
  // Hermite blending functions, ascending coefficients:
  // H1 = 1 - 3u^2 + 2u^3, H2 = 3u^2 - 2u^3, H3 = u - 2u^2 + u^3,
  // H4 = -u^2 + u^3.
  const std::array<P, 4> basis = {
      P({rat(1), rat(0), rat(-3), rat(2)}),
      P({rat(0), rat(0), rat(3), rat(-2)}),
      P({rat(0), rat(1), rat(-2), rat(1)}),
      P({rat(0), rat(0), rat(-1), rat(1)}),
  };
  const P sub =
      d == DiagonalKind::Main ? P({rat(0), rat(1)}) : P({rat(1), rat(-1)});
  P acc;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      acc = acc + g(i, j) * (basis[i] * compose(basis[j], sub));
  return acc;
}

// ---------------------------------------------------------------------------
// Per-coordinate boundary data and the twist constraints.
//
// Forcing both diagonal curves of a bicubic patch to degree 3 ties the four
// twists to the corners and couples the eight boundary tangents through one
// linear compatibility constraint. With phi = x11 - x12 - x21 + x22:
//
//   x33 + x44 = 2 phi          x34 + x43 = 2 phi
//   x43 = -phi - b             b = x13 - x23 + x41 - x42
//   x44 = -phi - a             a = x14 - x24 + x41 - x42
//
// and the tangents must satisfy (with c = x31 - x32 - x41 + x42)
//
//   a + b + c + 4 phi = 0.
// ---------------------------------------------------------------------------

// One coordinate of the user-facing construction data. Corner order follows
// the parameter square: (0,0), (0,1), (1,0), (1,1).
template <Scalar S>
struct CoordBoundary {
  std::array<S, 4> corners;  // x11 x12 x21 x22
  std::array<S, 4> du;       // x31 x32 x41 x42 (d/du at the four corners)
  std::array<S, 4> dv;       // x13 x14 x23 x24 (d/dv at the four corners)
};

// Tangent slot order used by projection masks: du[0..3] then dv[0..3].
inline constexpr int kTangentSlots = 8;

// Signs of the tangent slots in the compatibility constraint
// x31 - x32 + x41 - x42 + x13 + x14 - x23 - x24 = -4 phi.
inline constexpr std::array<int, kTangentSlots> kCompatibilitySigns = {
    +1, -1, +1, -1,  // x31 x32 x41 x42
    +1, +1, -1, -1,  // x13 x14 x23 x24
};

template <Scalar S>
S corner_phi(const std::array<S, 4>& corners) {
  return S(corners[0] - corners[1] - corners[2] + corners[3]);
}

// Left side minus right side of the compatibility constraint; zero iff the
// tangents admit a valid twist assignment. Equals a + b + c + 4 phi.
template <Scalar S>
S compatibility_residual(const CoordBoundary<S>& b) {
  S acc = scalar_of<S>(0);
  for (int k = 0; k < 4; ++k) {
    acc += scalar_of<S>(kCompatibilitySigns[k]) * b.du[k];
    acc += scalar_of<S>(kCompatibilitySigns[4 + k]) * b.dv[k];
  }
  return S(acc + scalar_of<S>(4) * corner_phi(b.corners));
}

// Minimum-norm correction of the tangents onto the compatibility
// hyperplane, restricted to the slots marked free. Corners are never
// touched. With all slots free the residual is spread evenly over the
// eight +-1 coefficients; pinned slots (shared patch edges) concentrate it
// on the remainder.
template <Scalar S>
CoordBoundary<S> project_tangents(
    const CoordBoundary<S>& b,
    const std::array<bool, kTangentSlots>& free_slots = {true, true, true, true,
                                                         true, true, true,
                                                         true}) {
  int n_free = 0;
  for (bool f : free_slots) n_free += f ? 1 : 0;
  if (n_free == 0)
    throw Error("tangent projection: no free slots to absorb the residual");
  const S residual = compatibility_residual(b);
  CoordBoundary<S> out = b;
  const S step = S(residual / scalar_of<S>(n_free));
  for (int k = 0; k < kTangentSlots; ++k) {
    if (!free_slots[k]) continue;
    S& slot = k < 4 ? out.du[k] : out.dv[k - 4];
    slot -= scalar_of<S>(kCompatibilitySigns[k]) * step;
  }
  return out;
}

template <Scalar S>
struct Twists {
  S x33, x34, x43, x44;
};

// Scale for compatibility tolerance: max(1, |corner|, |tangent|).
template <Scalar S>
S boundary_scale(const CoordBoundary<S>& b) {
  S scale = scalar_of<S>(1);
  for (int k = 0; k < 4; ++k) {
    scale = max_of(scale, abs_of(b.corners[k]));
    scale = max_of(scale, abs_of(b.du[k]));
    scale = max_of(scale, abs_of(b.dv[k]));
  }
  return scale;
}

template <Scalar S>
S compatibility_tolerance(const CoordBoundary<S>& b) {
  if constexpr (is_rational_v<S>)
    return Rational(0);
  else
    return 1e-9 * boundary_scale(b);
}

// The twist formulas with no compatibility gate. Useful for diagnostics on
// data that is known to be incompatible.
template <Scalar S>
Twists<S> twists_unchecked(const CoordBoundary<S>& b) {
  const S phi = corner_phi(b.corners);
  const S a = S(b.dv[1] - b.dv[3] + b.du[2] - b.du[3]);
  const S bb = S(b.dv[0] - b.dv[2] + b.du[2] - b.du[3]);
  Twists<S> t;
  t.x43 = S(-phi - bb);
  t.x44 = S(-phi - a);
  t.x34 = S(scalar_of<S>(2) * phi - t.x43);
  t.x33 = S(scalar_of<S>(2) * phi - t.x44);
  return t;
}

// Twist values implied by corners and compatible boundary tangents.
template <Scalar S>
Twists<S> solve_twists(const CoordBoundary<S>& b) {
  const S residual = compatibility_residual(b);
  if (abs_of(residual) > compatibility_tolerance(b))
    throw IncompatibleTangentsError(
        "boundary tangents incompatible with corners (residual " +
            std::to_string(to_double(residual)) + "); project first",
        {to_double(residual), 0.0, 0.0});
  return twists_unchecked(b);
}

// Control matrix from boundary data plus twists.
template <Scalar S>
GeometryMatrix4<S> assemble_control_matrix(const CoordBoundary<S>& b,
                                           const Twists<S>& t) {
  GeometryMatrix4<S> m;
  m(0, 0) = b.corners[0];
  m(0, 1) = b.corners[1];
  m(1, 0) = b.corners[2];
  m(1, 1) = b.corners[3];
  m(0, 2) = b.dv[0];
  m(0, 3) = b.dv[1];
  m(1, 2) = b.dv[2];
  m(1, 3) = b.dv[3];
  m(2, 0) = b.du[0];
  m(2, 1) = b.du[1];
  m(3, 0) = b.du[2];
  m(3, 1) = b.du[3];
  m(2, 2) = t.x33;
  m(2, 3) = t.x34;
  m(3, 2) = t.x43;
  m(3, 3) = t.x44;
  return m;
}

// ---------------------------------------------------------------------------
// Validity check and alpha/beta.
// ---------------------------------------------------------------------------

template <Scalar S>
struct DiagonalResidual {
  S a6, a5, a4;  // signed high coefficients of the diagonal curve
};

template <Scalar S>
struct SPatchCheckReport {
  // [coordinate x,y,z][diagonal Main,Anti]
  std::array<std::array<DiagonalResidual<S>, 2>, 3> residuals;
  S scale;  // max(1, max |control value|); tolerances are relative to it
  bool pass = false;
};

template <Scalar S>
S control_scale(const Patch3<S>& p) {
  S scale = scalar_of<S>(1);
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) scale = max_of(scale, abs_of(p.coord(i)(r, c)));
  return scale;
}

// Degree check: the patch is an S-Patch iff a6, a5, a4 vanish for both
// diagonals of every coordinate. Float mode passes at |a_k| <= tol * scale;
// rational callers pass tol = 0 for an exact certificate.
template <Scalar S>
SPatchCheckReport<S> check_spatch(const Patch3<S>& p, const S& tol) {
  SPatchCheckReport<S> rep;
  rep.scale = control_scale(p);
  const S bound = S(tol * rep.scale);
  rep.pass = true;
  for (int i = 0; i < 3; ++i) {
    for (int d = 0; d < 2; ++d) {
      const Poly1<S> poly = diagonal_coeffs(
          p.coord(i), d == 0 ? DiagonalKind::Main : DiagonalKind::Anti);
      DiagonalResidual<S>& r = rep.residuals[i][d];
      r.a6 = poly.coeff(6);
      r.a5 = poly.coeff(5);
      r.a4 = poly.coeff(4);
      if (abs_of(r.a6) > bound || abs_of(r.a5) > bound || abs_of(r.a4) > bound)
        rep.pass = false;
    }
  }
  return rep;
}

// Threshold below which phi counts as zero and alpha/beta are undefined.
template <Scalar S>
S phi_tolerance(const std::array<S, 4>& corners) {
  if constexpr (is_rational_v<S>) {
    return Rational(0);
  } else {
    double scale = 1.0;
    for (const S& c : corners) scale = std::max(scale, std::fabs(c));
    return 1e-12 * scale;
  }
}

// Barycentric twist parameters: x44 = 2 phi alpha, x43 = 2 phi beta.
// Undefined (empty) when phi is zero: the twists are then pinned to zero
// sum directly and the division is singular. Throws if the twist identities
// do not hold, since alpha/beta only mean anything for an S-Patch.
template <Scalar S>
std::optional<std::pair<S, S>> alpha_beta(const GeometryMatrix4<S>& g) {
  std::array<S, 4> corners = {g(0, 0), g(0, 1), g(1, 0), g(1, 1)};
  const S phi = corner_phi(corners);
  S scale = scalar_of<S>(1);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) scale = max_of(scale, abs_of(g(r, c)));
  S eq2_tol;
  if constexpr (is_rational_v<S>)
    eq2_tol = Rational(0);
  else
    eq2_tol = S(1e-9 * scale);
  const S two_phi = S(scalar_of<S>(2) * phi);
  if (abs_of(S(g(2, 2) + g(3, 3) - two_phi)) > eq2_tol ||
      abs_of(S(g(2, 3) + g(3, 2) - two_phi)) > eq2_tol)
    throw NotAnSPatchError(
        "twist identities x33+x44 = 2 phi, x34+x43 = 2 phi do not hold");
  if (!(abs_of(phi) > phi_tolerance(corners))) return std::nullopt;
  return std::make_pair(S(g(3, 3) / two_phi), S(g(3, 2) / two_phi));
}

// ---------------------------------------------------------------------------
// Construction.
// ---------------------------------------------------------------------------

// Geometric construction input: corners and tangents as points/vectors in
// E3, corner order (0,0), (0,1), (1,0), (1,1).
template <Scalar S>
struct PatchBoundary {
  std::array<Vec3T<S>, 4> corners;
  std::array<Vec3T<S>, 4> tangents_u;
  std::array<Vec3T<S>, 4> tangents_v;

  CoordBoundary<S> coord(int i) const {
    CoordBoundary<S> b;
    for (int k = 0; k < 4; ++k) {
      b.corners[k] = corners[k][i];
      b.du[k] = tangents_u[k][i];
      b.dv[k] = tangents_v[k][i];
    }
    return b;
  }
};

enum class ConstructionPolicy { Strict, Project };

template <Scalar S>
struct SPatch {
  Patch3<S> patch;
  // Per coordinate; empty where phi is (numerically) zero.
  std::array<std::optional<S>, 3> alpha, beta;
  SPatchCheckReport<S> report;
};

template <Scalar S>
S spatch_tolerance() {
  if constexpr (is_rational_v<S>)
    return Rational(0);
  else
    return 1e-9;
}

// Build a valid S-Patch from corners and boundary tangents. Twists are
// always derived, never supplied. Strict policy rejects incompatible
// tangents; Project repairs them by the minimum-norm correction first.
// The result is re-checked; a failed check here is an internal bug, not a
// data problem.
template <Scalar S>
SPatch<S> construct_spatch(const PatchBoundary<S>& boundary,
                           ConstructionPolicy policy) {
  std::array<CoordBoundary<S>, 3> coords = {boundary.coord(0),
                                            boundary.coord(1),
                                            boundary.coord(2)};
  if (policy == ConstructionPolicy::Strict) {
    std::array<double, 3> residuals{};
    bool bad = false;
    for (int i = 0; i < 3; ++i) {
      const S r = compatibility_residual(coords[i]);
      residuals[i] = to_double(r);
      if (abs_of(r) > compatibility_tolerance(coords[i])) bad = true;
    }
    if (bad)
      throw IncompatibleTangentsError(
          "strict construction rejected incompatible boundary tangents "
          "(residuals " +
              std::to_string(residuals[0]) + ", " + std::to_string(residuals[1]) +
              ", " + std::to_string(residuals[2]) + ")",
          residuals);
  } else {
    for (auto& c : coords) c = project_tangents(c);
  }

  SPatch<S> out;
  for (int i = 0; i < 3; ++i) {
    const Twists<S> t = solve_twists(coords[i]);
    out.patch.coord(i) = assemble_control_matrix(coords[i], t);
    out.alpha[i] = std::nullopt;
    out.beta[i] = std::nullopt;
    if (auto ab = alpha_beta(out.patch.coord(i))) {
      out.alpha[i] = ab->first;
      out.beta[i] = ab->second;
    }
  }
  out.report = check_spatch(out.patch, spatch_tolerance<S>());
  if (!out.report.pass)
    throw InternalDegreeError(
        "constructed patch failed its own diagonal degree check");
  return out;
}

}  // namespace spatch
