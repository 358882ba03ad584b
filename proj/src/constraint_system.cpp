#include "spatch/constraint_system.hpp"

#include <string>

namespace spatch {

namespace {

// Printed reference tables. Dots in the source typesetting are zeros.
constexpr int kLambda[6][16] = {
    {4, -4, 2, 2, -4, 4, -2, -2, 2, -2, 1, 1, 2, -2, 1, 1},
    {-12, 12, -7, -5, 12, -12, 7, 5, -7, 7, -4, -3, -5, 5, -3, -2},
    {9, -9, 8, 3, -9, 9, -8, -3, 8, -8, 6, 3, 3, -3, 3, 1},
    {-4, 4, -2, -2, 4, -4, 2, 2, -2, 2, -1, -1, -2, 2, -1, -1},
    {12, -12, 5, 7, -12, 12, -5, -7, 7, -7, 3, 4, 5, -5, 2, 3},
    {-9, 9, -3, -8, 9, -9, 3, 8, -8, 8, -3, -6, -3, 3, -1, -3},
};

constexpr int kLambda1[6][4] = {
    {4, -4, -4, 4},    {-12, 12, 12, -12}, {9, -9, -9, 9},
    {-4, 4, 4, -4},    {12, -12, -12, 12}, {-9, 9, 9, -9},
};

constexpr int kLambda2[6][12] = {
    {2, 2, -2, -2, 2, -2, 1, 1, 2, -2, 1, 1},
    {-7, -5, 7, 5, -7, 7, -4, -3, -5, 5, -3, -2},
    {8, 3, -8, -3, 8, -8, 6, 3, 3, -3, 3, 1},
    {-2, -2, 2, 2, -2, 2, -1, -1, -2, 2, -1, -1},
    {5, 7, -5, -7, 7, -7, 3, 4, 5, -5, 2, 3},
    {-3, -8, 3, 8, -8, 8, -3, -6, -3, 3, -1, -3},
};

constexpr int kOmega1[16][16] = {
    {4, -4, 2, 2, -4, 4, -2, -2, 2, -2, 1, 1, 2, -2, 1, 1},
    {-6, 6, -4, -2, 6, -6, 4, 2, -3, 3, -2, -1, -3, 3, -2, -1},
    {0, 0, 2, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0, 0, 1, 0},
    {2, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0},
    {-6, 6, -3, -3, 6, -6, 3, 3, -4, 4, -2, -2, -2, 2, -1, -1},
    {9, -9, 6, 3, -9, 9, -6, -3, 6, -6, 4, 2, 3, -3, 2, 1},
    {0, 0, -3, 0, 0, 0, 3, 0, 0, 0, -2, 0, 0, 0, -1, 0},
    {-3, 0, 0, 0, 3, 0, 0, 0, -2, 0, 0, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 2, -2, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, -3, 3, -2, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {2, -2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {-3, 3, -2, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

constexpr int kOmega2[16][16] = {
    {4, -4, 2, 2, -4, 4, -2, -2, 2, -2, 1, 1, 2, -2, 1, 1},
    {-6, 6, -4, -2, 6, -6, 4, 2, -3, 3, -2, -1, -3, 3, -2, -1},
    {0, 0, 0, -2, 0, 0, 0, -2, 0, 0, 0, -1, 0, 0, 0, -1},
    {0, 2, 0, 0, 0, -2, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0},
    {6, -6, 3, 3, -6, 6, -3, -3, 4, -4, 2, 2, 2, -2, 1, 1},
    {-9, 9, -3, -6, 9, -9, 3, 6, -6, 6, -2, -4, -3, 3, -1, -2},
    {0, 0, -3, 0, 0, 0, 3, 0, 0, 0, -2, 0, 0, 0, -1, 0},
    {0, -3, 0, 0, 0, 3, 0, 0, 0, -2, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, -2, 2, -1, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 3, -3, 1, 2, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {-2, 2, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {3, -3, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

// xi1 = [x11, x12, x21, x22]; xi2 = [x13, x14, x23, x24, x31..x34, x41..x44].
constexpr std::array<int, 4> kXi1Columns = {0, 1, 4, 5};
constexpr std::array<int, 12> kXi2Columns = {2, 3, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};

template <int R, int C>
MatRect<Rational> to_matrix(const int (&data)[R][C]) {
  MatRect<Rational> m(R, C);
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c) m(r, c) = rat(data[r][c]);
  return m;
}

MatRect<Rational> derive_omega(DiagonalKind d) {
  MatRect<Rational> omega(16, 16);
  for (int q = 0; q < 16; ++q) {
    GeometryMatrix4<Rational> basis;
    basis(q / 4, q % 4) = rat(1);
    const Mat4<Rational> r = r_matrix(basis, d);
    for (int p = 0; p < 16; ++p) omega(p, q) = r(p / 4, p % 4);
  }
  return omega;
}

void collect_mismatches(int which, const MatRect<Rational>& derived,
                        const MatRect<Rational>& printed,
                        std::vector<OmegaMismatch>& out) {
  for (int r = 0; r < derived.rows(); ++r)
    for (int c = 0; c < derived.cols(); ++c)
      if (derived(r, c) != printed(r, c))
        out.push_back({which, r, c, printed(r, c), derived(r, c)});
}

}  // namespace

const MatRect<Rational>& printed_lambda() {
  static const MatRect<Rational> m = to_matrix(kLambda);
  return m;
}
const MatRect<Rational>& printed_lambda1() {
  static const MatRect<Rational> m = to_matrix(kLambda1);
  return m;
}
const MatRect<Rational>& printed_lambda2() {
  static const MatRect<Rational> m = to_matrix(kLambda2);
  return m;
}
const MatRect<Rational>& printed_omega(int which) {
  static const MatRect<Rational> m1 = to_matrix(kOmega1);
  static const MatRect<Rational> m2 = to_matrix(kOmega2);
  return which == 1 ? m1 : m2;
}

const std::array<int, 4>& xi1_columns() { return kXi1Columns; }
const std::array<int, 12>& xi2_columns() { return kXi2Columns; }

ConstraintSystem build_constraint_system() {
  ConstraintSystem cs;
  cs.omega1 = derive_omega(DiagonalKind::Main);
  cs.omega2 = derive_omega(DiagonalKind::Anti);

  // a6 = r11, a5 = r12 + r21, a4 = r13 + r22 + r31; rho indices row-major.
  const std::array<std::vector<int>, 3> sums = {
      std::vector<int>{0}, std::vector<int>{1, 4}, std::vector<int>{2, 5, 8}};
  cs.lambda = MatRect<Rational>(6, 16);
  for (int block = 0; block < 2; ++block) {
    const MatRect<Rational>& omega = block == 0 ? cs.omega1 : cs.omega2;
    for (int k = 0; k < 3; ++k)
      for (int c = 0; c < 16; ++c) {
        Rational acc = rat(0);
        for (int p : sums[k]) acc += omega(p, c);
        cs.lambda(block * 3 + k, c) = acc;
      }
  }

  cs.lambda1 = MatRect<Rational>(6, 4);
  cs.lambda2 = MatRect<Rational>(6, 12);
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 4; ++c) cs.lambda1(r, c) = cs.lambda(r, kXi1Columns[c]);
    for (int c = 0; c < 12; ++c) cs.lambda2(r, c) = cs.lambda(r, kXi2Columns[c]);
  }

  cs.rank_lambda = rank(cs.lambda);

  if (!(cs.lambda == printed_lambda()))
    throw DerivationError("derived Lambda disagrees with the printed reference");
  if (!(cs.lambda1 == printed_lambda1()) || !(cs.lambda2 == printed_lambda2()))
    throw DerivationError(
        "derived Lambda1/Lambda2 partition disagrees with the printed "
        "reference");
  if (cs.rank_lambda != 5)
    throw DerivationError("rank(Lambda) = " + std::to_string(cs.rank_lambda) +
                          ", expected 5");

  collect_mismatches(1, cs.omega1, printed_omega(1), cs.omega_mismatches);
  collect_mismatches(2, cs.omega2, printed_omega(2), cs.omega_mismatches);
  return cs;
}

}  // namespace spatch
