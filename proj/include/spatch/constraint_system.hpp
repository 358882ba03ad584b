#pragma once

#include <vector>

#include "spatch/matrix.hpp"
#include "spatch/spatch.hpp"

namespace spatch {

// The degree-3 restriction on both diagonals, as linear algebra over the 16
// control values xi = [x11, x12, x13, x14, x21, ..., x44] (row-major).
//
// For each diagonal, rho = Omega xi maps control values to the 16 entries of
// the tensor coefficient matrix R (rho row-major over r11..r44). The six
// vanishing high coefficients a6, a5, a4 of both diagonals give
// Lambda xi = 0 with
//   Lambda row 1..3 = Omega1 rows {r11}, {r12 + r21}, {r13 + r22 + r31}
//   Lambda row 4..6 = the same sums over Omega2.
// Lambda has rank 5. Fixing the corner block xi1 = [x11, x12, x21, x22]
// partitions the columns into Lambda1 (6x4) and Lambda2 (6x12) over
// xi2 = [x13, x14, x23, x24, x31, x32, x33, x34, x41, x42, x43, x44].

// One deviation of the embedded printed reference tables from the
// programmatic derivation. The derivation is authoritative; mismatches in
// the Omega tables are typesetting defects of the reference and are
// reported, not fatal.
struct OmegaMismatch {
  int omega;  // 1 or 2
  int row, col;  // 0-based
  Rational printed, derived;
};

struct ConstraintSystem {
  MatRect<Rational> omega1, omega2;   // 16x16
  MatRect<Rational> lambda;           // 6x16
  MatRect<Rational> lambda1;          // 6x4, corner columns
  MatRect<Rational> lambda2;          // 6x12, tangent/twist columns
  int rank_lambda = 0;
  std::vector<OmegaMismatch> omega_mismatches;
};

// Derives Omega1/Omega2 by pushing the 16 basis control matrices through
// r_matrix, assembles Lambda and its partition, and computes the exact
// rank. Throws DerivationError if the rank is not 5 or the derived Lambda,
// Lambda1, Lambda2 disagree with the embedded printed references anywhere.
ConstraintSystem build_constraint_system();

// Embedded printed reference tables.
const MatRect<Rational>& printed_lambda();
const MatRect<Rational>& printed_lambda1();
const MatRect<Rational>& printed_lambda2();
const MatRect<Rational>& printed_omega(int which);  // 1 or 2

// Column indices (0-based, into xi) of the corner block and of the
// tangent/twist block in its canonical order.
const std::array<int, 4>& xi1_columns();
const std::array<int, 12>& xi2_columns();

}  // namespace spatch
