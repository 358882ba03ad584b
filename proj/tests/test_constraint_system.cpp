#include <doctest.h>

#include <set>

#include "spatch/constraint_system.hpp"

using namespace spatch;

TEST_SUITE("constraint_system") {

TEST_CASE("lambda matches the printed reference") {
  const ConstraintSystem cs = build_constraint_system();

  const std::array<long, 16> row1 = {4, -4, 2,  2,  -4, 4,  -2, -2,
                                     2, -2, 1,  1,  2,  -2, 1,  1};
  for (int c = 0; c < 16; ++c) CHECK(cs.lambda(0, c) == Rational(row1[c]));
  CHECK(cs.lambda(1, 0) == Rational(-12));

  const std::array<long, 4> lambda1_row2 = {-12, 12, 12, -12};
  for (int c = 0; c < 4; ++c) CHECK(cs.lambda1(1, c) == Rational(lambda1_row2[c]));

  CHECK(cs.lambda == printed_lambda());
  CHECK(cs.lambda1 == printed_lambda1());
  CHECK(cs.lambda2 == printed_lambda2());
}

TEST_CASE("rank facts") {
  const ConstraintSystem cs = build_constraint_system();
  CHECK(cs.rank_lambda == 5);
  CHECK(rank(cs.lambda) == 5);

  // The tangent/twist block alone carries the same rank: fixing corners
  // leaves a 12 - 5 = 7 dimensional solution space.
  CHECK(rank(cs.lambda2) == 5);

  // The four twist columns are independent: twists are uniquely determined
  // by corners and tangents.
  MatRect<Rational> twist_cols(6, 4);
  const std::array<int, 4> cols = {10, 11, 14, 15};  // x33 x34 x43 x44
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 4; ++c) twist_cols(r, c) = cs.lambda(r, cols[c]);
  CHECK(rank(twist_cols) == 4);
}

TEST_CASE("lambda rows are the documented omega row sums") {
  const ConstraintSystem cs = build_constraint_system();
  const std::array<std::vector<int>, 3> sums = {
      std::vector<int>{0}, std::vector<int>{1, 4}, std::vector<int>{2, 5, 8}};
  for (int block = 0; block < 2; ++block) {
    const MatRect<Rational>& omega = block == 0 ? cs.omega1 : cs.omega2;
    for (int k = 0; k < 3; ++k)
      for (int c = 0; c < 16; ++c) {
        Rational acc = rat(0);
        for (int p : sums[k]) acc += omega(p, c);
        CHECK(cs.lambda(block * 3 + k, c) == acc);
      }
  }
}

TEST_CASE("partition columns reconstruct lambda") {
  const ConstraintSystem cs = build_constraint_system();
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 4; ++c)
      CHECK(cs.lambda1(r, c) == cs.lambda(r, xi1_columns()[c]));
    for (int c = 0; c < 12; ++c)
      CHECK(cs.lambda2(r, c) == cs.lambda(r, xi2_columns()[c]));
  }
}

TEST_CASE("omega1 print is exact; omega2 print defects are known") {
  const ConstraintSystem cs = build_constraint_system();
  CHECK(cs.omega1 == printed_omega(1));

  int omega1_mismatches = 0;
  std::set<int> omega2_rows;
  for (const OmegaMismatch& m : cs.omega_mismatches) {
    if (m.omega == 1)
      ++omega1_mismatches;
    else
      omega2_rows.insert(m.row);
  }
  CHECK(omega1_mismatches == 0);
  CHECK(cs.omega_mismatches.size() == 43);
  // Typeset defects sit in the printed rows for r11, r12, r13, r23, r33
  // (0-based rows 0, 1, 2, 6, 10) of the anti-diagonal table.
  CHECK(omega2_rows == std::set<int>({0, 1, 2, 6, 10}));
}

}  // TEST_SUITE
