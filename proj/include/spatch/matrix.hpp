#pragma once

#include <array>
#include <initializer_list>
#include <utility>
#include <vector>

#include "spatch/errors.hpp"
#include "spatch/numeric.hpp"

namespace spatch {

template <Scalar S>
using Vec4 = std::array<S, 4>;

// Dense 4x4 matrix. Indices are 0-based in code; the surrounding math is
// written 1-based, so entry x_ij of a control matrix lives at (i-1, j-1).
template <Scalar S>
class Mat4 {
 public:
  Mat4() = default;

  static Mat4 from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    Mat4 m;
    int r = 0;
    for (const auto& row : rows) {
      int c = 0;
      for (long v : row) m(r, c++) = scalar_of<S>(v);
      ++r;
    }
    return m;
  }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = scalar_of<S>(1);
    return m;
  }

  S& operator()(int r, int c) { return e_[r * 4 + c]; }
  const S& operator()(int r, int c) const { return e_[r * 4 + c]; }

  Mat4 transposed() const {
    Mat4 t;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 out;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        S acc = scalar_of<S>(0);
        for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
        out(r, c) = acc;
      }
    return out;
  }

  friend Vec4<S> operator*(const Mat4& a, const Vec4<S>& v) {
    Vec4<S> out{};
    for (int r = 0; r < 4; ++r) {
      S acc = scalar_of<S>(0);
      for (int k = 0; k < 4; ++k) acc += a(r, k) * v[k];
      out[r] = acc;
    }
    return out;
  }

  friend bool operator==(const Mat4& a, const Mat4& b) { return a.e_ == b.e_; }

 private:
  std::array<S, 16> e_{};
};

// w1^T M w2
template <Scalar S>
S quad_form(const Vec4<S>& w1, const Mat4<S>& m, const Vec4<S>& w2) {
  S acc = scalar_of<S>(0);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) acc += w1[r] * m(r, c) * w2[c];
  return acc;
}

// Dense row-major rectangular matrix for the constraint machinery
// (16x16 coefficient maps, the 6x16 constraint matrix and its partitions).
template <Scalar S>
class MatRect {
 public:
  MatRect() = default;
  MatRect(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  explicit MatRect(const Mat4<S>& m) : MatRect(4, 4) {
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) (*this)(r, c) = m(r, c);
  }

  static MatRect from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    MatRect m(static_cast<int>(rows.size()),
              rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
    int r = 0;
    for (const auto& row : rows) {
      int c = 0;
      for (long v : row) m(r, c++) = scalar_of<S>(v);
      ++r;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const {
    return e_[static_cast<size_t>(r) * cols_ + c];
  }

  friend MatRect operator*(const MatRect& a, const MatRect& b) {
    if (a.cols_ != b.rows_)
      throw ShapeError("matrix product dimension mismatch: " +
                       std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                       " * " + std::to_string(b.rows_) + "x" +
                       std::to_string(b.cols_));
    MatRect out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
      for (int c = 0; c < b.cols_; ++c) {
        S acc = scalar_of<S>(0);
        for (int k = 0; k < a.cols_; ++k) acc += a(r, k) * b(k, c);
        out(r, c) = acc;
      }
    return out;
  }

  friend bool operator==(const MatRect& a, const MatRect& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> e_;
};

// Exact rank via fraction-free (Bareiss) elimination. Divisions are exact at
// every step, so no intermediate growth beyond the determinantal bound.
// Only defined in rational mode: a tolerance-based float rank could not
// certify anything.
template <Scalar S>
  requires is_rational_v<S>
int rank(MatRect<S> m) {
  const int rows = m.rows();
  const int cols = m.cols();
  int r = 0;
  S prev = scalar_of<S>(1);
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(m(pivot, j), m(r, j));
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m(i, j) = S(m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = scalar_of<S>(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

}  // namespace spatch
