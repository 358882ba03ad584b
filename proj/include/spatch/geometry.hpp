#pragma once

#include <cmath>

#include "spatch/numeric.hpp"

namespace spatch {

template <Scalar S>
struct Vec3T {
  S x{}, y{}, z{};

  friend Vec3T operator+(const Vec3T& a, const Vec3T& b) {
    return {S(a.x + b.x), S(a.y + b.y), S(a.z + b.z)};
  }
  friend Vec3T operator-(const Vec3T& a, const Vec3T& b) {
    return {S(a.x - b.x), S(a.y - b.y), S(a.z - b.z)};
  }
  friend Vec3T operator*(const S& s, const Vec3T& v) {
    return {S(s * v.x), S(s * v.y), S(s * v.z)};
  }
  friend bool operator==(const Vec3T& a, const Vec3T& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }

  // Coordinate access by index 0..2, for code that loops over x, y, z.
  S& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const S& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

using Vec3 = Vec3T<double>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

}  // namespace spatch
