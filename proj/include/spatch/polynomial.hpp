#pragma once

#include <initializer_list>
#include <vector>

#include "spatch/numeric.hpp"

namespace spatch {

// Dense univariate polynomial, coefficients in ascending degree order
// (coeff(k) multiplies u^k). Trailing zeros may be stored; degree() ignores
// them. The zero polynomial reports kZeroDegree (stand-in for -infinity).
template <Scalar S>
class Poly1 {
 public:
  static constexpr int kZeroDegree = -1;

  Poly1() = default;
  explicit Poly1(std::vector<S> coeffs) : c_(std::move(coeffs)) {}
  Poly1(std::initializer_list<S> coeffs) : c_(coeffs) {}

  static Poly1 constant(const S& v) { return Poly1({v}); }
  // The monomial u.
  static Poly1 variable() { return Poly1({scalar_of<S>(0), scalar_of<S>(1)}); }

  int degree() const {
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
      if (!is_zero(c_[k])) return k;
    return kZeroDegree;
  }

  // Zero beyond stored length.
  S coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return scalar_of<S>(0);
    return c_[k];
  }

  const std::vector<S>& coeffs() const { return c_; }

  S eval(const S& x) const {
    S acc = scalar_of<S>(0);
    for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
      acc = S(acc * x + c_[k]);
    return acc;
  }

  friend Poly1 operator+(const Poly1& p, const Poly1& q) {
    std::vector<S> out(std::max(p.c_.size(), q.c_.size()), scalar_of<S>(0));
    for (size_t k = 0; k < out.size(); ++k)
      out[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
    return Poly1(std::move(out));
  }

  friend Poly1 operator-(const Poly1& p, const Poly1& q) {
    std::vector<S> out(std::max(p.c_.size(), q.c_.size()), scalar_of<S>(0));
    for (size_t k = 0; k < out.size(); ++k)
      out[k] = p.coeff(static_cast<int>(k)) - q.coeff(static_cast<int>(k));
    return Poly1(std::move(out));
  }

  friend Poly1 operator*(const Poly1& p, const Poly1& q) {
    if (p.degree() == kZeroDegree || q.degree() == kZeroDegree) return Poly1();
    std::vector<S> out(p.c_.size() + q.c_.size() - 1, scalar_of<S>(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
      for (size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return Poly1(std::move(out));
  }

  friend Poly1 operator*(const S& s, const Poly1& p) {
    std::vector<S> out(p.c_.size(), scalar_of<S>(0));
    for (size_t k = 0; k < p.c_.size(); ++k) out[k] = S(s * p.c_[k]);
    return Poly1(std::move(out));
  }

  // Mathematical equality: trailing zeros are irrelevant.
  friend bool operator==(const Poly1& p, const Poly1& q) {
    const int d = std::max(p.degree(), q.degree());
    for (int k = 0; k <= d; ++k)
      if (p.coeff(k) != q.coeff(k)) return false;
    return true;
  }

 private:
  std::vector<S> c_;
};

// p(q(u)) by Horner over polynomials.
template <Scalar S>
Poly1<S> compose(const Poly1<S>& p, const Poly1<S>& q) {
  if (p.degree() == Poly1<S>::kZeroDegree) return Poly1<S>();
  Poly1<S> acc;
  for (int k = p.degree(); k >= 0; --k)
    acc = acc * q + Poly1<S>::constant(p.coeff(k));
  return acc;
}

}  // namespace spatch
