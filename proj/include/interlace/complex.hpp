#pragma once

#include "interlace/rational.hpp"

#include <string>

namespace interlace {

/// a + b·i over an exact ordered field F (Rational or QuadraticFieldElement).
template <class F>
struct Complex {
  F re{};
  F im{};

  Complex() = default;
  Complex(F real) : re(std::move(real)), im() {}  // NOLINT: implicit lift from the base field
  Complex(F real, F imag) : re(std::move(real)), im(std::move(imag)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Complex conj() const { return {re, F(-im)}; }
  /// |z|^2 = re^2 + im^2, stays in F.
  F norm2() const { return F(re * re + im * im); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    F r = re * o.re - im * o.im;
    F i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    F n = o.norm2();
    F r = (re * o.re + im * o.im) / n;
    F i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return {F(-a.re), F(-a.im)}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }
};

using ComplexRational = Complex<Rational>;

inline ComplexRational conj(const ComplexRational& z) { return z.conj(); }

/// "re" when real, otherwise "re+im*i"; used in diagnostics only.
inline std::string to_string(const ComplexRational& z) {
  if (z.is_real()) return to_string(z.re);
  return to_string(z.re) + (sgn(z.im) < 0 ? "" : "+") + to_string(z.im) + "*i";
}

}  // namespace interlace
