#pragma once

#include "interlace/rational.hpp"

#include <compare>
#include <string>

namespace interlace {

/// a + b·√radicand with rational a, b and radicand >= 0. A radicand that is a
/// rational square is folded into `a`, so a nonzero element always has a
/// nonzero norm a² - b²·radicand and Q(√radicand) behaves as a field.
/// Mixing two elements with different irrational radicands is a logic error.
class QuadraticFieldElement {
 public:
  QuadraticFieldElement() = default;
  QuadraticFieldElement(long value) : a_(value) {}  // NOLINT: integer literals lift into the field
  QuadraticFieldElement(Rational a) : a_(std::move(a)) {}  // NOLINT: rationals lift into the field
  QuadraticFieldElement(Rational a, Rational b, Rational radicand);

  /// √radicand itself.
  static QuadraticFieldElement sqrt(const Rational& radicand);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& radicand() const { return r_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  QuadraticFieldElement conjugate() const { return {a_, Rational(-b_), r_}; }
  /// a² - b²·radicand.
  Rational norm() const { return a_ * a_ - b_ * b_ * r_; }

  /// Rational u with value <= u <= value + width.
  Rational upper_approx(const Rational& width) const;
  /// Rational l with value - width <= l <= value.
  Rational lower_approx(const Rational& width) const;

  QuadraticFieldElement& operator+=(const QuadraticFieldElement& o);
  QuadraticFieldElement& operator-=(const QuadraticFieldElement& o);
  QuadraticFieldElement& operator*=(const QuadraticFieldElement& o);
  QuadraticFieldElement& operator/=(const QuadraticFieldElement& o);
  friend QuadraticFieldElement operator+(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x += y; }
  friend QuadraticFieldElement operator-(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x -= y; }
  friend QuadraticFieldElement operator*(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x *= y; }
  friend QuadraticFieldElement operator/(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x /= y; }
  friend QuadraticFieldElement operator-(const QuadraticFieldElement& x) { return {Rational(-x.a_), Rational(-x.b_), x.r_}; }

  friend bool operator==(const QuadraticFieldElement& x, const QuadraticFieldElement& y) {
    return (x - y).sign() == 0;
  }
  friend std::strong_ordering operator<=>(const QuadraticFieldElement& x, const QuadraticFieldElement& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  void normalize();
  void unify(const QuadraticFieldElement& o);

  Rational a_;
  Rational b_;
  Rational r_;
};

inline int sgn(const QuadraticFieldElement& x) { return x.sign(); }

/// "a + b*sqrt(r)" in canonical rational strings.
std::string to_string(const QuadraticFieldElement& x);

}  // namespace interlace
