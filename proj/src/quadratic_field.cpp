#include "interlace/quadratic_field.hpp"

#include "interlace/error.hpp"

namespace interlace {

QuadraticFieldElement::QuadraticFieldElement(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), r_(std::move(radicand)) {
  if (sgn(r_) < 0) fail(ErrorCode::InvalidArgument, "quadratic field radicand must be nonnegative");
  normalize();
}

QuadraticFieldElement QuadraticFieldElement::sqrt(const Rational& radicand) {
  return {Rational(0), Rational(1), radicand};
}

void QuadraticFieldElement::normalize() {
  if (b_ == 0) {
    r_ = 0;
    return;
  }
  Rational root;
  if (exact_sqrt(r_, root)) {
    a_ += b_ * root;
    b_ = 0;
    r_ = 0;
  }
}

void QuadraticFieldElement::unify(const QuadraticFieldElement& o) {
  if (o.b_ == 0) return;
  if (b_ == 0) {
    r_ = o.r_;
    return;
  }
  if (r_ != o.r_)
    fail(ErrorCode::InternalInvariant, "quadratic field elements over different radicands " + to_string(r_) + " and " +
                                           to_string(o.r_));
}

int QuadraticFieldElement::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a² with b²·r.
  const int c = cmp(Rational(a_ * a_), Rational(b_ * b_ * r_));
  return c > 0 ? sa : c < 0 ? sb : 0;
}

QuadraticFieldElement& QuadraticFieldElement::operator+=(const QuadraticFieldElement& o) {
  unify(o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_ == 0) r_ = 0;
  return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator-=(const QuadraticFieldElement& o) {
  unify(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_ == 0) r_ = 0;
  return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator*=(const QuadraticFieldElement& o) {
  unify(o);
  const Rational r = b_ == 0 ? o.r_ : r_;
  Rational na = a_ * o.a_ + b_ * o.b_ * r;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  r_ = b_ == 0 ? Rational(0) : r;
  return *this;
}

QuadraticFieldElement& QuadraticFieldElement::operator/=(const QuadraticFieldElement& o) {
  const Rational n = o.norm();
  if (n == 0) fail(ErrorCode::InvalidArgument, "division by zero in the quadratic field");
  // x / y = x·conj(y) / N(y).
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

Rational QuadraticFieldElement::upper_approx(const Rational& width) const {
  if (b_ == 0) return a_;
  // b·√r bounded from above with error width / 2, then tightened to width.
  const Rational half = width / 2;
  const Rational abs_b = abs(b_);
  const Rational root_width = half / abs_b;
  Rational root_hi = sqrt_upper(r_, root_width);
  if (sgn(b_) > 0) return a_ + b_ * root_hi;
  // b < 0: need a lower bound on √r.
  Rational root_lo = root_hi - root_width;
  if (sgn(root_lo) < 0) root_lo = 0;
  return a_ + b_ * root_lo;
}

Rational QuadraticFieldElement::lower_approx(const Rational& width) const {
  return -(-*this).upper_approx(width);
}

std::string to_string(const QuadraticFieldElement& x) {
  if (x.is_rational()) return to_string(x.a());
  return to_string(x.a()) + " + " + to_string(x.b()) + "*sqrt(" + to_string(x.radicand()) + ")";
}

}  // namespace interlace
