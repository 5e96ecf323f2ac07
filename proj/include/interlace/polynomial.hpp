#pragma once

#include "interlace/complex.hpp"
#include "interlace/error.hpp"
#include "interlace/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace interlace {

/// Dense univariate polynomial; coeffs()[k] is the coefficient of x^k.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
template <class S>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(S value) { return Polynomial(std::vector<S>{std::move(value)}); }
  static Polynomial monomial(S value, std::size_t power) {
    std::vector<S> c(power + 1);
    c[power] = std::move(value);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(std::size_t k) const { return k < c_.size() ? c_[k] : S(); }
  const S& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == S(1); }

  S evaluate(const S& x) const {
    S acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<S> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
      d[k - 1] = c_[k];
      d[k - 1] *= S(static_cast<long>(k));
    }
    return Polynomial(std::move(d));
  }

  /// this += factor * x^shift * p.
  void add_scaled(const Polynomial& p, const S& factor, std::size_t shift = 0) {
    if (p.c_.empty()) return;
    if (c_.size() < p.c_.size() + shift) c_.resize(p.c_.size() + shift);
    for (std::size_t k = 0; k < p.c_.size(); ++k) c_[k + shift] += p.c_[k] * factor;
    trim();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const S& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const S& s) { return a *= s; }
  friend Polynomial operator*(const S& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= S(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<S> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == S()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == S()) c_.pop_back();
  }
  std::vector<S> c_;
};

using UniPoly = Polynomial<Rational>;
using ComplexPoly = Polynomial<ComplexRational>;

/// Quotient and remainder over Q; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly make_monic(const UniPoly& p);
/// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);
/// (x - root)^power, expanded.
UniPoly linear_power(const Rational& root, unsigned power);

/// Real part of a complex-coefficient polynomial; throws InternalInvariant if
/// any imaginary part is nonzero.
UniPoly real_part_checked(const ComplexPoly& p, const char* context);

/// Readable form such as "x^2 - 2*x + 1/2" for diagnostics and reports.
std::string to_string(const UniPoly& p);
/// Coefficients in ascending order as canonical rational strings.
std::vector<std::string> coefficient_strings(const UniPoly& p);

}  // namespace interlace
