#include "interlace/polynomial.hpp"

#include <sstream>

namespace interlace {

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational& lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[static_cast<std::size_t>(k)] / lead;
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly make_monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  const Rational inv = 1 / p.leading();
  return p * inv;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return make_monic(p);
  const UniPoly g = gcd(p, p.derivative());
  return make_monic(divmod(p, g).first);
}

UniPoly linear_power(const Rational& root, unsigned power) {
  UniPoly out = UniPoly::constant(Rational(1));
  const UniPoly factor{Rational(-root), Rational(1)};
  for (unsigned k = 0; k < power; ++k) out = out * factor;
  return out;
}

UniPoly real_part_checked(const ComplexPoly& p, const char* context) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (!c.is_real())
      fail(ErrorCode::InternalInvariant, std::string(context) + ": expected a real polynomial, found imaginary part");
    out.push_back(c.re);
  }
  return UniPoly(std::move(out));
}

namespace {

std::string plain(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

}  // namespace

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) out << plain(mag);
    if (k > 0) {
      if (!unit) out << "*";
      out << "x";
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::vector<std::string> coefficient_strings(const UniPoly& p) {
  std::vector<std::string> out;
  if (p.is_zero()) {
    out.push_back(to_string(Rational(0)));
    return out;
  }
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

}  // namespace interlace
