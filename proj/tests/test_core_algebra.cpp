#include "support.hpp"

#include "interlace/elimination.hpp"
#include "interlace/error.hpp"
#include "interlace/rational.hpp"

#include "doctest.h"

using namespace interlace;
using interlace::testing::Generator;
using interlace::testing::q;

TEST_CASE("rationals parse strictly and print canonically") {
  CHECK(parse_rational("6/4") == q(3, 2));
  CHECK(parse_rational("-7") == q(-7));
  CHECK(to_string(q(3, 2)) == "3/2");
  CHECK(to_string(q(-4)) == "-4/1");
  CHECK(to_string(q(0)) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(approx_label(q(1, 3)) == "≈0.333333333333");
  CHECK(to_decimal(q(2)) == "2.00000000000");
}

TEST_CASE("sqrt_upper brackets the square root") {
  Rational root;
  CHECK(exact_sqrt(q(9, 4), root));
  CHECK(root == q(3, 2));
  CHECK_FALSE(exact_sqrt(q(2), root));
  const Rational w = default_width();
  const Rational u = sqrt_upper(q(2), w);
  CHECK(u * u >= 2);
  CHECK((u - w) * (u - w) <= 2);
}

TEST_CASE("outer product") {
  CHECK(outer_product(VectorC::real({1, 0})) == HermitianMatrix::real({{1, 0}, {0, 0}}));
  CHECK(outer_product(VectorC::real({0, 0})).is_zero());
  const HermitianMatrix h = outer_product(VectorC::real({q(1, 2), q(1, 2)}));
  CHECK(h == HermitianMatrix::real({{q(1, 4), q(1, 4)}, {q(1, 4), q(1, 4)}}));
  CHECK(h.trace() == q(1, 2));
}

TEST_CASE("outer product of a complex vector is conjugate symmetric") {
  const VectorC v({ComplexRational(q(1), q(2)), ComplexRational(q(3), q(-1))});
  const HermitianMatrix h = outer_product(v);
  CHECK(h(0, 1) == ComplexRational(q(1), q(2)) * conj(ComplexRational(q(3), q(-1))));
  CHECK(h(1, 0) == conj(h(0, 1)));
  CHECK(h.trace() == 15);
}

TEST_CASE("is_psd examples") {
  CHECK(is_psd(HermitianMatrix::real({{1, 0}, {0, 0}})));
  CHECK_FALSE(is_psd(HermitianMatrix::real({{1, 0}, {0, -1}})));
  CHECK(is_psd(HermitianMatrix::real({{q(1, 4), q(1, 4)}, {q(1, 4), q(1, 4)}})));
  // zero diagonal with a nonzero off-diagonal entry
  CHECK_FALSE(is_psd(HermitianMatrix::real({{0, 1}, {1, 0}})));
  CHECK_FALSE(is_psd(HermitianMatrix::real({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})));
  CHECK(is_pd(HermitianMatrix::identity(3)));
  CHECK_FALSE(is_pd(HermitianMatrix::real({{1, 1}, {1, 1}})));
}

TEST_CASE("loewner_leq examples") {
  const HermitianMatrix id = HermitianMatrix::identity(2);
  CHECK(loewner_leq(HermitianMatrix::zero(2), id));
  CHECK(loewner_leq(id, id));
  CHECK_FALSE(loewner_leq(HermitianMatrix::real({{q(1, 2), 0}, {0, q(3, 2)}}), id));
  CHECK_THROWS_AS(loewner_leq(id, HermitianMatrix::identity(3)), Error);
}

TEST_CASE("Hermitian validation") {
  Matrix<ComplexRational> m(2);
  m(0, 1) = ComplexRational(q(1), q(1));
  m(1, 0) = ComplexRational(q(1), q(1));
  CHECK_THROWS_AS(HermitianMatrix::from_matrix(m), Error);
  m(1, 0) = ComplexRational(q(1), q(-1));
  CHECK_NOTHROW(HermitianMatrix::from_matrix(m));
  m(0, 0) = ComplexRational(q(1), q(1));
  CHECK_THROWS_AS(HermitianMatrix::from_matrix(m), Error);
}

TEST_CASE("trace product bound examples") {
  const HermitianMatrix y = HermitianMatrix::real({{2, 1}, {1, 3}});
  CHECK(trace_product_bound_holds(HermitianMatrix::identity(2), y, 1));
  CHECK(trace_product_bound_holds(HermitianMatrix::real({{2, 0}, {0, 0}}), HermitianMatrix::real({{0, 0}, {0, 3}}), 2));
  CHECK(trace_of_product(HermitianMatrix::real({{2, 0}, {0, 0}}), HermitianMatrix::real({{0, 0}, {0, 3}})) == 0);
  CHECK(trace_product_bound_holds(HermitianMatrix::identity(2), HermitianMatrix::identity(2), 1));
  CHECK_THROWS_AS(trace_product_bound_holds(HermitianMatrix::real({{-1}}), HermitianMatrix::real({{1}}), 1), Error);
  CHECK_THROWS_AS(trace_product_bound_holds(HermitianMatrix::real({{1}}), HermitianMatrix::real({{-1}}), 1), Error);
}

TEST_CASE("operator norm examples") {
  const Rational tol = q(1, 1 << 20);
  auto near = [&](const Rational& value, const Rational& target) { return abs(value - target) <= tol; };
  CHECK(near(operator_norm(HermitianMatrix::identity(3), tol), 1));
  CHECK(near(operator_norm(HermitianMatrix::real({{2, 0}, {0, 0}}), tol), 2));
  CHECK(near(operator_norm(HermitianMatrix::real({{1, q(1, 2)}, {q(1, 2), 1}}), tol), q(3, 2)));
}

TEST_CASE("property: outer products are PSD with trace ‖v‖²") {
  Generator g(11);
  for (int trial = 0; trial < 200; ++trial) {
    const VectorC v = g.vector(g.index(1, 4), true);
    const HermitianMatrix h = outer_product(v);
    Rational norm;
    for (const auto& e : v.entries()) norm += e.re * e.re + e.im * e.im;
    CHECK(is_psd(h));
    CHECK(is_rank_at_most_one(h));
    CHECK(h.trace() == norm);
  }
}

TEST_CASE("property: loewner order is a partial order") {
  Generator g(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = g.index(1, 4);
    const HermitianMatrix a = g.hermitian(d, true);
    const HermitianMatrix b = a + g.psd(d, true);
    const HermitianMatrix c = b + g.psd(d, true);
    CHECK(loewner_leq(a, a));
    CHECK(loewner_leq(a, b));
    CHECK(loewner_leq(b, c));
    CHECK(loewner_leq(a, c));
    if (loewner_leq(b, a)) CHECK(a == b);
    const HermitianMatrix other = g.hermitian(d, true);
    if (loewner_leq(a, other) && loewner_leq(other, a)) CHECK(a == other);
  }
}

namespace {

// Independent PSD oracle: a Hermitian matrix is PSD iff the coefficients of
// det(xI - M) alternate in sign (weakly), i.e. every e_k(λ) >= 0.
bool psd_by_char_poly(const HermitianMatrix& m) {
  const UniPoly p = char_poly(m);
  const int d = static_cast<int>(m.dim());
  for (int k = 0; k <= d; ++k) {
    const Rational c = p.coeff(static_cast<std::size_t>(k));
    const int expected = (d - k) % 2 == 0 ? 1 : -1;
    if (sgn(c) != 0 && sgn(c) != expected) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("property: is_psd agrees with the characteristic polynomial sign oracle") {
  Generator g(13);
  int psd_count = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = g.index(2, 3);
    HermitianMatrix m = g.coin() ? g.psd(d, true) : g.hermitian(d, true);
    if (g.index(0, 3) == 0) m = m + HermitianMatrix::identity(d);
    const bool psd = is_psd(m);
    psd_count += psd;
    CHECK(psd == psd_by_char_poly(m));
  }
  CHECK(psd_count > 50);
}

TEST_CASE("property: Tr(XY) <= λmax(X) Tr(Y) for random PSD pairs") {
  Generator g(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = g.index(1, 4);
    const HermitianMatrix x = g.psd(d, true);
    const HermitianMatrix y = g.psd(d, true);
    const Rational upper = x.is_zero() ? Rational(0) : largest_root(char_poly(x), q(1, 1 << 20)).hi;
    CHECK(trace_product_bound_holds(x, y, upper));
  }
}

TEST_CASE("elimination: solve and determinant over the Gaussian rationals") {
  Generator g(15);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = g.index(1, 4);
    const HermitianMatrix a = g.psd(d, true) + HermitianMatrix::identity(d);
    const HermitianMatrix b = g.hermitian(d, true);
    const auto x = solve<Rational>(a.entries(), b.entries());
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        ComplexRational acc;
        for (std::size_t k = 0; k < d; ++k) acc += a(r, k) * x(k, c);
        CHECK(acc == b(r, c));
      }
    }
    const ComplexRational det = determinant<Rational>(a.entries());
    CHECK(det.im == 0);
    CHECK(det.re == char_poly(a).evaluate(0) * (d % 2 == 0 ? 1 : -1));
  }
}
