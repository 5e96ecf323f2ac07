#include "support.hpp"

#include "interlace/barrier.hpp"
#include "interlace/elimination.hpp"
#include "interlace/error.hpp"
#include "interlace/multilinear.hpp"

#include "doctest.h"

using namespace interlace;
using interlace::testing::Generator;
using interlace::testing::q;

namespace {

std::vector<HermitianMatrix> identity_decomposition(std::size_t d) {
  std::vector<HermitianMatrix> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(outer_product(VectorC::basis(d, i)));
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInvariant;
}

// P(x, z) = det(xI + Σ z_i A_i) by elimination.
Rational det_at(std::span<const HermitianMatrix> a, std::size_t d, const Rational& x, const std::vector<Rational>& z) {
  HermitianMatrix m = x * HermitianMatrix::identity(d);
  for (std::size_t i = 0; i < a.size(); ++i) m += z[i] * a[i];
  const ComplexRational det = determinant<Rational>(m.entries());
  REQUIRE(det.im == 0);
  return det.re;
}

}  // namespace

TEST_CASE("barrier_value examples") {
  const std::vector<HermitianMatrix> one{HermitianMatrix::real({{1}})};
  CHECK(barrier_value(one, {4, {0}}, 0) == q(1, 4));
  const std::vector<HermitianMatrix> half{q(1, 2) * HermitianMatrix::identity(2)};
  CHECK(barrier_value(half, {4, {0}}, 0) == q(1, 4));
  const std::vector<HermitianMatrix> zero{HermitianMatrix::zero(2), HermitianMatrix::identity(2)};
  CHECK(barrier_value(zero, {3, {5, 1}}, 0) == 0);
  CHECK(code_of([&] { barrier_value(one, {1, {-1}}, 0); }) == ErrorCode::NotAboveRoots);
  CHECK(code_of([&] { barrier_value(one, {4, {0}}, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("is_above_roots_det examples") {
  const auto id = identity_decomposition(3);
  CHECK(is_above_roots_det(id, {2, {-1, -1, -1}}));
  Generator g(50);
  std::vector<HermitianMatrix> any{g.psd(3, true), g.psd(3, true)};
  CHECK(is_above_roots_det(any, {1, {0, 0}}));
  const std::vector<HermitianMatrix> one{HermitianMatrix::real({{1}})};
  CHECK_FALSE(is_above_roots_det(one, {1, {-1}}));
}

TEST_CASE("certify_theorem2 examples") {
  for (std::size_t d = 1; d <= 4; ++d) {
    const BarrierCertificate c = certify_theorem2(identity_decomposition(d), 1);
    CHECK(c.certified);
    CHECK(c.x_threshold == QuadraticFieldElement(4));
    CHECK(c.mu == linear_power(1, d));
    CHECK(c.root_below_threshold);
  }
  const HermitianMatrix half = q(1, 2) * HermitianMatrix::identity(2);
  const std::vector<HermitianMatrix> halves{half, half};
  const BarrierCertificate c = certify_theorem2(halves, 1);
  CHECK(c.certified);
  CHECK(c.mu == UniPoly({q(1, 2), -2, 1}));
  CHECK(c.mu_root.hi <= c.threshold_upper + default_width());
  CHECK(c.delta == QuadraticFieldElement(2));
  CHECK(c.phi_upper == QuadraticFieldElement(q(1, 2)));
  CHECK(c.t_shift == QuadraticFieldElement(-2));
  for (const auto& phi : c.phi_values) CHECK(phi <= c.phi_upper);

  const std::vector<HermitianMatrix> heavy{HermitianMatrix::real({{1, 0}, {0, 1}})};
  CHECK(code_of([&] { certify_theorem2(heavy, 1); }) == ErrorCode::HypothesisViolated);
  try {
    certify_theorem2(heavy, 1);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("Tr") != std::string::npos);
  }
}

TEST_CASE("certify_theorem2 in an irrational field") {
  const std::vector<HermitianMatrix> a{HermitianMatrix::real({{q(1, 2), 0}, {0, 0}}),
                                       HermitianMatrix::real({{0, 0}, {0, q(1, 2)}})};
  const BarrierCertificate c = certify_theorem2(a, q(1, 2));
  CHECK(c.certified);
  CHECK(c.x_threshold == QuadraticFieldElement(q(3, 2), 2, q(1, 2)));
  CHECK(c.delta == QuadraticFieldElement(1, 1, q(1, 2)));
  CHECK(c.t_shift == -c.delta);
  CHECK(1 / (1 - c.phi_upper) == c.delta);
}

TEST_CASE("certify_theorem2 hypothesis failures") {
  const std::vector<HermitianMatrix> big{HermitianMatrix::real({{2}})};
  CHECK(code_of([&] { certify_theorem2(big, 2); }) == ErrorCode::HypothesisViolated);
  const std::vector<HermitianMatrix> indefinite{HermitianMatrix::real({{q(1, 2), 0}, {0, -q(1, 4)}})};
  CHECK(code_of([&] { certify_theorem2(indefinite, 1); }) == ErrorCode::HypothesisViolated);
  const std::vector<HermitianMatrix> fine{HermitianMatrix::real({{q(1, 2)}})};
  CHECK(code_of([&] { certify_theorem2(fine, -1); }) == ErrorCode::HypothesisViolated);
  CHECK(certify_theorem2(fine, 1).certified);
}

TEST_CASE("certify_theorem2 with eps = 0") {
  const std::vector<HermitianMatrix> zeros{HermitianMatrix::zero(2), HermitianMatrix::zero(2)};
  const BarrierCertificate c = certify_theorem2(zeros, 0);
  CHECK(c.certified);
  CHECK(c.mu == UniPoly::monomial(1, 2));
}

TEST_CASE("check_barrier_shift examples") {
  const std::vector<HermitianMatrix> one{HermitianMatrix::real({{1}})};
  const BarrierShift s = barrier_shift(one, {4, {0}}, 0, 0, 2);
  CHECK(s.phi_before == q(1, 4));
  CHECK(s.phi_after == q(1, 5));
  CHECK(s.holds);

  const std::vector<HermitianMatrix> inert{HermitianMatrix::real({{1, 0}, {0, 0}}), HermitianMatrix::zero(2)};
  const BarrierShift t = barrier_shift(inert, {4, {0, 0}}, 0, 1, 2);
  CHECK(t.phi_after == t.phi_before);
  CHECK(t.holds);

  const auto id = identity_decomposition(3);
  CHECK(check_barrier_shift(id, {4, {0, 0, 0}}, 0, 1, 2));
  CHECK(check_barrier_shift(id, {4, {0, 0, 0}}, 2, 2, 2));

  CHECK(code_of([&] { barrier_shift(one, {4, {0}}, 0, 0, 1); }) == ErrorCode::PreconditionFail);
  CHECK(code_of([&] { barrier_shift(one, {1, {-1}}, 0, 0, 2); }) == ErrorCode::NotAboveRoots);
}

TEST_CASE("roots_above at a quadratic irrational") {
  const UniPoly p({q(1, 2), -2, 1});  // roots 1 ± √(1/2)
  CHECK(roots_above(p, QuadraticFieldElement(1, 1, q(1, 2))) == 0);
  CHECK(roots_above(p, QuadraticFieldElement(1, -1, q(1, 2))) == 1);
  CHECK(roots_above(p, QuadraticFieldElement(0, 2, q(1, 2))) == 1);
  CHECK(roots_above(p, 0) == 2);
}

TEST_CASE("property: barrier value matches a central difference of log det") {
  Generator g(51);
  const Rational h = pow2(-20);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = g.index(1, 4);
    const std::size_t m = g.index(1, 4);
    std::vector<HermitianMatrix> a;
    for (std::size_t k = 0; k < m; ++k) a.push_back(g.psd(d, true));
    std::vector<Rational> z(m);
    for (auto& v : z) v = g.rational();
    Rational x = g.positive_rational();
    while (!is_above_roots_det(a, {x, z})) x *= 2;
    const std::size_t i = g.index(0, m - 1);
    const Rational exact = barrier_value(a, {x, z}, i);
    auto plus = z;
    auto minus = z;
    plus[i] += h;
    minus[i] -= h;
    const Rational numeric = (det_at(a, d, x, plus) - det_at(a, d, x, minus)) / (2 * h * det_at(a, d, x, z));
    CHECK(abs(numeric - exact) <= pow2(-10) * abs(exact) + pow2(-30));
  }
}

TEST_CASE("property: barrier values decrease along increasing rays") {
  Generator g(52);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = g.index(1, 4);
    const std::size_t m = g.index(1, 4);
    std::vector<HermitianMatrix> a;
    for (std::size_t k = 0; k < m; ++k) a.push_back(g.psd(d, true));
    EvaluationPoint p{g.positive_rational(), std::vector<Rational>(m)};
    for (auto& v : p.z) v = g.rational();
    while (!is_above_roots_det(a, p)) p.x *= 2;
    const std::size_t i = g.index(0, m - 1);
    Rational previous = barrier_value(a, p, i);
    for (int step = 0; step < 4; ++step) {
      p.x += g.coin() ? g.positive_rational() : Rational(0);
      for (auto& v : p.z)
        if (g.coin()) v += g.positive_rational();
      const Rational next = barrier_value(a, p, i);
      CHECK(next <= previous);
      CHECK(next >= 0);
      previous = next;
    }
  }
}

TEST_CASE("property: random certificates and barrier shifts") {
  Generator g(53);
  const Rational eps_values[] = {q(1, 4), q(1, 2), 1, 2};
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = g.index(1, 3);
    const std::size_t m = g.index(1, 4);
    std::vector<HermitianMatrix> a;
    for (std::size_t k = 0; k < m; ++k) a.push_back(g.psd(d, g.coin()));
    const Rational eps = eps_values[trial % 4];
    interlace::testing::scale_tuple(a, d, eps);
    const BarrierCertificate c = certify_theorem2(d, a, eps);
    CHECK(c.certified);
    CHECK(c.mu_root.hi <= c.threshold_upper + default_width());

    EvaluationPoint p{g.positive_rational() + 1, std::vector<Rational>(m)};
    for (auto& v : p.z) v = g.rational(4);
    while (!is_above_roots_det(a, p)) p.x *= 2;
    const std::size_t i = g.index(0, m - 1);
    const std::size_t j = g.index(0, m - 1);
    const Rational phi = std::max(barrier_value(a, p, i), barrier_value(a, p, j));
    if (phi >= 1) continue;
    const Rational delta = 1 / (1 - phi) + g.index(0, 2) * g.positive_rational();
    CHECK(check_barrier_shift(a, p, i, j, delta));
  }
}
