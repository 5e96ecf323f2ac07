// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "support.hpp"

#include "interlace/barrier.hpp"
#include "interlace/error.hpp"
#include "interlace/multilinear.hpp"
#include "interlace/quadratic_field.hpp"
#include "interlace/search.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace interlace;
using interlace::testing::Generator;
using interlace::testing::q;

namespace {

struct Outcome {
  std::size_t passed = 0;
  std::size_t total = 0;
  std::string note;
  bool ok() const { return total > 0 && passed == total; }
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = run();
  } catch (const Error& e) {
    out.note = std::string("error ") + std::string(error_code_name(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    out.note = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = out.ok();
  failures += !ok;
  std::printf("%s [%d] %s: %zu/%zu (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, title, out.passed, out.total, seconds,
              out.note.empty() ? "" : " ", out.note.c_str());
  std::fflush(stdout);
}

Rational threshold_upper(const Rational& eps) {
  return QuadraticFieldElement(1 + eps, 2, eps).upper_approx(default_width());
}

std::vector<HermitianMatrix> psd_tuple(Generator& g, std::size_t d, std::size_t m) {
  std::vector<HermitianMatrix> a;
  for (std::size_t i = 0; i < m; ++i) a.push_back(g.psd(d, g.coin()));
  return a;
}

// u_1..u_m with Σ u_i u_i^* ⪯ I, verified exactly.
std::vector<VectorC> bounded_vectors(Generator& g, std::size_t d, std::size_t m) {
  std::vector<VectorC> u;
  for (std::size_t i = 0; i < m; ++i) u.push_back(g.vector(d, g.coin()));
  std::vector<HermitianMatrix> outers;
  for (const auto& v : u) outers.push_back(outer_product(v));
  const Rational lambda = interlace::testing::lambda_max_upper(sum(outers, d));
  if (lambda > 1) {
    const Rational c = 1 / sqrt_upper(lambda, q(1, 64));
    for (auto& v : u) v = v.scaled(c);
  }
  return u;
}

Outcome identity_suite() {
  Generator g(1001);
  Outcome out;
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst =
        interlace::testing::random_instance(g, g.index(1, 3), g.index(1, 4), 3, g.coin(), false);
    ++out.total;
    out.passed += verify_determinant_identity(inst);
  }
  return out;
}

Outcome oracle_suite() {
  Generator g(1002);
  Outcome out;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = g.index(1, 4);
    const auto a = psd_tuple(g, d, g.index(1, 5));
    const UniPoly literal = apply_one_minus_partials(truncated_determinant(a)).mu;
    ++out.total;
    out.passed += literal == mixed_char_injection_oracle(d, a) && literal == mixed_char_poly(a);
  }
  return out;
}

Outcome certificate_suite() {
  Generator g(1003);
  const Rational eps_values[] = {q(1, 4), q(1, 2), 1, 2};
  Outcome out;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = g.index(1, 4);
    auto a = psd_tuple(g, d, g.index(1, 5));
    const Rational eps = eps_values[trial % 4];
    interlace::testing::scale_tuple(a, d, eps);
    const BarrierCertificate c = certify_theorem2(d, a, eps);
    ++out.total;
    out.passed += c.certified && c.mu_root.hi <= threshold_upper(eps) + default_width();
  }
  return out;
}

Outcome greedy_suite() {
  Generator g(1004);
  Outcome out;
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = interlace::testing::random_instance(g, g.index(1, 3), g.index(1, 4), 3, g.coin(), true);
    const InstanceStats st = instance_stats(inst);
    if (!st.sum_leq_identity) fail(ErrorCode::InternalInvariant, "generator produced E Σ v v^* not ⪯ I");
    const Rational bound = threshold_upper(st.eps) + default_width();
    const Assignment greedy = greedy_interlacing_assignment(inst);
    const Assignment best = brute_force_best_assignment(inst);
    ++out.total;
    out.passed += greedy.realized_norm.hi <= bound && best.realized_norm.hi <= bound;
  }
  return out;
}

Outcome partition_suite() {
  Generator g(1005);
  Outcome out;
  auto check = [&](std::size_t d, const std::vector<VectorC>& u, std::size_t r) {
    Rational delta;
    for (const auto& v : u) delta = std::max(delta, v.norm2());
    Partition p = partition_vectors(u, r, delta);
    bool ok = true;
    for (const auto& b : p.block_norms) ok = ok && b.hi <= p.bound_upper + default_width();
    std::vector<HermitianMatrix> outers;
    for (const auto& v : u) outers.push_back(outer_product(v));
    Partition best = brute_force_partition_oracle(d, outers, r);
    ok = ok && best.block_norms[heaviest_block(best)].hi <= best.bound_upper + default_width();
    ++out.total;
    out.passed += ok;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = g.index(1, 4);
    const std::size_t m = g.index(1, 8);
    check(d, bounded_vectors(g, d, m), trial % 2 == 0 ? 2 : 3);
  }
  // orthonormal basis, r = 2: every block has norm exactly 1, bound 3/2 + √2
  std::vector<VectorC> basis;
  for (std::size_t i = 0; i < 4; ++i) basis.push_back(VectorC::basis(4, i));
  Partition p = partition_vectors(basis, 2, 1);
  bool ok = p.bound == QuadraticFieldElement(q(3, 2), 1, 2) && to_decimal(p.bound_upper, 9) == "2.91421356";
  for (auto& b : p.block_norms) ok = ok && (b.poly.is_zero() || root_at_most(b, 1));
  RootBracket heavy = p.block_norms[heaviest_block(p)];
  ok = ok && root_at_most(heavy, 1) && !root_at_most(heavy, q(999, 1000));
  ++out.total;
  out.passed += ok;
  out.note = "orthonormal bound " + approx_label(p.bound_upper);
  return out;
}

Outcome barrier_shift_suite() {
  Generator g(1006);
  Outcome out;
  while (out.total < 100) {
    const std::size_t d = g.index(1, 4);
    const std::size_t m = g.index(1, 5);
    const auto a = psd_tuple(g, d, m);
    EvaluationPoint p{g.positive_rational(), std::vector<Rational>(m)};
    for (auto& v : p.z) v = g.rational(4);
    const std::size_t i = g.index(0, m - 1);
    const std::size_t j = g.index(0, m - 1);
    while (!is_above_roots_det(a, p) || barrier_value(a, p, i) >= 1 || barrier_value(a, p, j) >= 1) p.x *= 2;
    const Rational phi = std::max(barrier_value(a, p, i), barrier_value(a, p, j));
    const Rational delta = 1 / (1 - phi) + (g.coin() ? Rational(0) : g.positive_rational());
    ++out.total;
    out.passed += check_barrier_shift(a, p, i, j, delta);
  }
  return out;
}

Outcome trace_bound_suite() {
  Generator g(1007);
  Outcome out;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = g.index(1, 4);
    const HermitianMatrix x = g.psd(d, g.coin());
    const HermitianMatrix y = g.psd(d, g.coin());
    const Rational norm_upper = interlace::testing::lambda_max_upper(x);
    ++out.total;
    out.passed += trace_product_bound_holds(x, y, norm_upper);
  }
  return out;
}

Outcome golden_suite() {
  Outcome out;
  const UniPoly target({q(1, 2), -2, 1});
  const HermitianMatrix half = q(1, 2) * HermitianMatrix::identity(2);
  const std::vector<HermitianMatrix> halves{half, half};
  ++out.total;
  out.passed += apply_one_minus_partials(truncated_determinant(halves)).mu == target &&
                mixed_char_injection_oracle(halves) == target;
  for (std::size_t d = 1; d <= 6; ++d) {
    std::vector<HermitianMatrix> id;
    for (std::size_t i = 0; i < d; ++i) id.push_back(outer_product(VectorC::basis(d, i)));
    ++out.total;
    out.passed += mixed_char_poly(id) == linear_power(1, d);
  }
  Instance inst;
  inst.dim = 2;
  for (int i = 0; i < 2; ++i) {
    RandomVectorSpec spec;
    spec.support.push_back(SupportPoint::from_vector(q(1, 2), VectorC::basis(2, 0)));
    spec.support.push_back(SupportPoint::from_vector(q(1, 2), VectorC::basis(2, 1)));
    inst.specs.push_back(spec);
  }
  ++out.total;
  out.passed += expected_char_poly_enumeration(inst) == target;
  return out;
}

}  // namespace

int main() {
  report(1, "expected char poly equals mixed char poly (300 instances)", identity_suite);
  report(2, "truncated algebra equals injection oracle (200 tuples)", oracle_suite);
  report(3, "barrier certificate for (1 + √ε)² (100 tuples)", certificate_suite);
  report(4, "greedy outcome within (1 + √ε)², confirmed by brute force (100 instances)", greedy_suite);
  report(5, "partition within (1/r)(1 + √(rδ))², confirmed by oracle (50 systems + orthonormal)", partition_suite);
  report(6, "barrier shift never increases the barrier (100 tuples)", barrier_shift_suite);
  report(7, "Tr(XY) <= ‖X‖ Tr(Y) (200 pairs)", trace_bound_suite);
  report(8, "golden values", golden_suite);
  return failures == 0 ? 0 : 1;
}
