#pragma once

#include "interlace/matrix.hpp"
#include "interlace/polynomial.hpp"
#include "interlace/quadratic_field.hpp"
#include "interlace/roots.hpp"

#include <span>
#include <vector>

namespace interlace {

/// (x, z_1..z_m) at which P(x, z) = det(xI + Σ z_i A_i) is evaluated.
struct EvaluationPoint {
  Rational x;
  std::vector<Rational> z;
};

/// Φ_P^i(x, z) = ∂_{z_i} log P = Tr((xI + Σ z_j A_j)^{-1} A_i), exact. Throws
/// NotAboveRoots unless xI + Σ z_j A_j is positive definite.
Rational barrier_value(std::span<const HermitianMatrix> matrices, const EvaluationPoint& point, std::size_t i);

/// Positive definiteness of xI + Σ z_i A_i, the sufficient condition used for
/// membership in the above-the-roots set of P.
bool is_above_roots_det(std::span<const HermitianMatrix> matrices, const EvaluationPoint& point);

/// Everything established while certifying the (1 + √ε)² bound for matrices
/// with Σ A_i ⪯ I and Tr A_i <= ε. Irrational quantities live in Q(√ε).
struct BarrierCertificate {
  Rational eps;
  QuadraticFieldElement x_threshold;  // (1 + √ε)² = (1 + ε) + 2√ε
  QuadraticFieldElement t_shift;      // -1 - √ε
  QuadraticFieldElement delta;        // -t = 1 + √ε
  QuadraticFieldElement phi_upper;    // ε / (x + t), bounds every Φ^i at (x, t·1)
  std::vector<QuadraticFieldElement> phi_values;  // Φ^i at (x, t·1)
  UniPoly mu;
  RootBracket mu_root;
  Rational threshold_upper;  // within 2^-40 above (1 + √ε)²
  bool root_below_threshold = false;  // mu has no root in ((1 + √ε)², ∞), decided exactly
  bool certified = false;
};

/// Runs the barrier argument: xI + tΣA_i ≻ 0, Φ^i <= ε/(x + t) < 1 in every
/// direction, δ = 1/(1 - ε/(x + t)) = 1 + √ε, and finally checks the largest
/// root of the mixed characteristic polynomial against (1 + √ε)². Throws
/// HypothesisViolated, naming the hypothesis, when the inputs are outside the
/// theorem's assumptions.
BarrierCertificate certify_theorem2(std::span<const HermitianMatrix> matrices, const Rational& eps);
BarrierCertificate certify_theorem2(std::size_t dim, std::span<const HermitianMatrix> matrices, const Rational& eps);

struct BarrierShift {
  Rational phi_before;        // Φ_P^i(point)
  Rational phi_after;         // Φ_Q^i(point + δ e_j), Q = (1 - ∂_{z_j}) P
  Rational q_at_shifted;      // Q(point + δ e_j)
  bool holds = false;         // Q(point + δ e_j) > 0 and phi_after <= phi_before
};

/// Evaluates one application of the barrier shift in direction j, observed in
/// direction i. Requires the point above the roots (NotAboveRoots) and
/// δ >= 1/(1 - Φ^i) > 0 and δ >= 1/(1 - Φ^j) > 0 (PreconditionFail).
BarrierShift barrier_shift(std::span<const HermitianMatrix> matrices, const EvaluationPoint& point, std::size_t i,
                           std::size_t j, const Rational& delta);

bool check_barrier_shift(std::span<const HermitianMatrix> matrices, const EvaluationPoint& point, std::size_t i,
                         std::size_t j, const Rational& delta);

/// Exact number of distinct roots of p strictly greater than `at`.
int roots_above(const UniPoly& p, const QuadraticFieldElement& at);

}  // namespace interlace
