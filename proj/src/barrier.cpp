#include "interlace/barrier.hpp"

#include "interlace/elimination.hpp"
#include "interlace/multilinear.hpp"

#include <initializer_list>
#include <string>

namespace interlace {

namespace {

using QF = QuadraticFieldElement;
using ComplexQF = Complex<QF>;

std::size_t dim_of(std::span<const HermitianMatrix> matrices) {
  if (matrices.empty()) fail(ErrorCode::InvalidArgument, "at least one matrix is needed to fix the dimension");
  const std::size_t d = matrices.front().dim();
  require_same_dim(matrices, d);
  return d;
}

HermitianMatrix pencil_at(std::span<const HermitianMatrix> matrices, const EvaluationPoint& point) {
  const std::size_t d = dim_of(matrices);
  if (point.z.size() != matrices.size())
    fail(ErrorCode::DimensionMismatch, "evaluation point has " + std::to_string(point.z.size()) +
                                           " coordinates for " + std::to_string(matrices.size()) + " matrices");
  HermitianMatrix m = point.x * HermitianMatrix::identity(d);
  for (std::size_t k = 0; k < matrices.size(); ++k) m += point.z[k] * matrices[k];
  return m;
}

template <class F>
Complex<F> trace_of_solve(const Matrix<Complex<F>>& m, const Matrix<Complex<F>>& rhs) {
  const auto x = solve<F>(m, rhs);
  Complex<F> t;
  for (std::size_t k = 0; k < x.dim(); ++k) t += x(k, k);
  return t;
}

Matrix<ComplexQF> lift(const HermitianMatrix& m) {
  Matrix<ComplexQF> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = ComplexQF(QF(m(r, c).re), QF(m(r, c).im));
  return out;
}

QF evaluate(const UniPoly& p, const QF& at) {
  QF acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= at;
    acc += QF(*it);
  }
  return acc;
}

}  // namespace

int roots_above(const UniPoly& p, const QF& at) {
  const SturmSequence sturm(squarefree_part(p));
  int changes = 0, last = 0;
  for (const auto& q : sturm.chain()) {
    const int s = evaluate(q, at).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes - sturm.variations_at_pos_inf();
}

Rational barrier_value(std::span<const HermitianMatrix> matrices, const EvaluationPoint& point, std::size_t i) {
  if (i >= matrices.size())
    fail(ErrorCode::InvalidArgument, "barrier direction " + std::to_string(i) + " out of range");
  const HermitianMatrix m = pencil_at(matrices, point);
  if (!is_pd(m)) fail(ErrorCode::NotAboveRoots, "xI + Σ z_j A_j is not positive definite at the evaluation point");
  const ComplexRational t = trace_of_solve<Rational>(m.entries(), matrices[i].entries());
  if (!t.is_real()) fail(ErrorCode::InternalInvariant, "barrier value has an imaginary part");
  return t.re;
}

bool is_above_roots_det(std::span<const HermitianMatrix> matrices, const EvaluationPoint& point) {
  return is_pd(pencil_at(matrices, point));
}

BarrierCertificate certify_theorem2(std::span<const HermitianMatrix> matrices, const Rational& eps) {
  return certify_theorem2(dim_of(matrices), matrices, eps);
}

BarrierCertificate certify_theorem2(std::size_t dim, std::span<const HermitianMatrix> matrices, const Rational& eps) {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "certify_theorem2: dimension must be positive");
  require_same_dim(matrices, dim);
  if (sgn(eps) < 0) fail(ErrorCode::HypothesisViolated, "eps = " + to_string(eps) + " is negative");
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    if (!is_psd(matrices[i]))
      fail(ErrorCode::HypothesisViolated, "A_" + std::to_string(i + 1) + " is not positive semidefinite");
    if (matrices[i].trace() > eps)
      fail(ErrorCode::HypothesisViolated, "Tr A_" + std::to_string(i + 1) + " = " + to_string(matrices[i].trace()) +
                                              " exceeds eps = " + to_string(eps));
  }
  const HermitianMatrix total = sum(matrices, dim);
  if (!loewner_leq(total, HermitianMatrix::identity(dim)))
    fail(ErrorCode::HypothesisViolated, "Σ A_i is not ⪯ I");

  BarrierCertificate cert;
  cert.eps = eps;
  const QF root = QF::sqrt(eps);
  cert.x_threshold = QF(Rational(1 + eps)) + QF(2) * root;
  cert.t_shift = QF(-1) - root;
  cert.delta = -cert.t_shift;

  // xI + tΣA_i ≻ 0 in Q(√ε): the start point (x, t·1) is above the roots.
  Matrix<ComplexQF> start = lift(total);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      start(r, c) *= ComplexQF(cert.t_shift);
      if (r == c) start(r, c) += ComplexQF(cert.x_threshold);
    }
  if (classify_hermitian<QF>(start) != Definiteness::Definite)
    fail(ErrorCode::InternalInvariant, "xI + tΣA_i is not positive definite although the hypotheses hold");

  const QF gap = cert.x_threshold + cert.t_shift;  // x + t = ε + √ε
  cert.phi_upper = sgn(eps) == 0 ? QF(0) : QF(eps) / gap;
  if (!(cert.phi_upper < QF(1))) fail(ErrorCode::InternalInvariant, "barrier bound ε/(x + t) is not below 1");

  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const ComplexQF phi = trace_of_solve<QF>(start, lift(matrices[i]));
    if (!phi.is_real()) fail(ErrorCode::InternalInvariant, "barrier value has an imaginary part");
    if (phi.re > cert.phi_upper)
      fail(ErrorCode::InternalInvariant, "Φ^" + std::to_string(i + 1) + " exceeds ε/(x + t) at the start point");
    cert.phi_values.push_back(phi.re);
  }
  const QF needed = QF(1) / (QF(1) - cert.phi_upper);
  if (cert.delta < needed || cert.delta != needed)
    fail(ErrorCode::InternalInvariant, "δ = 1 + √ε does not match 1/(1 - ε/(x + t))");

  cert.mu = mixed_char_poly(HermitianMatrix::zero(dim), matrices);
  cert.mu_root = largest_root(cert.mu, default_width());
  cert.threshold_upper = cert.x_threshold.upper_approx(default_width());
  cert.root_below_threshold = roots_above(cert.mu, cert.x_threshold) == 0;
  if (!cert.root_below_threshold || cert.mu_root.hi > cert.threshold_upper + default_width())
    fail(ErrorCode::InternalInvariant, "largest root of " + to_string(cert.mu) + " lies above (1 + √ε)²");
  cert.certified = true;
  return cert;
}

BarrierShift barrier_shift(std::span<const HermitianMatrix> matrices, const EvaluationPoint& point, std::size_t i,
                           std::size_t j, const Rational& delta) {
  if (i >= matrices.size() || j >= matrices.size())
    fail(ErrorCode::InvalidArgument, "barrier shift direction out of range");
  if (!is_above_roots_det(matrices, point))
    fail(ErrorCode::NotAboveRoots, "barrier shift: start point is not above the roots");
  BarrierShift out;
  out.phi_before = barrier_value(matrices, point, i);
  const Rational phi_j = barrier_value(matrices, point, j);
  for (const Rational* phi : std::initializer_list<const Rational*>{&out.phi_before, &phi_j}) {
    if (sgn(delta) <= 0 || *phi >= 1 || delta * (1 - *phi) < 1)
      fail(ErrorCode::PreconditionFail, "barrier shift needs δ >= 1/(1 - Φ) > 0; δ = " + to_string(delta) +
                                            ", Φ = " + to_string(*phi));
  }

  EvaluationPoint shifted = point;
  shifted.z[j] += delta;
  const HermitianMatrix base = pencil_at(matrices, shifted);
  // Restrict to the line shifted + s·e_i: q(s) = P - ∂_{z_j} P, with z_j carried
  // as the single truncated variable.
  const HermitianMatrix only_j[] = {matrices[j]};
  const MultilinearDetElement e = pencil_determinant(base, matrices[i], only_j);
  const UniPoly q = e.coefficient(0) - e.coefficient(1);
  out.q_at_shifted = q.coeff(0);
  if (sgn(out.q_at_shifted) <= 0) return out;
  out.phi_after = q.coeff(1) / out.q_at_shifted;
  out.holds = out.phi_after <= out.phi_before;
  return out;
}

bool check_barrier_shift(std::span<const HermitianMatrix> matrices, const EvaluationPoint& point, std::size_t i,
                         std::size_t j, const Rational& delta) {
  return barrier_shift(matrices, point, i, j, delta).holds;
}

}  // namespace interlace
