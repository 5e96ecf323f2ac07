#include "interlace/expectation.hpp"

#include "interlace/multilinear.hpp"
#include "interlace/parallel.hpp"
#include "interlace/roots.hpp"

#include <limits>
#include <string>

namespace interlace {

SupportPoint SupportPoint::from_vector(Rational prob, VectorC v) {
  HermitianMatrix outer = outer_product(v);
  return {std::move(prob), std::move(outer), std::move(v)};
}

SupportPoint SupportPoint::from_outer(Rational prob, HermitianMatrix outer) {
  if (!is_psd(outer) || !is_rank_at_most_one(outer))
    fail(ErrorCode::InvalidArgument, "support matrix must be PSD of rank at most one");
  return {std::move(prob), std::move(outer), std::nullopt};
}

HermitianMatrix RandomVectorSpec::expected_outer(std::size_t dim) const {
  HermitianMatrix e = HermitianMatrix::zero(dim);
  for (const auto& s : support) e += s.prob * s.outer;
  return e;
}

Rational RandomVectorSpec::expected_norm2() const {
  Rational total;
  for (const auto& s : support) total += s.prob * s.outer.trace();
  return total;
}

void Instance::validate() const {
  if (dim == 0) fail(ErrorCode::InvalidArgument, "instance dimension must be positive");
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const std::string where = "specs[" + std::to_string(i) + "]";
    const auto& support = specs[i].support;
    if (support.empty()) fail(ErrorCode::InvalidArgument, where + ": support is empty");
    Rational total;
    for (std::size_t s = 0; s < support.size(); ++s) {
      const auto& p = support[s];
      if (sgn(p.prob) <= 0)
        fail(ErrorCode::InvalidArgument, where + ".support[" + std::to_string(s) + "]: probability must be positive");
      if (p.outer.dim() != dim)
        fail(ErrorCode::InvalidArgument, where + ".support[" + std::to_string(s) + "]: vector has dimension " +
                                             std::to_string(p.outer.dim()) + ", expected " + std::to_string(dim));
      if (p.vector && outer_product(*p.vector) != p.outer)
        fail(ErrorCode::InvalidArgument, where + ".support[" + std::to_string(s) + "]: vector and outer product disagree");
      total += p.prob;
    }
    if (total != 1)
      fail(ErrorCode::InvalidArgument, where + ": probabilities sum to " + to_string(total) + ", expected 1");
  }
}

std::vector<HermitianMatrix> Instance::expected_outers() const {
  std::vector<HermitianMatrix> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(s.expected_outer(dim));
  return out;
}

std::uint64_t Instance::outcome_count() const {
  std::uint64_t total = 1;
  for (const auto& s : specs) {
    const std::uint64_t n = s.support.size();
    if (n != 0 && total > std::numeric_limits<std::uint64_t>::max() / n) return std::numeric_limits<std::uint64_t>::max();
    total *= n;
  }
  return total;
}

InstanceStats instance_stats(const Instance& inst) {
  InstanceStats st;
  st.expected_sum = HermitianMatrix::zero(inst.dim);
  st.eps = 0;
  for (const auto& spec : inst.specs) {
    st.expected_sum += spec.expected_outer(inst.dim);
    st.eps = std::max(st.eps, spec.expected_norm2());
  }
  st.sum_leq_identity = loewner_leq(st.expected_sum, HermitianMatrix::identity(inst.dim));
  return st;
}

UniPoly expected_char_poly_enumeration(const Instance& inst, const EnumerationOptions& options) {
  inst.validate();
  const std::uint64_t outcomes = inst.outcome_count();
  if (outcomes > options.guard)
    fail(ErrorCode::GuardExceeded, "enumeration needs " + std::to_string(outcomes) + " outcomes, guard is " +
                                       std::to_string(options.guard) + "; use the mixed characteristic path instead");
  const std::size_t m = inst.specs.size();
  std::vector<UniPoly> partial(resolve_threads(options.threads));
  parallel_chunks(static_cast<std::size_t>(outcomes), resolve_threads(options.threads),
                  [&](std::size_t begin, std::size_t end, std::size_t chunk) {
                    UniPoly acc;
                    std::vector<std::size_t> digits(m);
                    for (std::size_t index = begin; index < end; ++index) {
                      // Mixed radix, first spec most significant.
                      std::size_t rest = index;
                      for (std::size_t i = m; i-- > 0;) {
                        const std::size_t radix = inst.specs[i].support.size();
                        digits[i] = rest % radix;
                        rest /= radix;
                      }
                      HermitianMatrix total = HermitianMatrix::zero(inst.dim);
                      Rational weight(1);
                      for (std::size_t i = 0; i < m; ++i) {
                        const auto& point = inst.specs[i].support[digits[i]];
                        total += point.outer;
                        weight *= point.prob;
                      }
                      acc.add_scaled(char_poly(total), weight);
                    }
                    partial[chunk] = std::move(acc);
                  });
  UniPoly out;
  for (const auto& p : partial) out += p;
  return out;
}

UniPoly expected_char_poly_mixed(const Instance& inst) {
  inst.validate();
  const auto expectations = inst.expected_outers();
  return mixed_char_poly(HermitianMatrix::zero(inst.dim), expectations);
}

bool verify_determinant_identity(const Instance& inst, const EnumerationOptions& options) {
  const UniPoly lhs = expected_char_poly_enumeration(inst, options);
  const auto expectations = inst.expected_outers();
  UniPoly rhs;
  if (expectations.empty()) {
    rhs = UniPoly::monomial(Rational(1), inst.dim);
  } else {
    rhs = apply_one_minus_partials(truncated_determinant(expectations)).mu;
  }
  return lhs == rhs;
}

}  // namespace interlace
