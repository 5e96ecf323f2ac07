#include "interlace/search.hpp"

#include "interlace/multilinear.hpp"
#include "interlace/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace interlace {

namespace {

/// E det(xI - base - Σ_{i >= from} v_i v_i^*), by enumeration of the remaining
/// specs or through the mixed characteristic polynomial of their expectations.
UniPoly conditional_char_poly(const Instance& inst, const HermitianMatrix& base, std::size_t from,
                              const std::vector<HermitianMatrix>& expectations, const SearchOptions& options) {
  if (from >= inst.specs.size()) return char_poly(base);
  if (options.evaluation == ChildEvaluation::MixedChar) {
    std::span<const HermitianMatrix> future(expectations.data() + from, expectations.size() - from);
    return mixed_char_poly(base, future);
  }
  std::uint64_t outcomes = 1;
  for (std::size_t i = from; i < inst.specs.size(); ++i) {
    outcomes *= inst.specs[i].support.size();
    if (outcomes > options.guard)
      fail(ErrorCode::GuardExceeded, "conditional enumeration exceeds the outcome guard of " +
                                         std::to_string(options.guard));
  }
  UniPoly acc;
  std::vector<std::size_t> digits(inst.specs.size() - from, 0);
  for (std::uint64_t index = 0; index < outcomes; ++index) {
    HermitianMatrix total = base;
    Rational weight(1);
    for (std::size_t k = 0; k < digits.size(); ++k) {
      const auto& p = inst.specs[from + k].support[digits[k]];
      total += p.outer;
      weight *= p.prob;
    }
    acc.add_scaled(char_poly(total), weight);
    for (std::size_t k = digits.size(); k-- > 0;) {
      if (++digits[k] < inst.specs[from + k].support.size()) break;
      digits[k] = 0;
    }
  }
  return acc;
}

Assignment realize(const Instance& inst, std::vector<std::size_t> chosen, const Rational& width) {
  Assignment a;
  a.realized_sum = HermitianMatrix::zero(inst.dim);
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    const auto& p = inst.specs[i].support[chosen[i]];
    a.realized_sum += p.outer;
    a.realized_vectors.push_back(p.vector);
  }
  a.chosen = std::move(chosen);
  a.realized_char_poly = char_poly(a.realized_sum);
  a.realized_norm = largest_root(a.realized_char_poly, width);
  return a;
}

void require_outcomes_within(const Instance& inst, std::uint64_t guard) {
  const std::uint64_t outcomes = inst.outcome_count();
  if (outcomes > guard)
    fail(ErrorCode::GuardExceeded, "brute force needs " + std::to_string(outcomes) + " outcomes, guard is " +
                                       std::to_string(guard));
}

void require_rank_one_psd(std::span<const HermitianMatrix> outers, std::size_t dim) {
  require_same_dim(outers, dim);
  for (std::size_t i = 0; i < outers.size(); ++i)
    if (!is_psd(outers[i]) || !is_rank_at_most_one(outers[i]))
      fail(ErrorCode::InvalidArgument, "u_" + std::to_string(i + 1) + " u_" + std::to_string(i + 1) +
                                           "^* must be PSD of rank at most one");
}

HermitianMatrix embed_block(const HermitianMatrix& u, std::size_t r, std::size_t block) {
  const std::size_t d = u.dim();
  HermitianMatrix out = HermitianMatrix::zero(r * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) out.set(block * d + a, block * d + b, u(a, b));
  return out;
}

HermitianMatrix subset_sum(std::span<const HermitianMatrix> outers, std::size_t dim, std::uint64_t mask) {
  HermitianMatrix s = HermitianMatrix::zero(dim);
  for (std::size_t i = 0; i < outers.size(); ++i)
    if (mask >> i & 1U) s += outers[i];
  return s;
}

std::vector<HermitianMatrix> outers_of(std::span<const VectorC> vectors) {
  std::vector<HermitianMatrix> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(outer_product(v));
  return out;
}

std::size_t common_dim(std::span<const VectorC> vectors) {
  if (vectors.empty()) fail(ErrorCode::InvalidArgument, "at least one vector is needed to fix the dimension");
  for (const auto& v : vectors)
    if (v.dim() != vectors.front().dim()) fail(ErrorCode::DimensionMismatch, "vectors have different dimensions");
  return vectors.front().dim();
}

LiftedSystem lift_impl(std::size_t dim, std::span<const HermitianMatrix> outers, std::span<const VectorC> vectors,
                       std::size_t r) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "r must be a positive integer");
  if (dim == 0) fail(ErrorCode::InvalidArgument, "dimension must be positive");
  require_rank_one_psd(outers, dim);
  Rational root_r;
  const bool rational_scale = exact_sqrt(Rational(static_cast<long>(r)), root_r) && !vectors.empty();
  const Rational rr(static_cast<long>(r));
  const Rational prob(1, static_cast<long>(r));

  LiftedSystem sys;
  sys.r = r;
  sys.base_dim = dim;
  sys.lifted.dim = r * dim;
  for (std::size_t i = 0; i < outers.size(); ++i) {
    RandomVectorSpec spec;
    for (std::size_t k = 0; k < r; ++k) {
      SupportPoint p{prob, rr * embed_block(outers[i], r, k), std::nullopt};
      if (rational_scale) {
        std::vector<ComplexRational> v(r * dim);
        for (std::size_t a = 0; a < dim; ++a) v[k * dim + a] = vectors[i][a] * ComplexRational(root_r);
        p.vector = VectorC(std::move(v));
      }
      spec.support.push_back(std::move(p));
    }
    sys.lifted.specs.push_back(std::move(spec));
  }
  sys.lifted.validate();

  // E‖v_i‖² = r‖u_i‖² and Σ E v_i v_i^* = diag(Σ u_i u_i^*, ..., Σ u_i u_i^*).
  const HermitianMatrix total = sum(outers, dim);
  HermitianMatrix expected_blocks = HermitianMatrix::zero(r * dim);
  for (std::size_t k = 0; k < r; ++k) expected_blocks += embed_block(total, r, k);
  HermitianMatrix lifted_total = HermitianMatrix::zero(r * dim);
  for (std::size_t i = 0; i < outers.size(); ++i) {
    if (sys.lifted.specs[i].expected_norm2() != rr * outers[i].trace())
      fail(ErrorCode::InternalInvariant, "lifting: E‖v‖² != r‖u‖² for vector " + std::to_string(i + 1));
    lifted_total += sys.lifted.specs[i].expected_outer(r * dim);
  }
  if (lifted_total != expected_blocks)
    fail(ErrorCode::InternalInvariant, "lifting: Σ E v v^* is not block diagonal with copies of Σ u u^*");
  return sys;
}

Partition partition_from_labels(std::size_t dim, std::span<const HermitianMatrix> outers, std::size_t r,
                                const std::vector<std::size_t>& labels, const Rational& delta, const Rational& width) {
  Partition p;
  p.r = r;
  p.blocks.resize(r);
  for (std::size_t i = 0; i < labels.size(); ++i) p.blocks[labels[i]].push_back(i);
  for (const auto& block : p.blocks) {
    HermitianMatrix s = HermitianMatrix::zero(dim);
    for (std::size_t i : block) s += outers[i];
    p.block_norms.push_back(largest_root(char_poly(s), width));
  }
  p.delta = delta;
  p.bound = partition_bound(r, delta);
  p.bound_upper = p.bound.upper_approx(default_width());
  return p;
}

}  // namespace

Assignment greedy_interlacing_assignment(const Instance& inst, const SearchOptions& options) {
  inst.validate();
  const std::size_t m = inst.specs.size();
  const auto expectations = inst.expected_outers();
  HermitianMatrix base = HermitianMatrix::zero(inst.dim);

  UniPoly parent = conditional_char_poly(inst, base, 0, expectations, options);
  RootBracket parent_root = largest_root(parent, options.width);
  const RootBracket expectation_root = parent_root;

  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& support = inst.specs[i].support;
    std::vector<UniPoly> children(support.size());
    std::vector<RootBracket> roots(support.size());
    parallel_chunks(support.size(), resolve_threads(options.threads),
                    [&](std::size_t begin, std::size_t end, std::size_t) {
                      for (std::size_t s = begin; s < end; ++s) {
                        children[s] = conditional_char_poly(inst, base + support[s].outer, i + 1, expectations, options);
                        roots[s] = largest_root(children[s], options.width);
                      }
                    });
    UniPoly mixture;
    for (std::size_t s = 0; s < support.size(); ++s) mixture.add_scaled(children[s], support[s].prob);
    if (mixture != parent)
      fail(ErrorCode::InternalInvariant, "step " + std::to_string(i + 1) +
                                             ": children do not average to the parent polynomial");

    std::size_t best = 0;
    for (std::size_t s = 1; s < support.size(); ++s)
      if (compare_roots(roots[s], roots[best]) == std::strong_ordering::less) best = s;

    RootBracket& pick = roots[best];
    const bool dominated = compare_roots(pick, parent_root) != std::strong_ordering::greater ||
                           root_at_most(pick, parent_root.lo + options.width);
    if (!dominated)
      fail(ErrorCode::InterlacingViolation, "step " + std::to_string(i + 1) +
                                                ": no child has largest root within width of the parent's");
    chosen.push_back(best);
    base += support[best].outer;
    parent = std::move(children[best]);
    parent_root = pick;
  }

  Assignment a = realize(inst, std::move(chosen), options.width);
  if (a.realized_char_poly != parent)
    fail(ErrorCode::InternalInvariant, "realized characteristic polynomial differs from the final leaf");
  a.expectation_root = expectation_root;
  return a;
}

Assignment brute_force_best_assignment(const Instance& inst, const SearchOptions& options) {
  inst.validate();
  require_outcomes_within(inst, options.guard);
  const std::size_t m = inst.specs.size();
  const auto outcomes = static_cast<std::size_t>(inst.outcome_count());
  auto digits_of = [&](std::size_t index) {
    std::vector<std::size_t> digits(m);
    for (std::size_t i = m; i-- > 0;) {
      const std::size_t radix = inst.specs[i].support.size();
      digits[i] = index % radix;
      index /= radix;
    }
    return digits;
  };
  std::vector<RootBracket> roots(outcomes);
  parallel_chunks(outcomes, resolve_threads(options.threads), [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t index = begin; index < end; ++index) {
      const auto digits = digits_of(index);
      HermitianMatrix total = HermitianMatrix::zero(inst.dim);
      for (std::size_t i = 0; i < m; ++i) total += inst.specs[i].support[digits[i]].outer;
      roots[index] = largest_root(char_poly(total), options.width);
    }
  });
  std::size_t best = 0;
  for (std::size_t index = 1; index < outcomes; ++index)
    if (compare_roots(roots[index], roots[best]) == std::strong_ordering::less) best = index;
  return realize(inst, digits_of(best), options.width);
}

LiftedSystem lift_for_partition(std::size_t dim, std::span<const HermitianMatrix> outers, std::size_t r) {
  return lift_impl(dim, outers, {}, r);
}

LiftedSystem lift_for_partition(std::span<const VectorC> vectors, std::size_t r) {
  const std::size_t dim = common_dim(vectors);
  const auto outers = outers_of(vectors);
  return lift_impl(dim, outers, vectors, r);
}

QuadraticFieldElement partition_bound(std::size_t r, const Rational& delta) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "r must be a positive integer");
  if (sgn(delta) < 0) fail(ErrorCode::InvalidArgument, "delta must be nonnegative");
  const Rational rr(static_cast<long>(r));
  const Rational rd = rr * delta;
  // (1 + √(rδ))² / r = (1 + rδ)/r + (2/r)√(rδ).
  return QuadraticFieldElement(Rational((1 + rd) / rr), Rational(2 / rr), rd);
}

Partition partition_vectors(std::size_t dim, std::span<const HermitianMatrix> outers, std::size_t r,
                            const Rational& delta, const SearchOptions& options) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "r must be a positive integer");
  require_rank_one_psd(outers, dim);
  if (sgn(delta) < 0) fail(ErrorCode::HypothesisViolated, "delta = " + to_string(delta) + " is negative");
  if (!loewner_leq(sum(outers, dim), HermitianMatrix::identity(dim)))
    fail(ErrorCode::HypothesisViolated, "Σ u_i u_i^* is not ⪯ I");
  for (std::size_t i = 0; i < outers.size(); ++i)
    if (outers[i].trace() > delta)
      fail(ErrorCode::HypothesisViolated, "‖u_" + std::to_string(i + 1) + "‖² = " + to_string(outers[i].trace()) +
                                              " exceeds delta = " + to_string(delta));
  const LiftedSystem sys = lift_impl(dim, outers, {}, r);
  const Assignment a = greedy_interlacing_assignment(sys.lifted, options);
  Partition p = partition_from_labels(dim, outers, r, a.chosen, delta, options.width);
  for (std::size_t k = 0; k < r; ++k)
    if (p.block_norms[k].hi > p.bound_upper + options.width)
      fail(ErrorCode::InternalInvariant, "block " + std::to_string(k) + " exceeds (1/r)(1 + √(rδ))²");
  return p;
}

Partition partition_vectors(std::span<const VectorC> vectors, std::size_t r, const Rational& delta,
                            const SearchOptions& options) {
  const std::size_t dim = common_dim(vectors);
  const auto outers = outers_of(vectors);
  return partition_vectors(dim, outers, r, delta, options);
}

Partition brute_force_partition_oracle(std::size_t dim, std::span<const HermitianMatrix> outers, std::size_t r,
                                       const SearchOptions& options) {
  if (r == 0) fail(ErrorCode::InvalidArgument, "r must be a positive integer");
  require_rank_one_psd(outers, dim);
  const std::size_t m = outers.size();
  std::uint64_t labelings = 1;
  for (std::size_t i = 0; i < m; ++i) {
    labelings *= r;
    if (labelings > options.partition_guard)
      fail(ErrorCode::GuardExceeded, "partition oracle needs r^m = " + std::to_string(r) + "^" + std::to_string(m) +
                                         " labelings, guard is " + std::to_string(options.partition_guard));
  }

  // Rank every subset's norm once; labelings are then compared by integers.
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<RootBracket> norms(subsets);
  parallel_chunks(subsets, resolve_threads(options.threads), [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t mask = begin; mask < end; ++mask)
      norms[mask] = largest_root(char_poly(subset_sum(outers, dim, mask)), options.width);
  });
  std::vector<std::size_t> order(subsets);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_roots(norms[a], norms[b]) == std::strong_ordering::less;
  });
  std::vector<std::size_t> rank(subsets);
  for (std::size_t k = 1; k < subsets; ++k) {
    const bool same = compare_roots(norms[order[k - 1]], norms[order[k]]) == std::strong_ordering::equal;
    rank[order[k]] = same ? rank[order[k - 1]] : rank[order[k - 1]] + 1;
  }

  std::vector<std::size_t> labels(m, 0), best_labels(m, 0);
  std::size_t best_value = SIZE_MAX;
  std::vector<std::uint64_t> masks(r);
  for (std::uint64_t index = 0; index < labelings; ++index) {
    std::fill(masks.begin(), masks.end(), 0);
    for (std::size_t i = 0; i < m; ++i) masks[labels[i]] |= std::uint64_t{1} << i;
    std::size_t value = 0;
    for (const auto mask : masks) value = std::max(value, rank[mask]);
    if (value < best_value) {
      best_value = value;
      best_labels = labels;
    }
    for (std::size_t i = m; i-- > 0;) {
      if (++labels[i] < r) break;
      labels[i] = 0;
    }
  }
  Rational delta;
  for (const auto& u : outers) delta = std::max(delta, u.trace());
  return partition_from_labels(dim, outers, r, best_labels, delta, options.width);
}

std::size_t heaviest_block(Partition& p) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < p.block_norms.size(); ++k)
    if (compare_roots(p.block_norms[k], p.block_norms[best]) == std::strong_ordering::greater) best = k;
  return best;
}

}  // namespace interlace
