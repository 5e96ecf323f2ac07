#pragma once

#include "interlace/expectation.hpp"
#include "interlace/quadratic_field.hpp"
#include "interlace/roots.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace interlace {

/// How the greedy descent evaluates the conditional expected characteristic
/// polynomial of each child.
enum class ChildEvaluation {
  MixedChar,    // mixed characteristic polynomial of (fixed sum, future expectations)
  Enumeration,  // weighted sum over the future joint outcomes
};

inline constexpr std::uint64_t kDefaultPartitionGuard = 6561;  // 3^8

struct SearchOptions {
  Rational width = default_width();
  std::uint64_t guard = kDefaultOutcomeGuard;
  std::uint64_t partition_guard = kDefaultPartitionGuard;
  unsigned threads = 1;
  ChildEvaluation evaluation = ChildEvaluation::MixedChar;
};

/// One outcome per spec together with its realized spectrum.
struct Assignment {
  std::vector<std::size_t> chosen;
  std::vector<std::optional<VectorC>> realized_vectors;
  HermitianMatrix realized_sum;
  UniPoly realized_char_poly;
  RootBracket realized_norm;
  /// Largest root of E det(xI - Σ v_i v_i^*); set by the greedy search.
  std::optional<RootBracket> expectation_root;
};

/// Walks the specs in input order; at each step picks the support value whose
/// conditional expected characteristic polynomial has the smallest largest
/// root (exact comparison, ties to the lowest index). Every step checks that
/// the chosen child's root is at most the parent's + width, raising
/// InterlacingViolation otherwise.
Assignment greedy_interlacing_assignment(const Instance& inst, const SearchOptions& options = {});

/// Exhaustive minimizer of ‖Σ w_i w_i^*‖ over all joint outcomes; ties go to
/// the lexicographically first outcome.
Assignment brute_force_best_assignment(const Instance& inst, const SearchOptions& options = {});

/// r-block lifting of u_1..u_m ∈ C^d: spec i takes r·w_{i,k} w_{i,k}^* (w_{i,k} is
/// u_i placed in block k) with probability 1/r. Works on outer products so the
/// √r scaling never has to be represented.
struct LiftedSystem {
  std::size_t r = 1;
  std::size_t base_dim = 0;
  Instance lifted;
};

LiftedSystem lift_for_partition(std::size_t dim, std::span<const HermitianMatrix> outers, std::size_t r);
LiftedSystem lift_for_partition(std::span<const VectorC> vectors, std::size_t r);

struct Partition {
  std::size_t r = 1;
  std::vector<std::vector<std::size_t>> blocks;  // 0-based indices into the input vectors
  std::vector<RootBracket> block_norms;
  Rational delta;
  QuadraticFieldElement bound;  // (1/r)(1 + √(rδ))²
  Rational bound_upper;         // within 2^-40 above `bound`
};

/// (1/r)(1 + √(rδ))² in Q(√(rδ)).
QuadraticFieldElement partition_bound(std::size_t r, const Rational& delta);

/// Greedy descent on the lifted system, read back as a partition. Requires
/// Σ u_i u_i^* ⪯ I and ‖u_i‖² <= δ (HypothesisViolated otherwise).
Partition partition_vectors(std::size_t dim, std::span<const HermitianMatrix> outers, std::size_t r,
                            const Rational& delta, const SearchOptions& options = {});
Partition partition_vectors(std::span<const VectorC> vectors, std::size_t r, const Rational& delta,
                            const SearchOptions& options = {});

/// Exhaustive minimizer of max_k ‖Σ_{i∈S_k} u_i u_i^*‖ over all r^m labelings
/// (first labeling in lexicographic order wins ties). `delta` of the result is
/// max ‖u_i‖². GuardExceeded when r^m > options.partition_guard.
Partition brute_force_partition_oracle(std::size_t dim, std::span<const HermitianMatrix> outers, std::size_t r,
                                       const SearchOptions& options = {});

/// Index of the block with the largest norm (exact comparison).
std::size_t heaviest_block(Partition& p);

}  // namespace interlace
