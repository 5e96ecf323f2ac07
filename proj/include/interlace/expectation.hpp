#pragma once

#include "interlace/matrix.hpp"
#include "interlace/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace interlace {

/// One support point of a finite distribution. The rank-one matrix v v^* is the
/// canonical payload; `vector` is kept when v itself is rational (it is absent
/// for lifted systems, whose √r scaling leaves the rationals).
struct SupportPoint {
  Rational prob;
  HermitianMatrix outer;
  std::optional<VectorC> vector;

  static SupportPoint from_vector(Rational prob, VectorC v);
  /// Accepts any PSD matrix of rank <= 1.
  static SupportPoint from_outer(Rational prob, HermitianMatrix outer);
};

struct RandomVectorSpec {
  std::vector<SupportPoint> support;

  /// Σ_s prob_s · v_s v_s^*.
  HermitianMatrix expected_outer(std::size_t dim) const;
  /// E‖v‖² = Σ_s prob_s · Tr(v_s v_s^*).
  Rational expected_norm2() const;
};

struct Instance {
  std::size_t dim = 0;
  std::vector<RandomVectorSpec> specs;

  std::size_t num_specs() const { return specs.size(); }
  /// Throws InvalidArgument naming the offending spec on any broken invariant.
  void validate() const;
  /// E v_i v_i^* for every spec.
  std::vector<HermitianMatrix> expected_outers() const;
  /// Π |support_i|, saturating at UINT64_MAX.
  std::uint64_t outcome_count() const;
};

struct InstanceStats {
  HermitianMatrix expected_sum;
  Rational eps;
  bool sum_leq_identity = false;
};

InstanceStats instance_stats(const Instance& inst);

inline constexpr std::uint64_t kDefaultOutcomeGuard = 1'000'000;

struct EnumerationOptions {
  std::uint64_t guard = kDefaultOutcomeGuard;
  unsigned threads = 1;
};

/// E det(xI - Σ v_i v_i^*) by weighting every joint outcome (lexicographic over
/// support indices). GuardExceeded when the outcome count is above the guard.
UniPoly expected_char_poly_enumeration(const Instance& inst, const EnumerationOptions& options = {});

/// The same polynomial through the mixed characteristic polynomial of the
/// expectations E v_i v_i^*.
UniPoly expected_char_poly_mixed(const Instance& inst);

/// Whether enumeration and the mixed characteristic polynomial agree exactly.
bool verify_determinant_identity(const Instance& inst, const EnumerationOptions& options = {});

}  // namespace interlace
