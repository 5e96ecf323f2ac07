#pragma once

#include "interlace/matrix.hpp"
#include "interlace/polynomial.hpp"

#include <compare>
#include <memory>
#include <span>
#include <vector>

namespace interlace {

/// det(xI - M), computed with Berkowitz's division-free recursion. The result
/// is monic of degree dim(M) with real coefficients.
UniPoly char_poly(const HermitianMatrix& m);

/// Sturm chain p, p', -rem(...), ... with each member scaled to leading
/// coefficient ±1 (positive scaling preserves sign variations).
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);

  /// Sign variations at a rational point, zeros skipped.
  int variations(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  /// Distinct real roots in (lo, hi] (the chain's first member must be squarefree).
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }
  int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }
  const std::vector<UniPoly>& chain() const { return chain_; }

 private:
  std::vector<UniPoly> chain_;
};

/// True iff every complex root of p is real. Throws InvalidArgument on zero p.
bool is_real_rooted(const UniPoly& p);

/// (lo, hi] holds exactly one distinct real root of `poly`, the largest one.
struct RootBracket {
  Rational lo;
  Rational hi;
  UniPoly poly;
  /// Squarefree part and its Sturm chain, shared between copies.
  std::shared_ptr<const UniPoly> squarefree;
  std::shared_ptr<const SturmSequence> sturm;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  /// Halves the bracket until its width is <= width.
  void refine(const Rational& width);
};

/// Bracket around the largest real root, of width <= `width`, by Sturm-count
/// bisection from a power-of-two Cauchy bound. Requires deg p >= 1 and p
/// real-rooted (NotRealRooted otherwise).
RootBracket largest_root(const UniPoly& p, const Rational& width);

/// Exact comparison of the bracketed roots: brackets are refined until they
/// separate, and equality is decided by a common root of both squarefree
/// parts inside the overlap.
std::strong_ordering compare_roots(RootBracket& a, RootBracket& b);

/// Whether the bracketed root is <= value (exact).
bool root_at_most(RootBracket& b, const Rational& value);

/// x0 is above the roots of monic real-rooted p: p and all its derivatives are
/// strictly positive at x0. Throws InvalidArgument for non-monic p.
bool is_above_roots_1d(const UniPoly& p, const Rational& x0);

/// min over children of the largest root <= largest root of Σ weights·children
/// + width. Children must be monic, of equal degree and real-rooted; weights
/// positive and summing to one. A mixture that is not real-rooted raises
/// InterlacingViolation.
bool check_common_interlacing_consequence(std::span<const UniPoly> children,
                                          std::span<const Rational> weights,
                                          const Rational& width);

}  // namespace interlace
