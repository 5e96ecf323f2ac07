#include "interlace/roots.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace interlace {

UniPoly char_poly(const HermitianMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return UniPoly::constant(Rational(1));
  const auto& a = m.entries();
  // Berkowitz: coefficients of det(xI - A_r) for the leading r x r blocks,
  // highest degree first.
  std::vector<ComplexRational> vect{ComplexRational(Rational(1)), -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<ComplexRational> toeplitz(r + 2);
    toeplitz[0] = ComplexRational(Rational(1));
    toeplitz[1] = -a(r, r);
    std::vector<ComplexRational> x(r);
    for (std::size_t k = 0; k < r; ++k) x[k] = a(k, r);
    for (std::size_t k = 0; k < r; ++k) {
      ComplexRational dot;
      for (std::size_t j = 0; j < r; ++j) dot += a(r, j) * x[j];
      toeplitz[k + 2] = -dot;
      if (k + 1 == r) break;
      std::vector<ComplexRational> next(r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += a(i, j) * x[j];
      x = std::move(next);
    }
    std::vector<ComplexRational> updated(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) updated[i] += toeplitz[i - j] * vect[j];
    vect = std::move(updated);
  }
  std::reverse(vect.begin(), vect.end());
  return real_part_checked(ComplexPoly(std::move(vect)), "char_poly");
}

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "Sturm sequence of the zero polynomial");
  auto normalized = [](UniPoly q) { return q.is_zero() ? q : q * Rational(1 / abs(q.leading())); };
  chain_.push_back(normalized(p));
  UniPoly next = normalized(p.derivative());
  while (!next.is_zero()) {
    chain_.push_back(next);
    const auto& prev = chain_[chain_.size() - 2];
    next = normalized(-divmod(prev, chain_.back()).second);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sgn(q.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::variations_at_pos_inf() const {
  int changes = 0, last = 0;
  for (const auto& q : chain_) {
    const int s = sgn(q.leading());
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::variations_at_neg_inf() const {
  int changes = 0, last = 0;
  for (const auto& q : chain_) {
    const int s = sgn(q.leading()) * (q.degree() % 2 == 0 ? 1 : -1);
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

bool is_real_rooted(const UniPoly& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "is_real_rooted: zero polynomial");
  const UniPoly q = squarefree_part(p);
  if (q.degree() == 0) return true;
  return SturmSequence(q).count_all() == q.degree();
}

void RootBracket::refine(const Rational& target) {
  while (hi - lo > target) {
    const Rational mid = midpoint();
    if (sturm->count(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
}

RootBracket largest_root(const UniPoly& p, const Rational& width) {
  if (p.degree() < 1) fail(ErrorCode::InvalidArgument, "largest_root: polynomial of degree " + std::to_string(p.degree()));
  if (sgn(width) <= 0) fail(ErrorCode::InvalidArgument, "largest_root: width must be positive");
  if (!is_real_rooted(p)) fail(ErrorCode::NotRealRooted, "largest_root: " + to_string(p) + " is not real-rooted");
  RootBracket b;
  b.poly = p;
  b.squarefree = std::make_shared<const UniPoly>(squarefree_part(p));
  b.sturm = std::make_shared<const SturmSequence>(*b.squarefree);

  const UniPoly& q = *b.squarefree;
  Rational bound(1);
  for (int k = 0; k < q.degree(); ++k) bound = std::max(bound, Rational(abs(q.coeffs()[static_cast<std::size_t>(k)] / q.leading())));
  bound += 1;
  int e = 0;
  while (pow2(e) < bound) ++e;
  b.hi = pow2(e);
  b.lo = -b.hi;

  int v_lo = b.sturm->variations(b.lo);
  const int v_hi = b.sturm->variations(b.hi);
  while (b.hi - b.lo > width || v_lo - v_hi != 1) {
    const Rational mid = b.midpoint();
    const int v_mid = b.sturm->variations(mid);
    if (v_mid - v_hi >= 1) {
      b.lo = mid;
      v_lo = v_mid;
    } else {
      b.hi = mid;
    }
  }
  return b;
}

std::strong_ordering compare_roots(RootBracket& a, RootBracket& b) {
  const UniPoly common = gcd(*a.squarefree, *b.squarefree);
  std::optional<SturmSequence> common_sturm;
  if (common.degree() >= 1) common_sturm.emplace(common);
  for (;;) {
    if (a.hi <= b.lo) return std::strong_ordering::less;
    if (b.hi <= a.lo) return std::strong_ordering::greater;
    const Rational lo = std::max(a.lo, b.lo);
    const Rational hi = std::min(a.hi, b.hi);
    if (common_sturm && common_sturm->count(lo, hi) >= 1) return std::strong_ordering::equal;
    a.refine(a.width() / 2);
    b.refine(b.width() / 2);
  }
}

bool root_at_most(RootBracket& b, const Rational& value) {
  if (b.hi <= value) return true;
  if (b.lo >= value) return false;
  return b.sturm->count(value, b.hi) == 0;
}

bool is_above_roots_1d(const UniPoly& p, const Rational& x0) {
  if (!p.is_monic()) fail(ErrorCode::InvalidArgument, "is_above_roots_1d: polynomial must be monic");
  for (UniPoly q = p; !q.is_zero(); q = q.derivative())
    if (sgn(q.evaluate(x0)) <= 0) return false;
  return true;
}

bool check_common_interlacing_consequence(std::span<const UniPoly> children, std::span<const Rational> weights,
                                          const Rational& width) {
  if (children.empty() || children.size() != weights.size())
    fail(ErrorCode::InvalidArgument, "interlacing check: need one positive weight per child");
  Rational total;
  for (const auto& w : weights) {
    if (sgn(w) <= 0) fail(ErrorCode::InvalidArgument, "interlacing check: weights must be positive");
    total += w;
  }
  if (total != 1) fail(ErrorCode::InvalidArgument, "interlacing check: weights sum to " + to_string(total));
  const int degree = children.front().degree();
  UniPoly mixture;
  for (std::size_t k = 0; k < children.size(); ++k) {
    const auto& c = children[k];
    if (!c.is_monic() || c.degree() != degree || degree < 1 || !is_real_rooted(c))
      fail(ErrorCode::InvalidArgument, "interlacing check: child " + std::to_string(k) +
                                           " must be monic, real-rooted and of common degree >= 1");
    mixture.add_scaled(c, weights[k]);
  }
  if (!is_real_rooted(mixture))
    fail(ErrorCode::InterlacingViolation, "mixture " + to_string(mixture) + " is not real-rooted");
  RootBracket mix = largest_root(mixture, width / 4);
  std::vector<RootBracket> roots;
  for (const auto& c : children) {
    roots.push_back(largest_root(c, width / 4));
    if (compare_roots(roots.back(), mix) != std::strong_ordering::greater) return true;
  }
  for (auto& r : roots) {
    r.refine(width / 4);
    mix.refine(width / 4);
    if (r.hi <= mix.lo + width) return true;
  }
  return false;
}

}  // namespace interlace
