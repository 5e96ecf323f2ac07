#include "interlace/multilinear.hpp"

#include "interlace/elimination.hpp"
#include "interlace/roots.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <type_traits>
#include <unordered_map>

namespace interlace {

UniPoly MultilinearDetElement::coefficient(VarMask s) const {
  const auto it = terms.find(s);
  return it == terms.end() ? UniPoly() : it->second;
}

namespace {

template <class S>
S scalar_of(const ComplexRational& z) {
  if constexpr (std::is_same_v<S, Rational>)
    return z.re;
  else
    return z;
}

template <class S>
Matrix<S> convert(const HermitianMatrix& m) {
  Matrix<S> out(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = scalar_of<S>(m(r, c));
  return out;
}

/// Entry (r, c) is constant(r, c) + linear(r, c)·x + Σ_i vars[i](r, c)·z_i.
template <class S>
struct Pencil {
  Matrix<S> constant;
  Matrix<S> linear;
  std::vector<Matrix<S>> vars;
  std::size_t dim() const { return constant.dim(); }
};

template <class S>
using Terms = std::unordered_map<VarMask, Polynomial<S>>;

/// Connected components of the pencil's joint sparsity pattern; the pencil is
/// block diagonal after permuting indices into these groups.
template <class S>
std::vector<std::vector<std::size_t>> diagonal_blocks(const Pencil<S>& p) {
  const std::size_t n = p.dim();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const S zero{};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      bool coupled = p.constant(r, c) != zero || p.linear(r, c) != zero;
      for (const auto& v : p.vars)
        if (coupled) break;
        else coupled = v(r, c) != zero;
      if (coupled) parent[find(r)] = find(c);
    }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t root = find(k);
    if (block_of[root] == n) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(k);
  }
  return blocks;
}

/// Division-free determinant of the principal sub-pencil on `idx`: Laplace
/// expansion row by row, memoized over the set of columns already used.
template <class S>
Terms<S> block_determinant(const Pencil<S>& p, const std::vector<std::size_t>& idx) {
  const std::size_t k = idx.size();
  if (k > 24) fail(ErrorCode::GuardExceeded, "determinant block of size " + std::to_string(k) + " exceeds 24");
  const std::size_t states = std::size_t{1} << k;
  std::vector<Terms<S>> f(states);
  f[0].emplace(VarMask{0}, Polynomial<S>::constant(S(1)));
  const S zero{};
  for (std::size_t used = 0; used + 1 < states; ++used) {
    if (f[used].empty()) continue;
    const std::size_t row = idx[static_cast<std::size_t>(std::popcount(used))];
    for (std::size_t col = 0; col < k; ++col) {
      const std::size_t bit = std::size_t{1} << col;
      if (used & bit) continue;
      const std::size_t c = idx[col];
      // Inversions: used columns to the right of `col`.
      const bool negate = std::popcount(used >> (col + 1)) % 2 == 1;
      Terms<S>& target = f[used | bit];
      S constant = p.constant(row, c);
      S linear = p.linear(row, c);
      if (negate) {
        constant = -constant;
        linear = -linear;
      }
      if (constant != zero || linear != zero) {
        for (const auto& [mask, poly] : f[used]) {
          Polynomial<S>& t = target[mask];
          if (constant != zero) t.add_scaled(poly, constant, 0);
          if (linear != zero) t.add_scaled(poly, linear, 1);
        }
      }
      for (std::size_t i = 0; i < p.vars.size(); ++i) {
        S a = p.vars[i](row, c);
        if (a == zero) continue;
        if (negate) a = -a;
        const VarMask vbit = VarMask{1} << i;
        for (const auto& [mask, poly] : f[used]) {
          if (mask & vbit) continue;
          target[mask | vbit].add_scaled(poly, a, 0);
        }
      }
    }
    Terms<S>().swap(f[used]);
  }
  Terms<S> out;
  for (auto& [mask, poly] : f[states - 1])
    if (!poly.is_zero()) out.emplace(mask, std::move(poly));
  return out;
}

template <class S>
Terms<S> truncated_product(const Terms<S>& a, const Terms<S>& b) {
  Terms<S> out;
  for (const auto& [ma, pa] : a)
    for (const auto& [mb, pb] : b) {
      if (ma & mb) continue;
      out[ma | mb] += pa * pb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

template <class S>
Terms<S> full_determinant(const Pencil<S>& p) {
  Terms<S> acc;
  acc.emplace(VarMask{0}, Polynomial<S>::constant(S(1)));
  for (const auto& block : diagonal_blocks(p)) acc = truncated_product(acc, block_determinant(p, block));
  return acc;
}

template <class S>
void apply_signs(Terms<S>& t) {
  for (auto& [mask, poly] : t)
    if (std::popcount(mask) % 2 == 1) poly = -poly;
}

/// Σ over disjoint (S_1, ..., S_K) of Π_k (-1)^{|S_k|} coeff_{k, S_k}.
template <class S>
Polynomial<S> signed_disjoint_sum(const Pencil<S>& p) {
  const auto blocks = diagonal_blocks(p);
  const std::size_t m = p.vars.size();
  Terms<S> acc;
  acc.emplace(VarMask{0}, Polynomial<S>::constant(S(1)));
  for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
    Terms<S> det = block_determinant(p, blocks[b]);
    apply_signs(det);
    acc = truncated_product(acc, det);
  }
  Terms<S> last = block_determinant(p, blocks.back());
  apply_signs(last);
  Polynomial<S> total;
  if (m <= 12 && acc.size() > 1) {
    // Subset-sum (zeta) transform of the last block, then one pass over acc.
    const std::size_t full = std::size_t{1} << m;
    std::vector<Polynomial<S>> zeta(full);
    for (auto& [mask, poly] : last) zeta[mask] = poly;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t mask = 0; mask < full; ++mask)
        if (mask & (std::size_t{1} << i)) zeta[mask] += zeta[mask ^ (std::size_t{1} << i)];
    for (const auto& [mask, poly] : acc) total += poly * zeta[(full - 1) & ~static_cast<std::size_t>(mask)];
  } else {
    for (const auto& [ma, pa] : acc)
      for (const auto& [mb, pb] : last)
        if (!(ma & mb)) total += pa * pb;
  }
  return total;
}

template <class S>
Pencil<S> make_pencil(const HermitianMatrix& constant, const HermitianMatrix& linear,
                      std::span<const HermitianMatrix> matrices) {
  Pencil<S> p{convert<S>(constant), convert<S>(linear), {}};
  p.vars.reserve(matrices.size());
  for (const auto& a : matrices) p.vars.push_back(convert<S>(a));
  return p;
}

bool all_real(const HermitianMatrix& a, const HermitianMatrix& b, std::span<const HermitianMatrix> ms) {
  if (!a.is_real() || !b.is_real()) return false;
  for (const auto& m : ms)
    if (!m.is_real()) return false;
  return true;
}

void validate_pencil(const HermitianMatrix& constant, const HermitianMatrix& linear,
                     std::span<const HermitianMatrix> matrices) {
  if (linear.dim() != constant.dim()) fail(ErrorCode::DimensionMismatch, "pencil: constant and linear parts differ in size");
  require_same_dim(matrices, constant.dim());
  if (matrices.size() > kMaxVariables)
    fail(ErrorCode::GuardExceeded, "truncated algebra supports at most " + std::to_string(kMaxVariables) +
                                       " variables, got " + std::to_string(matrices.size()));
}

UniPoly check_mixed_char(UniPoly mu, std::size_t dim) {
  if (!mu.is_monic() || mu.degree() != static_cast<int>(dim))
    fail(ErrorCode::InternalInvariant, "mixed characteristic polynomial " + to_string(mu) + " is not monic of degree " +
                                           std::to_string(dim));
  if (!is_real_rooted(mu))
    fail(ErrorCode::MixedCharNotRealRooted, "mixed characteristic polynomial " + to_string(mu) + " is not real-rooted");
  return mu;
}

}  // namespace

MultilinearDetElement pencil_determinant(const HermitianMatrix& constant, const HermitianMatrix& linear,
                                         std::span<const HermitianMatrix> matrices) {
  validate_pencil(constant, linear, matrices);
  MultilinearDetElement e;
  e.dim = constant.dim();
  e.num_vars = matrices.size();
  if (all_real(constant, linear, matrices)) {
    for (auto& [mask, poly] : full_determinant(make_pencil<Rational>(constant, linear, matrices)))
      e.terms.emplace(mask, std::move(poly));
  } else {
    for (auto& [mask, poly] : full_determinant(make_pencil<ComplexRational>(constant, linear, matrices)))
      e.terms.emplace(mask, real_part_checked(poly, "truncated determinant"));
  }
  return e;
}

MultilinearDetElement truncated_determinant(const HermitianMatrix& base, std::span<const HermitianMatrix> matrices) {
  HermitianMatrix negated = base;
  negated *= Rational(-1);
  return pencil_determinant(negated, HermitianMatrix::identity(base.dim()), matrices);
}

MultilinearDetElement truncated_determinant(std::span<const HermitianMatrix> matrices) {
  if (matrices.empty()) fail(ErrorCode::InvalidArgument, "truncated_determinant: dimension unknown without matrices");
  return truncated_determinant(HermitianMatrix::zero(matrices.front().dim()), matrices);
}

MixedCharResult apply_one_minus_partials(const MultilinearDetElement& e, bool keep_terms) {
  UniPoly mu;
  for (const auto& [mask, poly] : e.terms) {
    if (std::popcount(mask) % 2 == 0)
      mu += poly;
    else
      mu -= poly;
  }
  MixedCharResult out{check_mixed_char(std::move(mu), e.dim), std::nullopt};
  if (keep_terms) out.subset_terms = e;
  return out;
}

UniPoly mixed_char_poly(const HermitianMatrix& base, std::span<const HermitianMatrix> matrices) {
  HermitianMatrix negated = base;
  negated *= Rational(-1);
  const HermitianMatrix identity = HermitianMatrix::identity(base.dim());
  validate_pencil(negated, identity, matrices);
  UniPoly mu;
  if (base.dim() == 0) {
    mu = UniPoly::constant(Rational(1));
  } else if (all_real(negated, identity, matrices)) {
    mu = signed_disjoint_sum(make_pencil<Rational>(negated, identity, matrices));
  } else {
    mu = real_part_checked(signed_disjoint_sum(make_pencil<ComplexRational>(negated, identity, matrices)),
                           "mixed characteristic polynomial");
  }
  return check_mixed_char(std::move(mu), base.dim());
}

UniPoly mixed_char_poly(std::span<const HermitianMatrix> matrices) {
  if (matrices.empty()) fail(ErrorCode::InvalidArgument, "mixed_char_poly: dimension unknown without matrices");
  return mixed_char_poly(HermitianMatrix::zero(matrices.front().dim()), matrices);
}

UniPoly mixed_char_injection_oracle(std::span<const HermitianMatrix> matrices) {
  if (matrices.empty()) fail(ErrorCode::InvalidArgument, "injection oracle: dimension unknown without matrices");
  return mixed_char_injection_oracle(matrices.front().dim(), matrices);
}

UniPoly mixed_char_injection_oracle(std::size_t d, std::span<const HermitianMatrix> matrices) {
  const std::size_t m = matrices.size();
  require_same_dim(matrices, d);
  if (d > kOracleMaxDim || m > kOracleMaxVars)
    fail(ErrorCode::GuardExceeded, "injection oracle is limited to d <= 6 and m <= 8 (got d = " + std::to_string(d) +
                                       ", m = " + std::to_string(m) + ")");
  std::vector<Rational> mu(d + 1);
  for (VarMask s = 0; s < (VarMask{1} << m); ++s) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < m; ++i)
      if (s & (VarMask{1} << i)) vars.push_back(i);
    const std::size_t k = vars.size();
    if (k > d) continue;
    // Enumerate injections vars -> columns; columns outside the image keep
    // x·e_j and contribute x^(d-k) with a +1 cofactor sign.
    ComplexRational coeff;
    std::vector<std::size_t> image(k);
    std::vector<bool> taken(d, false);
    auto visit = [&](auto&& self, std::size_t depth) -> void {
      if (depth == k) {
        std::vector<std::size_t> rows(image);
        std::sort(rows.begin(), rows.end());
        Matrix<ComplexRational> minor(k);
        for (std::size_t t = 0; t < k; ++t) {
          const std::size_t col = rows[t];
          const std::size_t owner = static_cast<std::size_t>(std::find(image.begin(), image.end(), col) - image.begin());
          for (std::size_t r = 0; r < k; ++r) minor(r, t) = matrices[vars[owner]](rows[r], col);
        }
        coeff += determinant<Rational>(std::move(minor));
        return;
      }
      for (std::size_t col = 0; col < d; ++col) {
        if (taken[col]) continue;
        taken[col] = true;
        image[depth] = col;
        self(self, depth + 1);
        taken[col] = false;
      }
    };
    visit(visit, 0);
    if (!coeff.is_real()) fail(ErrorCode::InternalInvariant, "injection oracle: complex subset coefficient");
    if (k % 2 == 0)
      mu[d - k] += coeff.re;
    else
      mu[d - k] -= coeff.re;
  }
  return UniPoly(std::move(mu));
}

}  // namespace interlace
