#pragma once

#include "interlace/matrix.hpp"
#include "interlace/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>

namespace interlace {

/// Subset of {z_1..z_m} as a bitmask; bit i stands for z_{i+1}.
using VarMask = std::uint32_t;
inline constexpr std::size_t kMaxVariables = 24;

/// Element of Q[x][z_1..z_m]/(z_1^2, ..., z_m^2): each squarefree monomial
/// z_S carries a polynomial in x. Absent masks are zero coefficients.
struct MultilinearDetElement {
  std::size_t dim = 0;
  std::size_t num_vars = 0;
  std::map<VarMask, UniPoly> terms;

  UniPoly coefficient(VarMask s) const;
};

struct MixedCharResult {
  UniPoly mu;
  std::optional<MultilinearDetElement> subset_terms;
};

/// det(xI + Σ z_i A_i) in the truncated algebra.
MultilinearDetElement truncated_determinant(std::span<const HermitianMatrix> matrices);

/// det(xI - base + Σ z_i A_i); `base` holds terms already fixed to a value.
MultilinearDetElement truncated_determinant(const HermitianMatrix& base,
                                            std::span<const HermitianMatrix> matrices);

/// det(constant + x·linear + Σ z_i A_i) for an arbitrary Hermitian pencil; the
/// formal variable x need not carry the identity.
MultilinearDetElement pencil_determinant(const HermitianMatrix& constant, const HermitianMatrix& linear,
                                         std::span<const HermitianMatrix> matrices);

/// mu(x) = Σ_S (-1)^{|S|} coeff_S(x). Checks that mu is monic of degree d and
/// real-rooted (MixedCharNotRealRooted otherwise).
MixedCharResult apply_one_minus_partials(const MultilinearDetElement& e, bool keep_terms = false);

/// Π(1 - ∂_{z_i}) det(xI - base + Σ z_i A_i) at z = 0, without materializing
/// every subset term of the full product: blocks of a block-diagonal pencil are
/// expanded separately and folded together with the signs applied.
UniPoly mixed_char_poly(std::span<const HermitianMatrix> matrices);
UniPoly mixed_char_poly(const HermitianMatrix& base, std::span<const HermitianMatrix> matrices);

/// Independent oracle: for every S, sums over injections of S into columns the
/// determinant with column φ(i) of xI replaced by column φ(i) of A_i. Limited to
/// d <= 6 and m <= 8 (GuardExceeded beyond).
UniPoly mixed_char_injection_oracle(std::span<const HermitianMatrix> matrices);
/// Same, with the dimension given so that m = 0 yields x^d.
UniPoly mixed_char_injection_oracle(std::size_t dim, std::span<const HermitianMatrix> matrices);

inline constexpr std::size_t kOracleMaxDim = 6;
inline constexpr std::size_t kOracleMaxVars = 8;

}  // namespace interlace
