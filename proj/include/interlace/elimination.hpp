#pragma once

// Exact Gaussian elimination over Complex<F> for an exact ordered field F.
// F needs the field operations, comparison with 0, and an ADL-visible sgn().

#include "interlace/complex.hpp"
#include "interlace/error.hpp"
#include "interlace/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace interlace {

enum class Definiteness { Indefinite, Semidefinite, Definite };

/// Pivoted LDL^T on a Hermitian matrix. Pivots are taken on the first positive
/// remaining diagonal; a negative diagonal, or an all-zero remaining diagonal
/// with a nonzero off-diagonal residual, means the matrix is not PSD.
template <class F>
Definiteness classify_hermitian(Matrix<Complex<F>> a) {
  const std::size_t n = a.dim();
  std::vector<bool> eliminated(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t k = 0; k < n; ++k) {
      if (eliminated[k]) continue;
      const int s = sgn(a(k, k).re);
      if (s < 0) return Definiteness::Indefinite;
      if (s > 0 && !pivot) pivot = k;
    }
    if (!pivot) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!eliminated[j] && !eliminated[k] && !a(j, k).is_zero()) return Definiteness::Indefinite;
      return Definiteness::Semidefinite;
    }
    const std::size_t p = *pivot;
    const F pivot_value = a(p, p).re;
    for (std::size_t j = 0; j < n; ++j) {
      if (eliminated[j] || j == p || a(j, p).is_zero()) continue;
      Complex<F> factor = a(j, p);
      factor.re /= pivot_value;
      factor.im /= pivot_value;
      for (std::size_t k = 0; k < n; ++k) {
        if (eliminated[k] || k == p) continue;
        a(j, k) -= factor * a(p, k);
      }
    }
    eliminated[p] = true;
  }
  return Definiteness::Definite;
}

/// Solves A X = B for square nonsingular A; columns of B are right-hand sides.
/// Throws InternalInvariant when A is singular.
template <class F>
Matrix<Complex<F>> solve(Matrix<Complex<F>> a, Matrix<Complex<F>> b) {
  const std::size_t n = a.dim();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) fail(ErrorCode::InternalInvariant, "solve: singular system");
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(col, k));
        std::swap(b(pivot, k), b(col, k));
      }
    }
    const Complex<F> inv = Complex<F>(F(1)) / a(col, col);
    for (std::size_t k = 0; k < n; ++k) {
      a(col, k) *= inv;
      b(col, k) *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Complex<F> factor = a(r, col);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= factor * a(col, k);
        b(r, k) -= factor * b(col, k);
      }
    }
  }
  return b;
}

/// det(A) by elimination over the field.
template <class F>
Complex<F> determinant(Matrix<Complex<F>> a) {
  const std::size_t n = a.dim();
  Complex<F> det(F(1));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Complex<F>();
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(pivot, k), a(col, k));
      det = -det;
    }
    det *= a(col, col);
    const Complex<F> inv = Complex<F>(F(1)) / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Complex<F> factor = a(r, col) * inv;
      for (std::size_t k = col; k < n; ++k) a(r, k) -= factor * a(col, k);
    }
  }
  return det;
}

}  // namespace interlace
