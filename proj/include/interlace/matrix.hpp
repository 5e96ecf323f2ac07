#pragma once

#include "interlace/complex.hpp"
#include "interlace/error.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace interlace {

/// Dense row-major square matrix over any scalar; used for intermediate work
/// (pencils, elimination) where the Hermitian invariant is not maintained.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

class VectorC {
 public:
  VectorC() = default;
  explicit VectorC(std::vector<ComplexRational> entries);
  /// Real entries only.
  static VectorC real(std::initializer_list<Rational> entries);
  static VectorC basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  const ComplexRational& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<ComplexRational>& entries() const { return entries_; }

  /// ‖v‖² as an exact rational.
  Rational norm2() const;
  VectorC scaled(const Rational& factor) const;

  friend bool operator==(const VectorC&, const VectorC&) = default;

 private:
  std::vector<ComplexRational> entries_;
};

class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  static HermitianMatrix zero(std::size_t dim);
  static HermitianMatrix identity(std::size_t dim);
  /// Validates conjugate symmetry; throws InvalidArgument otherwise.
  static HermitianMatrix from_matrix(Matrix<ComplexRational> entries);
  /// Real symmetric matrix from rows.
  static HermitianMatrix real(std::initializer_list<std::initializer_list<Rational>> rows);

  std::size_t dim() const { return m_.dim(); }
  const ComplexRational& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const Matrix<ComplexRational>& entries() const { return m_; }

  /// Writes (r, c) and the mirrored entry; a diagonal value must be real.
  void set(std::size_t r, std::size_t c, const ComplexRational& value);

  Rational trace() const;
  bool is_real() const;
  bool is_zero() const;

  HermitianMatrix& operator+=(const HermitianMatrix& o);
  HermitianMatrix& operator-=(const HermitianMatrix& o);
  HermitianMatrix& operator*=(const Rational& s);
  friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
  friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
  friend HermitianMatrix operator*(const Rational& s, HermitianMatrix a) { return a *= s; }
  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  explicit HermitianMatrix(Matrix<ComplexRational> m) : m_(std::move(m)) {}
  Matrix<ComplexRational> m_;
};

/// v v^*.
HermitianMatrix outer_product(const VectorC& v);

/// Exact PSD decision by pivoted LDL^T.
bool is_psd(const HermitianMatrix& m);
/// Exact positive-definiteness (all n pivots strictly positive).
bool is_pd(const HermitianMatrix& m);
/// M ⪯ N, i.e. N - M is PSD.
bool loewner_leq(const HermitianMatrix& m, const HermitianMatrix& n);

/// Whether rank(m) <= 1 (all 2x2 principal minors and cross terms vanish).
bool is_rank_at_most_one(const HermitianMatrix& m);

/// Tr(XY), real for Hermitian X and Y.
Rational trace_of_product(const HermitianMatrix& x, const HermitianMatrix& y);

/// Tr(XY) <= norm_x_upper * Tr(Y) for PSD X, Y. Throws NotPsd on non-PSD input.
bool trace_product_bound_holds(const HermitianMatrix& x, const HermitianMatrix& y,
                               const Rational& norm_x_upper);

/// Largest eigenvalue, via the characteristic polynomial's largest root;
/// the returned midpoint is within `tol` of the true value.
Rational operator_norm(const HermitianMatrix& m, const Rational& tol);

/// Σ matrices; all must share `dim`.
HermitianMatrix sum(std::span<const HermitianMatrix> matrices, std::size_t dim);

void require_same_dim(std::span<const HermitianMatrix> matrices, std::size_t dim);

}  // namespace interlace
