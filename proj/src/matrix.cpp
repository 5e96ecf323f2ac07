#include "interlace/matrix.hpp"

#include "interlace/elimination.hpp"
#include "interlace/roots.hpp"

#include <string>

namespace interlace {

VectorC::VectorC(std::vector<ComplexRational> entries) : entries_(std::move(entries)) {}

VectorC VectorC::real(std::initializer_list<Rational> entries) {
  std::vector<ComplexRational> v;
  v.reserve(entries.size());
  for (const auto& e : entries) v.emplace_back(e);
  return VectorC(std::move(v));
}

VectorC VectorC::basis(std::size_t dim, std::size_t index) {
  std::vector<ComplexRational> v(dim);
  v.at(index) = ComplexRational(Rational(1));
  return VectorC(std::move(v));
}

Rational VectorC::norm2() const {
  Rational s;
  for (const auto& e : entries_) s += e.norm2();
  return s;
}

VectorC VectorC::scaled(const Rational& factor) const {
  std::vector<ComplexRational> v = entries_;
  for (auto& e : v) e *= ComplexRational(factor);
  return VectorC(std::move(v));
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) { return HermitianMatrix(Matrix<ComplexRational>(dim)); }

HermitianMatrix HermitianMatrix::identity(std::size_t dim) {
  Matrix<ComplexRational> m(dim);
  for (std::size_t k = 0; k < dim; ++k) m(k, k) = ComplexRational(Rational(1));
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::from_matrix(Matrix<ComplexRational> entries) {
  const std::size_t n = entries.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      if (entries(r, c) != entries(c, r).conj())
        fail(ErrorCode::InvalidArgument, "matrix is not Hermitian at (" + std::to_string(r) + ", " +
                                             std::to_string(c) + ")");
  return HermitianMatrix(std::move(entries));
}

HermitianMatrix HermitianMatrix::real(std::initializer_list<std::initializer_list<Rational>> rows) {
  Matrix<ComplexRational> m(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) fail(ErrorCode::DimensionMismatch, "matrix rows must be square");
    std::size_t c = 0;
    for (const auto& v : row) m(r, c++) = ComplexRational(v);
    ++r;
  }
  return from_matrix(std::move(m));
}

void HermitianMatrix::set(std::size_t r, std::size_t c, const ComplexRational& value) {
  if (r == c && !value.is_real()) fail(ErrorCode::InvalidArgument, "Hermitian diagonal must be real");
  m_(r, c) = value;
  m_(c, r) = value.conj();
}

Rational HermitianMatrix::trace() const {
  Rational t;
  for (std::size_t k = 0; k < dim(); ++k) t += m_(k, k).re;
  return t;
}

bool HermitianMatrix::is_real() const {
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      if (!m_(r, c).is_real()) return false;
  return true;
}

bool HermitianMatrix::is_zero() const {
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      if (!m_(r, c).is_zero()) return false;
  return true;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& o) {
  if (o.dim() != dim()) fail(ErrorCode::DimensionMismatch, "matrix sum: dimension mismatch");
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) m_(r, c) += o.m_(r, c);
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& o) {
  if (o.dim() != dim()) fail(ErrorCode::DimensionMismatch, "matrix difference: dimension mismatch");
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) m_(r, c) -= o.m_(r, c);
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(const Rational& s) {
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c) {
      m_(r, c).re *= s;
      m_(r, c).im *= s;
    }
  return *this;
}

HermitianMatrix outer_product(const VectorC& v) {
  const std::size_t n = v.dim();
  Matrix<ComplexRational> m(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = v[j] * v[k].conj();
  return HermitianMatrix::from_matrix(std::move(m));
}

bool is_psd(const HermitianMatrix& m) {
  return classify_hermitian<Rational>(m.entries()) != Definiteness::Indefinite;
}

bool is_pd(const HermitianMatrix& m) {
  return classify_hermitian<Rational>(m.entries()) == Definiteness::Definite;
}

bool loewner_leq(const HermitianMatrix& m, const HermitianMatrix& n) {
  if (m.dim() != n.dim())
    fail(ErrorCode::DimensionMismatch, "loewner_leq: dimensions " + std::to_string(m.dim()) + " and " +
                                           std::to_string(n.dim()));
  return is_psd(n - m);
}

bool is_rank_at_most_one(const HermitianMatrix& m) {
  // rank <= 1 iff every 2x2 minor vanishes.
  const std::size_t n = m.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (m(a, c) * m(b, d) != m(a, d) * m(b, c)) return false;
  return true;
}

Rational trace_of_product(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.dim() != y.dim()) fail(ErrorCode::DimensionMismatch, "trace_of_product: dimension mismatch");
  ComplexRational t;
  for (std::size_t j = 0; j < x.dim(); ++j)
    for (std::size_t k = 0; k < x.dim(); ++k) t += x(j, k) * y(k, j);
  if (!t.is_real()) fail(ErrorCode::InternalInvariant, "trace of a product of Hermitian matrices is not real");
  return t.re;
}

bool trace_product_bound_holds(const HermitianMatrix& x, const HermitianMatrix& y, const Rational& norm_x_upper) {
  if (!is_psd(x)) fail(ErrorCode::NotPsd, "trace_product_bound_holds: X is not PSD");
  if (!is_psd(y)) fail(ErrorCode::NotPsd, "trace_product_bound_holds: Y is not PSD");
  return trace_of_product(x, y) <= norm_x_upper * y.trace();
}

Rational operator_norm(const HermitianMatrix& m, const Rational& tol) {
  if (m.dim() == 0) return Rational(0);
  RootBracket b = largest_root(char_poly(m), tol);
  return b.midpoint();
}

HermitianMatrix sum(std::span<const HermitianMatrix> matrices, std::size_t dim) {
  HermitianMatrix s = HermitianMatrix::zero(dim);
  for (const auto& a : matrices) s += a;
  return s;
}

void require_same_dim(std::span<const HermitianMatrix> matrices, std::size_t dim) {
  for (std::size_t i = 0; i < matrices.size(); ++i)
    if (matrices[i].dim() != dim)
      fail(ErrorCode::DimensionMismatch, "matrix " + std::to_string(i + 1) + " has dimension " +
                                             std::to_string(matrices[i].dim()) + ", expected " +
                                             std::to_string(dim));
}

}  // namespace interlace
