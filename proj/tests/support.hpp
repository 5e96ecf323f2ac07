#pragma once
// Shared fixtures and random generators for the test binaries.

#include "interlace/expectation.hpp"
#include "interlace/matrix.hpp"
#include "interlace/roots.hpp"

#include <random>
#include <vector>

namespace interlace::testing {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  /// p/q with |p| <= bound and 1 <= q <= bound.
  Rational rational(long bound = 8) {
    Rational r(integer(-bound, bound), integer(1, bound));
    r.canonicalize();
    return r;
  }
  Rational positive_rational(long bound = 8) {
    Rational r(integer(1, bound), integer(1, bound));
    r.canonicalize();
    return r;
  }

  VectorC vector(std::size_t dim, bool complex_entries) {
    std::vector<ComplexRational> entries(dim);
    for (auto& e : entries) {
      e.re = rational();
      if (complex_entries && coin()) e.im = rational();
    }
    return VectorC(std::move(entries));
  }

  /// Random Hermitian matrix with rational entries.
  HermitianMatrix hermitian(std::size_t dim, bool complex_entries) {
    HermitianMatrix m = HermitianMatrix::zero(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = r; c < dim; ++c) {
        ComplexRational z(rational());
        if (r != c && complex_entries && coin()) z.im = rational();
        m.set(r, c, z);
      }
    }
    return m;
  }

  /// PSD of rank <= dim, as a sum of up to `dim` outer products.
  HermitianMatrix psd(std::size_t dim, bool complex_entries) {
    HermitianMatrix m = HermitianMatrix::zero(dim);
    const std::size_t terms = index(1, dim);
    for (std::size_t k = 0; k < terms; ++k) m += outer_product(vector(dim, complex_entries));
    return m;
  }

  /// Probabilities p_1..p_n > 0 with Σ p = 1 exactly.
  std::vector<Rational> probabilities(std::size_t n) {
    std::vector<Rational> w(n);
    Rational total;
    for (auto& x : w) {
      x = integer(1, 8);
      total += x;
    }
    for (auto& x : w) x /= total;
    return w;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Rational upper bound on the largest eigenvalue of a PSD matrix.
inline Rational lambda_max_upper(const HermitianMatrix& m) {
  if (m.is_zero()) return 0;
  return largest_root(char_poly(m), q(1, 1024)).hi;
}

/// Scales a PSD tuple so that Σ A_i ⪯ I and Tr A_i <= eps, both verified exactly.
inline void scale_tuple(std::vector<HermitianMatrix>& matrices, std::size_t dim, const Rational& eps) {
  const HermitianMatrix total = sum(matrices, dim);
  Rational factor = 1;
  const Rational lambda = lambda_max_upper(total);
  if (lambda > 1) factor = 1 / lambda;
  for (const auto& a : matrices) {
    const Rational t = a.trace() * factor;
    if (t > eps) factor *= eps / t;
  }
  for (auto& a : matrices) a *= factor;
}

/// Random instance; with `valid` the vectors are rescaled by c with
/// c² <= 1/λ_max(E Σ v v^*) so that E Σ v v^* ⪯ I.
inline Instance random_instance(Generator& g, std::size_t dim, std::size_t m, std::size_t max_support,
                                bool complex_entries, bool valid) {
  Instance inst;
  inst.dim = dim;
  for (std::size_t i = 0; i < m; ++i) {
    RandomVectorSpec spec;
    const std::size_t n = g.index(1, max_support);
    const auto probs = g.probabilities(n);
    for (std::size_t s = 0; s < n; ++s) spec.support.push_back(SupportPoint::from_vector(probs[s], g.vector(dim, complex_entries)));
    inst.specs.push_back(std::move(spec));
  }
  if (!valid) return inst;
  const Rational lambda = lambda_max_upper(instance_stats(inst).expected_sum);
  if (lambda <= 1) return inst;
  const Rational c = 1 / sqrt_upper(lambda, q(1, 64));
  Instance scaled;
  scaled.dim = dim;
  for (const auto& spec : inst.specs) {
    RandomVectorSpec s;
    for (const auto& p : spec.support) s.support.push_back(SupportPoint::from_vector(p.prob, p.vector->scaled(c)));
    scaled.specs.push_back(std::move(s));
  }
  return scaled;
}

}  // namespace interlace::testing
