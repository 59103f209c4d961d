#pragma once

// Seeded generators and independent oracles shared by the unit tests.

#include "bihamil/matrix.hpp"
#include "bihamil/pencil.hpp"
#include "bihamil/poly.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testsupport {

using bihamil::GaussianRational;
using bihamil::Matrix;
using bihamil::Rational;
using bihamil::Vec;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }
  bool coin() { return rng_() & 1u; }

  Rational rational(long height) {
    long num = integer(-height, height);
    long den = integer(1, height);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  GaussianRational gaussian(long height) { return {rational(height), rational(height)}; }
  GaussianRational small_int(long height) { return {Rational(integer(-height, height)), Rational(0)}; }

  Matrix matrix(std::size_t r, std::size_t c, long height, double zero_bias = 0.3) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (static_cast<double>(rng_() % 1000) / 1000.0 >= zero_bias) m(i, j) = gaussian(height);
    return m;
  }
  Matrix skew(std::size_t n, long height) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = gaussian(height);
        m(j, i) = -m(i, j);
      }
    return m;
  }
  /// Product of a matrix of low rank: rank at most r.
  Matrix low_rank(std::size_t rows, std::size_t cols, std::size_t r, long height) {
    return matrix(rows, r, height, 0.0) * matrix(r, cols, height, 0.0);
  }
  /// Unimodular integer matrix (product of elementary operations).
  Matrix invertible(std::size_t n, long height) {
    Matrix g = Matrix::identity(n);
    for (std::size_t step = 0; step < 3 * n; ++step) {
      std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      if (i == j) continue;
      GaussianRational f = small_int(height);
      for (std::size_t c = 0; c < n; ++c) g(i, c) += f * g(j, c);
    }
    return g;
  }
  bihamil::MultiPoly poly(bihamil::VarLayout layout, unsigned max_degree, std::size_t terms, long height) {
    bihamil::MultiPoly p(layout);
    for (std::size_t t = 0; t < terms; ++t) {
      bihamil::Exponents e(layout.num_vars(), 0);
      unsigned deg = static_cast<unsigned>(integer(0, max_degree));
      for (unsigned d = 0; d < deg; ++d) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(layout.num_vars()) - 1))];
      p += bihamil::MultiPoly::monomial(layout, e, gaussian(height));
    }
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Plain Gauss-Jordan rank with field division at every step.
inline std::size_t oracle_rank(Matrix m) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(rank, k), m(piv, k));
    GaussianRational inv = m(rank, c).inverse();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c).is_zero()) continue;
      GaussianRational f = m(r, c) * inv;
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

/// Cofactor expansion; only for small matrices.
inline GaussianRational oracle_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  GaussianRational s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k)
        if (k != c) minor(r - 1, kk++) = m(r, k);
    GaussianRational t = m(0, c) * oracle_det(minor);
    s += (c % 2 == 0) ? t : -t;
  }
  return s;
}

inline Vec unit(std::size_t n, std::size_t k) {
  Vec v(n);
  v[k] = 1;
  return v;
}

inline Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Known block content of a generated pencil.
struct PencilRecipe {
  std::vector<std::size_t> kronecker;  // minimal indices, descending
  struct Jordan {
    bool infinite = false;  // block where a itself is degenerate
    GaussianRational theta;
    std::size_t size = 0;  // pencil block dimension is 2*size
  };
  std::vector<Jordan> jordan;
  bihamil::SkewPencil pencil{Matrix(), Matrix()};

  bool has_jordan() const { return !jordan.empty(); }
  std::size_t jordan_dim() const {
    std::size_t s = 0;
    for (const auto& j : jordan) s += 2 * j.size;
    return s;
  }
};

/// Direct sum of random canonical blocks (dimension <= max_dim), hidden by a
/// random unimodular congruence.
inline PencilRecipe random_block_pencil(Gen& g, std::size_t max_dim, bool allow_jordan) {
  PencilRecipe r;
  std::vector<bihamil::SkewPencil> blocks;
  std::size_t dim = 0;
  const std::size_t target = static_cast<std::size_t>(g.integer(2, static_cast<long>(max_dim)));
  while (dim < target) {
    const std::size_t room = max_dim - dim;
    if (allow_jordan && room >= 2 && g.integer(0, 2) == 0) {
      PencilRecipe::Jordan j;
      j.size = static_cast<std::size_t>(g.integer(1, room >= 4 ? 2 : 1));
      j.infinite = g.integer(0, 5) == 0;
      if (j.infinite) {
        blocks.push_back(bihamil::jordan_block_at_infinity(j.size));
      } else {
        j.theta = g.small_int(3);
        blocks.push_back(bihamil::jordan_block(j.size, j.theta));
      }
      r.jordan.push_back(j);
      dim += 2 * j.size;
    } else {
      long max_m = std::min<long>(3, static_cast<long>((room - 1) / 2));
      std::size_t m = static_cast<std::size_t>(g.integer(0, max_m));
      blocks.push_back(bihamil::kronecker_block(m));
      r.kronecker.push_back(m);
      dim += 2 * m + 1;
    }
  }
  bihamil::SkewPencil sum = blocks.front();
  for (std::size_t k = 1; k < blocks.size(); ++k) sum = bihamil::direct_sum(sum, blocks[k]);
  r.pencil = bihamil::congruence(sum, g.invertible(sum.dim(), 2));
  std::sort(r.kronecker.rbegin(), r.kronecker.rend());
  return r;
}

}  // namespace testsupport
