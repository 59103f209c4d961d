#include "bihamil/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace bihamil {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("matrix data size mismatch");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vec> cols, std::size_t ambient) {
  Matrix m(ambient, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != ambient) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < ambient; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vec> rows, std::size_t ambient) {
  Matrix m(rows.size(), ambient);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ambient) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conjugate() const {
  Matrix t(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = data_[k].conj();
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (!((*this)(r, c) == -(*this)(c, r))) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c)
        if (!o(k, c).is_zero()) p(r, c) += a * o(k, c);
    }
  return p;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix s = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] += o.data_[k];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  Matrix s = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) s.data_[k] -= o.data_[k];
  return s;
}

Matrix Matrix::scaled(const GaussianRational& s) const {
  Matrix t = *this;
  for (auto& x : t.data_) x *= s;
  return t;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
  return m;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
  }
  return m;
}

namespace {

// Scale a row by the lcm of its denominators so every entry lies in Z[i].
void clear_denominators(Matrix& m, std::size_t r) {
  mpz_class l = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const auto& x = m(r, c);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
  }
  if (l == 1) return;
  GaussianRational s{Rational(l)};
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
}

}  // namespace

Echelon echelon(const Matrix& input) {
  Matrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  for (std::size_t r = 0; r < rows; ++r) clear_denominators(a, r);

  std::vector<std::size_t> pivots;
  GaussianRational previous = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Smallest nonzero candidate keeps intermediate entries short.
    std::size_t best = rows;
    std::size_t best_size = 0;
    for (std::size_t k = r; k < rows; ++k) {
      if (a(k, c).is_zero()) continue;
      std::size_t s = a(k, c).bit_size();
      if (best == rows || s < best_size) {
        best = k;
        best_size = s;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(best, j));
    const GaussianRational pivot = a(r, c);
    for (std::size_t k = r + 1; k < rows; ++k) {
      const GaussianRational factor = a(k, c);
      for (std::size_t j = c; j < cols; ++j) {
        GaussianRational v = pivot * a(k, j);
        if (!factor.is_zero() && !a(r, j).is_zero()) v -= factor * a(r, j);
        a(k, j) = v / previous;
      }
      for (std::size_t j = 0; j < c; ++j) a(k, j) = 0;
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }

  // Back substitution to reduced form over the field.
  Matrix reduced(pivots.size(), cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    GaussianRational inv = a(k, pivots[k]).inverse();
    for (std::size_t j = 0; j < cols; ++j) reduced(k, j) = a(k, j) * inv;
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    for (std::size_t up = 0; up < k; ++up) {
      GaussianRational f = reduced(up, pivots[k]);
      if (f.is_zero()) continue;
      for (std::size_t j = pivots[k]; j < cols; ++j)
        if (!reduced(k, j).is_zero()) reduced(up, j) -= f * reduced(k, j);
    }
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank_exact(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return echelon(m).pivots.size();
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  if (m.rows() == 0) {
    std::vector<Vec> all;
    for (std::size_t c = 0; c < cols; ++c) {
      Vec e(cols);
      e[c] = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  Echelon e = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> image_basis(const Matrix& m) {
  std::vector<Vec> basis;
  if (m.rows() == 0 || m.cols() == 0) return basis;
  for (auto p : echelon(m).pivots) basis.push_back(m.col(p));
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = echelon(aug);
  Vec x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == m.cols()) return std::nullopt;
    x[e.pivots[k]] = e.reduced(k, m.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Echelon e = echelon(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse of singular matrix");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

GaussianRational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  GaussianRational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    GaussianRational inv = a(c, c).inverse();
    for (std::size_t k = c + 1; k < n; ++k) {
      if (a(k, c).is_zero()) continue;
      GaussianRational f = a(k, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(k, j) -= f * a(c, j);
    }
  }
  return det;
}

Vec conjugate(const Vec& v) {
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
  return out;
}

Vec scaled(const Vec& v, const GaussianRational& s) {
  Vec out = v;
  for (auto& x : out) x *= s;
  return out;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum length mismatch");
  Vec out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

GaussianRational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot length mismatch");
  GaussianRational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) s += a[k] * b[k];
  return s;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << to_string(m(r, c));
  }
  os << ']';
  return os.str();
}

}  // namespace bihamil
