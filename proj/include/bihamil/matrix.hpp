#pragma once

#include "bihamil/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bihamil {

using Vec = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i). Value type; every operation is exact.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> data);

  static Matrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `ambient`).
  static Matrix from_columns(std::span<const Vec> cols, std::size_t ambient);
  static Matrix from_rows(std::span<const Vec> rows, std::size_t ambient);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Matrix transpose() const;
  Matrix conjugate() const;
  bool is_zero() const;
  bool is_skew() const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const GaussianRational& s) const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

/// Vertical concatenation; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);
/// Horizontal concatenation; row counts must agree.
Matrix hstack(const Matrix& left, const Matrix& right);

struct Echelon {
  Matrix reduced;                  // reduced row echelon form, zero rows trimmed
  std::vector<std::size_t> pivots;  // pivot column of each row of `reduced`
};

/// Fraction-free (Bareiss) forward elimination over Z[i] after clearing row
/// denominators, followed by back substitution to reduced form.
Echelon echelon(const Matrix& m);

std::size_t rank_exact(const Matrix& m);
/// Basis of the right nullspace; empty iff full column rank.
std::vector<Vec> kernel_basis(const Matrix& m);
/// Basis of the column space (pivot columns of the input).
std::vector<Vec> image_basis(const Matrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
/// Inverse of a square nonsingular matrix; throws std::domain_error otherwise.
Matrix inverse(const Matrix& m);
GaussianRational determinant(const Matrix& m);

Vec conjugate(const Vec& v);
Vec scaled(const Vec& v, const GaussianRational& s);
Vec add(const Vec& a, const Vec& b);
/// Bilinear pairing sum a_i b_i (no conjugation).
GaussianRational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

std::string to_string(const Matrix& m);

}  // namespace bihamil
