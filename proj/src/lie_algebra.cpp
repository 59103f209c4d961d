#include "bihamil/lie_algebra.hpp"

#include <stdexcept>

namespace bihamil {

LieAlgebraSpec::LieAlgebraSpec(std::string name, std::size_t dim, std::vector<std::string> labels)
    : name_(std::move(name)), dim_(dim), labels_(std::move(labels)) {
  if (labels_.empty())
    for (std::size_t k = 0; k < dim_; ++k) labels_.push_back("e" + std::to_string(k + 1));
  if (labels_.size() != dim_) throw std::invalid_argument("label count does not match the dimension");
  constants_.assign(dim_ * (dim_ > 0 ? dim_ - 1 : 0) / 2, std::vector<Rational>(dim_, Rational(0)));
}

std::size_t LieAlgebraSpec::pair_index(std::size_t i, std::size_t j) const {
  // Row-major enumeration of the strict upper triangle.
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void LieAlgebraSpec::set_structure(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index out of range");
  if (i == j) {
    if (sgn(value) != 0) throw std::invalid_argument("c_ii^k must vanish");
    return;
  }
  if (i < j)
    constants_[pair_index(i, j)][k] = value;
  else
    constants_[pair_index(j, i)][k] = -value;
}

Rational LieAlgebraSpec::structure(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  if (i < j) return constants_[pair_index(i, j)][k];
  return -constants_[pair_index(j, i)][k];
}

bool LieAlgebraSpec::is_abelian() const {
  for (const auto& row : constants_)
    for (const auto& c : row)
      if (sgn(c) != 0) return false;
  return true;
}

std::vector<LieAlgebraSpec::JacobiDefect> LieAlgebraSpec::jacobi_defects() const {
  std::vector<JacobiDefect> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l) {
          Rational s = 0;
          for (std::size_t m = 0; m < dim_; ++m) {
            s += structure(i, j, m) * structure(m, k, l);
            s += structure(j, k, m) * structure(m, i, l);
            s += structure(k, i, m) * structure(m, j, l);
          }
          if (sgn(s) != 0) out.push_back({i, j, k, l, s});
        }
  return out;
}

LieAlgebraSpec LieAlgebraSpec::renamed(std::string name) const {
  LieAlgebraSpec copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

LieAlgebraSpec direct_sum(const LieAlgebraSpec& g, const LieAlgebraSpec& h, std::string name) {
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back("a." + l);
  for (const auto& l : h.labels()) labels.push_back("b." + l);
  const std::size_t n = g.dim();
  LieAlgebraSpec s(std::move(name), n + h.dim(), labels);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.set_structure(i, j, k, g.structure(i, j, k));
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = i + 1; j < h.dim(); ++j)
      for (std::size_t k = 0; k < h.dim(); ++k) s.set_structure(n + i, n + j, n + k, h.structure(i, j, k));
  return s;
}

}  // namespace bihamil
