#include "bihamil/subspace.hpp"

#include <stdexcept>

namespace bihamil {

namespace {

void check_ambient(const std::vector<Vec>& family, std::size_t ambient) {
  for (const auto& v : family)
    if (v.size() != ambient) throw std::invalid_argument("vector does not live in the stated ambient dimension");
}

}  // namespace

std::size_t span_dim(const std::vector<Vec>& family, std::size_t ambient) {
  check_ambient(family, ambient);
  if (family.empty()) return 0;
  return rank_exact(Matrix::from_rows(family, ambient));
}

std::vector<std::size_t> independent_indices(const std::vector<Vec>& family, std::size_t ambient) {
  check_ambient(family, ambient);
  std::vector<std::size_t> picked;
  if (family.empty()) return picked;
  // Pivot columns of the matrix with the family as columns are exactly the
  // greedy choice in input order.
  for (auto p : echelon(Matrix::from_columns(family, ambient)).pivots) picked.push_back(p);
  return picked;
}

std::vector<Vec> independent_subset(const std::vector<Vec>& family, std::size_t ambient) {
  std::vector<Vec> out;
  for (auto k : independent_indices(family, ambient)) out.push_back(family[k]);
  return out;
}

std::vector<Vec> intersect_subspaces(const std::vector<Vec>& a, const std::vector<Vec>& b,
                                     std::size_t ambient) {
  check_ambient(a, ambient);
  check_ambient(b, ambient);
  if (a.empty() || b.empty()) return {};
  std::vector<Vec> ai = independent_subset(a, ambient);
  std::vector<Vec> bi = independent_subset(b, ambient);
  // Solve sum x_k a_k = sum y_l b_l; each kernel vector gives an element of the intersection.
  Matrix m(ambient, ai.size() + bi.size());
  for (std::size_t c = 0; c < ai.size(); ++c)
    for (std::size_t r = 0; r < ambient; ++r) m(r, c) = ai[c][r];
  for (std::size_t c = 0; c < bi.size(); ++c)
    for (std::size_t r = 0; r < ambient; ++r) m(r, ai.size() + c) = -bi[c][r];
  std::vector<Vec> out;
  for (const auto& k : kernel_basis(m)) {
    Vec v(ambient);
    for (std::size_t c = 0; c < ai.size(); ++c)
      if (!k[c].is_zero()) v = add(v, scaled(ai[c], k[c]));
    out.push_back(std::move(v));
  }
  return independent_subset(out, ambient);
}

std::vector<Vec> sum_subspaces(const std::vector<Vec>& a, const std::vector<Vec>& b, std::size_t ambient) {
  std::vector<Vec> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return independent_subset(all, ambient);
}

std::vector<Vec> annihilator(const std::vector<Vec>& subspace, std::size_t ambient) {
  check_ambient(subspace, ambient);
  if (subspace.empty()) return kernel_basis(Matrix(0, ambient));
  return kernel_basis(Matrix::from_rows(subspace, ambient));
}

bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t ambient) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return span_dim(basis, ambient) == span_dim([&] {
           auto ext = basis;
           ext.push_back(v);
           return ext;
         }(), ambient);
}

std::optional<Vec> coordinates(const std::vector<Vec>& basis, const Vec& v, std::size_t ambient) {
  check_ambient(basis, ambient);
  if (basis.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve(Matrix::from_columns(basis, ambient), v);
}

}  // namespace bihamil
