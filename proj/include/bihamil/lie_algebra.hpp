#pragma once

#include "bihamil/scalar.hpp"

#include <string>
#include <vector>

namespace bihamil {

/// Structure constants c_ij^k of a real Lie algebra, [e_i, e_j] = c_ij^k e_k.
/// Antisymmetry is enforced by storing only i < j. The Jacobi identity is not
/// enforced so that broken inputs can be analyzed.
class LieAlgebraSpec {
 public:
  LieAlgebraSpec() = default;
  LieAlgebraSpec(std::string name, std::size_t dim, std::vector<std::string> labels = {});

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Set c_ij^k (and implicitly c_ji^k = -c_ij^k). Throws on i == j with nonzero value.
  void set_structure(std::size_t i, std::size_t j, std::size_t k, const Rational& value);
  Rational structure(std::size_t i, std::size_t j, std::size_t k) const;

  bool is_abelian() const;
  /// Nonzero components of the Jacobiator sum_cyc [[e_i,e_j],e_k], as (i,j,k,l,value) for i<j<k.
  struct JacobiDefect {
    std::size_t i, j, k, l;
    Rational value;
  };
  std::vector<JacobiDefect> jacobi_defects() const;

  LieAlgebraSpec renamed(std::string name) const;

  friend bool operator==(const LieAlgebraSpec& a, const LieAlgebraSpec& b) {
    return a.name_ == b.name_ && a.dim_ == b.dim_ && a.labels_ == b.labels_ && a.constants_ == b.constants_;
  }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::string name_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> constants_;  // [pair_index(i<j)][k]
};

/// Direct sum g ⊕ h; labels are prefixed to stay distinct.
LieAlgebraSpec direct_sum(const LieAlgebraSpec& g, const LieAlgebraSpec& h, std::string name);

}  // namespace bihamil
