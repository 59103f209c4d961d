#pragma once

#include "bihamil/lie_algebra.hpp"
#include "bihamil/matrix.hpp"
#include "bihamil/poly.hpp"

#include <span>
#include <string>
#include <vector>

namespace bihamil {

/// Coordinates a bivector field is written in. `mixed` fields are holomorphic
/// bivectors (only d/dz_i ∧ d/dz_j components) whose coefficients may depend
/// on z and zbar, with zbar treated as an independent formal variable.
enum class VariableKind { holomorphic, mixed, real };

std::string to_string(VariableKind kind);
VariableKind parse_variable_kind(const std::string& text);

/// Components along every formal variable of the ring (z then zbar in a mixed ring).
using VectorField = std::vector<MultiPoly>;

/// c = sum_{i<j} c^{ij} d_i ∧ d_j with polynomial coefficients; c^{ji} = -c^{ij}.
/// The sharp map is (c^# xi)_j = sum_i xi_i c^{ij}.
class BivectorField {
 public:
  BivectorField() = default;
  BivectorField(std::size_t dim, VariableKind kind);

  static BivectorField constant(const Matrix& skew, VariableKind kind);

  std::size_t dim() const { return dim_; }
  VariableKind kind() const { return kind_; }
  const VarLayout& layout() const { return layout_; }

  MultiPoly coeff(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, MultiPoly value);
  void add_to(std::size_t i, std::size_t j, const MultiPoly& value);

  bool is_zero() const;
  /// Every coefficient is a linear form in the holomorphic variables.
  bool is_linear_holomorphic() const;

  BivectorField operator+(const BivectorField& o) const;
  BivectorField scaled(const GaussianRational& s) const;

  friend bool operator==(const BivectorField&, const BivectorField&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t dim_ = 0;
  VariableKind kind_ = VariableKind::holomorphic;
  VarLayout layout_{};
  std::vector<MultiPoly> upper_;
};

/// Totally antisymmetric trivector, stored for i<j<k.
class TrivectorField {
 public:
  TrivectorField() = default;
  TrivectorField(std::size_t dim, VarLayout layout);

  std::size_t dim() const { return dim_; }
  const MultiPoly& coeff_sorted(std::size_t i, std::size_t j, std::size_t k) const;
  MultiPoly coeff(std::size_t i, std::size_t j, std::size_t k) const;
  void set_sorted(std::size_t i, std::size_t j, std::size_t k, MultiPoly value);

  bool is_zero() const;

  struct Component {
    std::size_t i, j, k;
    MultiPoly value;
  };
  std::vector<Component> nonzero_components() const;

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const;

  std::size_t dim_ = 0;
  VarLayout layout_{};
  std::vector<MultiPoly> coeffs_;
};

/// Lie–Poisson bivector c^{ij} = c_ij^k z_k. A mixed kind prepares it for
/// pairing with its conjugate twist.
BivectorField lie_poisson(const LieAlgebraSpec& g, VariableKind kind = VariableKind::mixed);

/// Replace z_k by zbar_k in every coefficient. Requires a mixed, linear
/// holomorphic field; throws std::invalid_argument otherwise.
BivectorField conjugate_twist(const BivectorField& c);

/// [c1,c2]^{ijk} = 1/2 sum_cyc (c1^{ir} d_r c2^{jk} + c2^{ir} d_r c1^{jk}).
TrivectorField schouten_bracket(const BivectorField& c1, const BivectorField& c2);

struct PoissonPairCheck {
  bool first_poisson = false;   // [c1,c1] = 0
  bool mixed_vanishes = false;  // [c1,c2] = 0
  bool second_poisson = false;  // [c2,c2] = 0
  bool independent = false;

  bool is_pair() const { return first_poisson && mixed_vanishes && second_poisson && independent; }
};

PoissonPairCheck is_poisson_pair(const BivectorField& c1, const BivectorField& c2);

/// Exact test: neither field is zero and c2 is not a constant multiple of c1.
bool linearly_independent(const BivectorField& c1, const BivectorField& c2);

/// Lie derivative [X,Z]^{ab} = X^r d_r Z^{ab} - Z^{rb} d_r X^a - Z^{ar} d_r X^b,
/// computed over every formal variable of the ring.
BivectorField lie_derivative_bivector(const VectorField& x, const BivectorField& z);

/// Contraction of df with c in the first index: c(f)_j = sum_i d_i f c^{ij}.
VectorField hamiltonian_field(const BivectorField& c, const MultiPoly& f);

/// X(f) = sum_v X^v d_v f.
MultiPoly apply_field(const VectorField& x, const MultiPoly& f);

/// {f,g}_c = c(f) g.
MultiPoly poisson_bracket(const BivectorField& c, const MultiPoly& f, const MultiPoly& g);

/// Skew matrix (c^{ij}(z)); conjugate variables receive conjugates of z.
Matrix evaluate_at(const BivectorField& c, std::span<const GaussianRational> point);

}  // namespace bihamil
