#pragma once

#include "bihamil/scalar.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihamil {

inline constexpr unsigned kDefaultDegreeCap = 8;

/// Variable layout of a polynomial ring. A mixed layout over n holomorphic
/// variables carries 2n formal variables z_1..z_n, zbar_1..zbar_n; evaluation
/// binds zbar_k to the conjugate of z_k.
struct VarLayout {
  std::size_t holo = 0;
  bool mixed = false;

  std::size_t num_vars() const { return mixed ? 2 * holo : holo; }
  friend bool operator==(const VarLayout&, const VarLayout&) = default;
};

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Exponents = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(VarLayout layout, unsigned degree_cap = kDefaultDegreeCap)
      : layout_(layout), degree_cap_(degree_cap) {}

  static MultiPoly constant(VarLayout layout, const GaussianRational& c);
  /// The formal variable with index `var` (< num_vars).
  static MultiPoly variable(VarLayout layout, std::size_t var);
  /// zbar_k in a mixed layout.
  static MultiPoly conj_variable(VarLayout layout, std::size_t k);
  static MultiPoly monomial(VarLayout layout, const Exponents& e, const GaussianRational& c);

  const VarLayout& layout() const { return layout_; }
  std::size_t num_vars() const { return layout_.num_vars(); }
  unsigned degree_cap() const { return degree_cap_; }
  const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  unsigned total_degree() const;
  /// No antiholomorphic variable occurs.
  bool is_holomorphic() const;
  /// Every term has total degree exactly one.
  bool is_linear_homogeneous() const;
  GaussianRational coefficient(const Exponents& e) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const GaussianRational& s) const;
  MultiPoly pow(unsigned k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.layout_ == b.layout_ && a.terms_ == b.terms_;
  }

  /// Exact partial derivative with respect to formal variable `var`.
  MultiPoly diff(std::size_t var) const;

  /// Evaluate at a point of C^holo; zbar variables receive conjugates.
  GaussianRational evaluate(std::span<const GaussianRational> point) const;
  /// Evaluate with an explicit value for every formal variable.
  GaussianRational evaluate_formal(std::span<const GaussianRational> values) const;

  /// Complex conjugate as a function: conjugated coefficients, z and zbar swapped.
  /// Requires a mixed layout.
  MultiPoly conjugate() const;
  /// Replace formal variable k by images[k]; all images share one layout.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Same polynomial viewed in a mixed layout over the same holomorphic variables.
  MultiPoly to_mixed() const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const GaussianRational& c);
  void check_same_ring(const MultiPoly& o) const;

  VarLayout layout_{};
  std::map<Exponents, GaussianRational> terms_;
  unsigned degree_cap_ = kDefaultDegreeCap;
};

std::string variable_name(const VarLayout& layout, std::size_t var);

}  // namespace bihamil
