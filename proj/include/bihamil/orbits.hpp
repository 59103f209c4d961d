#pragma once

#include "bihamil/canonical.hpp"

#include <vector>

namespace bihamil {

/// Tangent data of the real orbit through z inside its complex leaf.
/// Real tangent vectors are kept as vectors of C^n; the real structure is
/// the one of C^n = R^2n.
struct OrbitFrame {
  Vec z;
  /// Independent (over R) subfamily of the generator values at z.
  std::vector<Vec> real_tangent;
  /// Complex basis of T ∩ JT, which is its own (1,0) part.
  std::vector<Vec> cr_tangent_10;
  /// Basis of the image of C(z).
  std::vector<Vec> leaf_10_basis;
  std::size_t orbit_dim = 0;
  std::size_t cr_dim = 0;
};

OrbitFrame orbit_tangent(const CanonicalPair& pair, const Vec& z);

/// T + JT equals the real tangent of the leaf.
bool cr_genericity_check(const OrbitFrame& frame);

/// C(z) = E S E^T with E the pivot columns of C(z); omega = S^{-1}.
struct LeafData {
  Matrix basis;  // n x m, columns span the image of C(z)
  Matrix s;      // m x m, skew and invertible
  Matrix omega;  // m x m
};

/// Throws PreconditionError when C(z) = 0.
LeafData leaf_restrict(const CanonicalPair& pair, const Vec& z);

/// omega vanishes on the CR tangent. Throws PreconditionError on Sing.
bool cr_isotropy_check(const CanonicalPair& pair, const Vec& z);

struct KNumbers {
  std::size_t k = 0;
  std::vector<std::pair<LambdaPair, std::size_t>> k_lambda;
};

/// True when l1 = ±i l2, where the real form l1 Re c + l2 Im c degenerates.
bool on_cross(const LambdaPair& l);

/// Throws PreconditionError on Sing, std::invalid_argument for lambda on the cross.
KNumbers k_numbers(const CanonicalPair& pair, const Vec& z, const std::vector<LambdaPair>& lambdas);

struct Pushforward {
  std::vector<Vec> image;         // c^#(K^perp)
  std::vector<Vec> intersection;  // K ∩ c^#(K^perp)
  std::vector<std::size_t> complement;  // standard basis indices spanning V/K
  Matrix reduced;                 // induced bivector on V/K in the complement basis
  std::size_t d = 0;              // dim image - dim intersection
};

/// Throws std::invalid_argument if K is dependent or c is not skew of size v_dim.
Pushforward pushforward_at_point(std::size_t v_dim, const Matrix& c, const std::vector<Vec>& k);

struct ReductionReport {
  Vec z;
  std::size_t k = 0;
  std::vector<std::pair<LambdaPair, std::size_t>> k_lambda;
  std::vector<std::pair<LambdaPair, std::size_t>> d_lambda;
  std::size_t reduced_generic_rank = 0;
  bool in_irregularity = false;
  bool complete = false;
  bool minimal = false;
  std::size_t quotient_dim = 0;
  std::size_t orbit_dim = 0;
  std::size_t cr_dim = 0;
};

/// Throws PreconditionError on Sing.
ReductionReport reduction_completeness(const CanonicalPair& pair, const Vec& z,
                                       const std::vector<LambdaPair>& lambdas);

}  // namespace bihamil
