#pragma once

#include "bihamil/canonical.hpp"

#include <string>
#include <vector>

namespace bihamil {

/// Polynomial first integrals in the mixed variables z, zbar, with a tag per
/// member saying where it came from.
struct IntegralFamily {
  std::vector<MultiPoly> members;
  std::vector<std::string> provenance;
  unsigned degree_bound = 0;
  std::vector<std::string> warnings;

  std::size_t size() const { return members.size(); }
  /// Appends unless an equal polynomial is already present; returns whether it was added.
  bool add(MultiPoly f, std::string tag);
};

/// Holomorphic polynomial Casimirs of a linear bivector field up to the given
/// degree, one homogeneous generator per new direction: products of
/// lower-degree generators are not repeated.
std::vector<MultiPoly> casimir_basis(const BivectorField& c, unsigned degree);
std::vector<MultiPoly> casimir_basis(const CanonicalPair& pair, unsigned degree);

/// g~ = sum_i conj(dg/dz_i) z_i. Requires g holomorphic.
MultiPoly tilde(const MultiPoly& g);

/// g(l1 z + l2 zbar). Requires g holomorphic and l != 0.
MultiPoly compose_phi_lambda(const MultiPoly& g, const LambdaPair& l);

/// Casimirs g of c and their shifts g(z + t a), t = l2/l1 over the schedule
/// entries with l1 != 0. Throws PreconditionError when a is singular for c.
IntegralFamily translation_family(const BivectorField& c, const Vec& a, unsigned degree,
                                  const std::vector<LambdaPair>& lambdas);

/// {g}, {g~} and {g∘phi_l : l1 l2 != 0} over the Casimir basis.
IntegralFamily family_F1(const CanonicalPair& pair, unsigned degree, const std::vector<LambdaPair>& lambdas);

/// {f,g} for l1 c + l2 c~ vanishes at every point, for all pairs and lambdas.
bool involutivity_check(const IntegralFamily& fam, const CanonicalPair& pair, const std::vector<LambdaPair>& lambdas,
                        const std::vector<Vec>& points);

/// Every orbit generator kills f at every point.
bool g0_invariance_check(const MultiPoly& f, const CanonicalPair& pair, const std::vector<Vec>& points);

struct LagrangianCheck {
  bool lagrangian = false;
  std::size_t leaf_dim = 0;
  std::size_t kernel_dim = 0;
  bool isotropic = false;
};

/// Common kernel of the (1,0)-differentials of Re f, Im f inside the leaf
/// tangent at z, tested for being omega-lagrangian. Throws PreconditionError
/// when z lies in the irregularity set.
LagrangianCheck cr_lagrangian(const IntegralFamily& fam, const CanonicalPair& pair, const Vec& z);
bool cr_lagrangian_check(const IntegralFamily& fam, const CanonicalPair& pair, const Vec& z);

/// Rank of the (1,0)-differentials of {f, conj f : f in fam} at z.
std::size_t differential_rank(const IntegralFamily& fam, const Vec& z);

}  // namespace bihamil
