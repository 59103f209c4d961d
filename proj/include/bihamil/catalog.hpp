#pragma once

#include "bihamil/lie_algebra.hpp"
#include "bihamil/poisson.hpp"

#include <string>
#include <vector>

namespace bihamil {

LieAlgebraSpec so3();
LieAlgebraSpec heisenberg3();
LieAlgebraSpec sl2r();
LieAlgebraSpec so3xso3();
/// sl(3) in the basis E12, E13, E21, E23, E31, E32, H1 = E11-E22, H2 = E22-E33;
/// constants come from matrix commutators.
LieAlgebraSpec sl3();
/// 14-dimensional algebra with [p1,q_i] = f_i and [p2,q_i] = g_i.
LieAlgebraSpec d45();
LieAlgebraSpec abelian(std::size_t n);

std::vector<std::string> catalog_algebra_names();
/// Throws InputError for unknown names.
LieAlgebraSpec catalog_algebra(const std::string& name);

/// Named pair of bivector fields on a common coordinate space.
struct BivectorPair {
  std::string name;
  std::vector<std::string> variables;
  BivectorField c1;
  BivectorField c2;
};

/// Pair on R^6 (p1,p2,q1..q4): c1 = p1∧q1 + p2∧q2, c2 = p1∧(q2 + q1 q3) + p2∧q4.
BivectorPair kron_2068();
/// Constant pair on (e,p,q1,q2): c1 = p∧q1, c2 = p∧q2.
BivectorPair kron_2069();
/// Constant 4-dimensional Jordan block with eigenvalue theta.
BivectorPair jordan4_lam(const GaussianRational& theta);

std::vector<std::string> catalog_pair_names();
/// Accepts "kron_2068", "kron_2069" and "jordan4_lam(<gaussian>)".
BivectorPair catalog_pair(const std::string& name);

}  // namespace bihamil
