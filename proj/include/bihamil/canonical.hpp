#pragma once

#include "bihamil/lie_algebra.hpp"
#include "bihamil/pencil.hpp"
#include "bihamil/poisson.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace bihamil {

/// Deterministic Gaussian-rational points: real and imaginary parts p/q with
/// |p| <= height and 1 <= q <= height, drawn from mt19937_64(seed).
class PointSchedule {
 public:
  PointSchedule(std::size_t dim, std::uint64_t seed, long height);
  Vec next();
  std::vector<Vec> take(std::size_t count);

 private:
  Rational draw();

  std::size_t dim_;
  long height_;
  std::mt19937_64 rng_;
};

std::vector<Vec> point_schedule(std::size_t dim, std::size_t count, std::uint64_t seed, long height);

/// The pair (c, c~) on the complexified dual of a real Lie algebra.
class CanonicalPair {
 public:
  explicit CanonicalPair(LieAlgebraSpec g, std::uint64_t seed = 42, long height = 10);

  const LieAlgebraSpec& algebra() const { return g_; }
  const BivectorField& c() const { return c_; }
  const BivectorField& c_tilde() const { return c_tilde_; }
  std::size_t dim() const { return g_.dim(); }

  /// C(z)_{ij} = c_ij^k z_k.
  Matrix c_matrix(const Vec& z) const;
  /// [C(z); C(zbar)], 2n x n.
  Matrix stacked(const Vec& z) const;
  SkewPencil pencil_at(const Vec& z) const;

  /// r = n - generic rank C. Throws PreconditionError for abelian algebras.
  std::size_t rank_g() const;
  std::size_t generic_rank_c() const { return generic_rank_c_; }
  /// Generic rank of the stacked matrix.
  std::size_t generic_stacked_rank() const { return generic_stacked_rank_; }

 private:
  LieAlgebraSpec g_;
  BivectorField c_;
  BivectorField c_tilde_;
  std::size_t generic_rank_c_ = 0;
  std::size_t generic_stacked_rank_ = 0;
};

std::size_t rank_of_algebra(const CanonicalPair& pair);
bool in_sing(const CanonicalPair& pair, const Vec& z);
bool in_incompleteness_set(const CanonicalPair& pair, const Vec& z);
bool in_kronecker_irregularity(const CanonicalPair& pair, const Vec& z);
/// dim(ker C(z) ∩ ker C(zbar)).
std::size_t mu(const CanonicalPair& pair, const Vec& z);
/// dim(ker C(z) ∩ ker(l1 C(z) + l2 C(zbar))); requires l1, l2 != 0.
std::size_t mu_lambda(const CanonicalPair& pair, const Vec& z, const LambdaPair& l);

struct PointClassification {
  Vec z;
  std::size_t rank_c = 0;
  std::size_t rank_c_tilde = 0;
  std::size_t stacked_rank = 0;
  std::size_t pencil_generic_rank = 0;
  bool in_sing = false;
  bool in_incompleteness = false;
  bool in_irregularity = false;
  /// Every member of the pencil has rank below n - r.
  bool all_directions_degenerate = false;
  std::size_t mu = 0;
  std::vector<std::pair<LambdaPair, std::size_t>> mu_lambda_samples;
  std::vector<DegenerateDirection> degenerate_directions;
};

/// Uses `lambda_samples` schedule entries with both components nonzero.
/// Throws InternalInconsistency when the membership chain or mu invariance fails.
PointClassification classify_point(const CanonicalPair& pair, const Vec& z, std::size_t lambda_samples);

/// Scheduled lambdas with l1*l2 != 0: (1,1), (1,2), ...
std::vector<LambdaPair> mixed_lambda_schedule(std::size_t count);

/// Orbit generator v_i = c(z_i) + its conjugate, over all 2n formal variables.
VectorField orbit_generator(const CanonicalPair& pair, std::size_t i);

}  // namespace bihamil
