#pragma once

#include "bihamil/matrix.hpp"
#include "bihamil/univariate.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace bihamil {

/// Homogeneous pencil parameter (lambda1, lambda2) selecting lambda1*a + lambda2*b.
struct LambdaPair {
  GaussianRational l1;
  GaussianRational l2;

  bool is_zero() const { return l1.is_zero() && l2.is_zero(); }
  /// Scaled so the first nonzero entry is 1.
  LambdaPair normalized() const;
  friend bool operator==(const LambdaPair&, const LambdaPair&) = default;
};

std::string to_string(const LambdaPair& l);
bool proportional(const LambdaPair& a, const LambdaPair& b);

/// Entry `index` of the schedule (1,0), (0,1), (1,1), (1,2), (1,3), ...
LambdaPair scheduled_lambda(std::size_t index);
std::vector<LambdaPair> lambda_schedule(std::size_t count);

/// Pair of equally sized skew matrices. Both may vanish (the zero pencil is a
/// valid, trivially complete input).
class SkewPencil {
 public:
  SkewPencil(Matrix a, Matrix b);

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  std::size_t dim() const { return a_.rows(); }
  Matrix member(const LambdaPair& l) const;

 private:
  Matrix a_;
  Matrix b_;
};

/// Degenerate pencil direction. `exact` is set when the direction was recovered
/// as Gaussian rationals and the rank drop was verified exactly.
struct DegenerateDirection {
  std::complex<double> l1;
  std::complex<double> l2;
  std::optional<LambdaPair> exact;
  double residual = 0;  // |q(alpha)| of the squarefree factor at the floating root

  /// theta with b - theta*a degenerate, i.e. -l1/l2; infinite when a is degenerate.
  std::optional<std::complex<double>> eigenvalue() const;
};

struct JordanComponent {
  DegenerateDirection direction;
  std::size_t dim = 0;
  /// Even dimensions of the individual Jordan blocks, largest first.
  std::vector<std::size_t> block_dims;
  /// False when block sizes could only be averaged over a factor with several roots.
  bool blocks_resolved = false;
};

struct PencilInvariants {
  std::size_t dim = 0;
  std::size_t generic_rank = 0;
  std::vector<std::size_t> kronecker_indices;  // descending
  std::size_t trivial_count = 0;
  std::vector<JordanComponent> jordan_part;
  std::size_t dimension_checksum = 0;

  std::size_t jordan_dim() const;
  /// Block dimensions 2m+1, descending.
  std::vector<std::size_t> kronecker_block_dims() const;
};

struct CompletenessVerdict {
  bool complete = false;
  std::size_t r0 = 0;
  std::size_t f0_dim = 0;
  std::size_t f0_tilde_dim = 0;
  LambdaPair anchor;
  LambdaPair probe;
  UPoly charpoly;  // characteristic polynomial of the recursion operator
  std::vector<DegenerateDirection> degenerate_directions;
};

struct RecursionOperator {
  LambdaPair anchor;
  LambdaPair probe;
  std::vector<Vec> f0;          // basis of F0
  std::vector<Vec> complement;  // representatives of a basis of F0~/F0
  Matrix phi;                   // action on `complement` coordinates
};

std::size_t generic_rank(const SkewPencil& p);
std::vector<Vec> f0_subspace(const SkewPencil& p);
/// Skew-orthogonal complement of F0 with respect to the anchor member.
std::vector<Vec> f0_tilde(const SkewPencil& p);
/// Throws InternalInconsistency when a quotient representative cannot be solved for.
RecursionOperator recursion_operator(const SkewPencil& p);
CompletenessVerdict is_complete(const SkewPencil& p);
/// dim(ker a ∩ ker(l1 a + l2 b)); throws PreconditionError on pencils with Jordan blocks.
std::size_t trivial_kronecker_dim(const SkewPencil& p);
std::size_t trivial_kronecker_dim_at(const SkewPencil& p, const LambdaPair& l);
/// Throws InternalInconsistency on a checksum failure.
PencilInvariants kronecker_invariants(const SkewPencil& p);
std::vector<Vec> kernel_at(const SkewPencil& p, const LambdaPair& l);

/// Nullity of the block-Toeplitz system of (a + t b) x(t) = 0 with deg x < k.
std::size_t toeplitz_nullity(const SkewPencil& p, std::size_t k);

/// Canonical blocks and direct sums, mainly for fixtures and tests.
SkewPencil kronecker_block(std::size_t m);
/// Jordan block of dimension 2*size with eigenvalue theta (b - theta a degenerate).
SkewPencil jordan_block(std::size_t size, const GaussianRational& theta);
/// Same block with the roles of a and b exchanged (a degenerate).
SkewPencil jordan_block_at_infinity(std::size_t size);
SkewPencil direct_sum(const SkewPencil& x, const SkewPencil& y);
SkewPencil congruence(const SkewPencil& p, const Matrix& g);

}  // namespace bihamil
