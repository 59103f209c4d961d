#include "bihamil/canonical.hpp"

#include "bihamil/errors.hpp"
#include "bihamil/subspace.hpp"

#include <stdexcept>

namespace bihamil {

PointSchedule::PointSchedule(std::size_t dim, std::uint64_t seed, long height)
    : dim_(dim), height_(height), rng_(seed) {
  if (height < 1) throw std::invalid_argument("coefficient height must be positive");
}

Rational PointSchedule::draw() {
  // Plain modulo reduction keeps the stream identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(2 * height_ + 1);
  long num = static_cast<long>(rng_() % span) - height_;
  long den = 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(height_));
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Vec PointSchedule::next() {
  Vec z;
  z.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    Rational re = draw();
    Rational im = draw();
    z.emplace_back(re, im);
  }
  return z;
}

std::vector<Vec> PointSchedule::take(std::size_t count) {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(next());
  return out;
}

std::vector<Vec> point_schedule(std::size_t dim, std::size_t count, std::uint64_t seed, long height) {
  return PointSchedule(dim, seed, height).take(count);
}

namespace {

// Max rank over scheduled points, stopping once it survived dim+1 further samples.
template <class F>
std::size_t stable_max_rank(std::size_t n, std::uint64_t seed, long height, F rank_at) {
  PointSchedule s(n, seed, height);
  std::size_t best = 0, stable = 0;
  for (std::size_t k = 0; k < 16 * (n + 1) && stable <= n; ++k) {
    std::size_t r = rank_at(s.next());
    if (r > best) {
      best = r;
      stable = 0;
    } else {
      ++stable;
    }
  }
  return best;
}

}  // namespace

CanonicalPair::CanonicalPair(LieAlgebraSpec g, std::uint64_t seed, long height)
    : g_(std::move(g)), c_(lie_poisson(g_, VariableKind::mixed)), c_tilde_(conjugate_twist(c_)) {
  const std::size_t n = g_.dim();
  generic_rank_c_ = stable_max_rank(n, seed, height, [&](const Vec& z) { return rank_exact(c_matrix(z)); });
  generic_stacked_rank_ = stable_max_rank(n, seed ^ 0x9e3779b97f4a7c15ULL, height,
                                          [&](const Vec& z) { return rank_exact(stacked(z)); });
}

Matrix CanonicalPair::c_matrix(const Vec& z) const {
  const std::size_t n = dim();
  if (z.size() != n) throw std::invalid_argument("point has the wrong dimension");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      GaussianRational v = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational s = g_.structure(i, j, k);
        if (sgn(s) != 0) v += GaussianRational(s) * z[k];
      }
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

Matrix CanonicalPair::stacked(const Vec& z) const { return vstack(c_matrix(z), c_matrix(conjugate(z))); }

SkewPencil CanonicalPair::pencil_at(const Vec& z) const { return {c_matrix(z), c_matrix(conjugate(z))}; }

std::size_t CanonicalPair::rank_g() const {
  if (g_.is_abelian()) throw PreconditionError("abelian algebra: c vanishes and there is no pencil");
  return dim() - generic_rank_c_;
}

std::size_t rank_of_algebra(const CanonicalPair& pair) { return pair.rank_g(); }

bool in_sing(const CanonicalPair& pair, const Vec& z) { return rank_exact(pair.c_matrix(z)) < pair.generic_rank_c(); }

bool in_incompleteness_set(const CanonicalPair& pair, const Vec& z) {
  SkewPencil p = pair.pencil_at(z);
  CompletenessVerdict v = is_complete(p);
  return v.r0 < pair.generic_rank_c() || !v.complete;
}

bool in_kronecker_irregularity(const CanonicalPair& pair, const Vec& z) {
  if (rank_exact(pair.stacked(z)) < pair.generic_stacked_rank()) return true;
  return in_incompleteness_set(pair, z);
}

std::size_t mu(const CanonicalPair& pair, const Vec& z) { return pair.dim() - rank_exact(pair.stacked(z)); }

std::size_t mu_lambda(const CanonicalPair& pair, const Vec& z, const LambdaPair& l) {
  if (l.l1.is_zero() || l.l2.is_zero()) throw std::invalid_argument("mu_lambda needs both lambda components nonzero");
  SkewPencil p = pair.pencil_at(z);
  return intersect_subspaces(kernel_basis(p.a()), kernel_basis(p.member(l)), pair.dim()).size();
}

std::vector<LambdaPair> mixed_lambda_schedule(std::size_t count) {
  std::vector<LambdaPair> out;
  for (std::size_t k = 2; out.size() < count; ++k) out.push_back(scheduled_lambda(k));
  return out;
}

PointClassification classify_point(const CanonicalPair& pair, const Vec& z, std::size_t lambda_samples) {
  PointClassification pc;
  pc.z = z;
  const std::size_t n = pair.dim();
  const std::size_t top = pair.generic_rank_c();
  SkewPencil p = pair.pencil_at(z);
  pc.rank_c = rank_exact(p.a());
  pc.rank_c_tilde = rank_exact(p.b());
  pc.stacked_rank = rank_exact(vstack(p.a(), p.b()));
  pc.in_sing = pc.rank_c < top;

  CompletenessVerdict v = is_complete(p);
  pc.pencil_generic_rank = v.r0;
  pc.all_directions_degenerate = v.r0 < top;
  pc.in_incompleteness = pc.all_directions_degenerate || !v.complete;
  pc.degenerate_directions = v.degenerate_directions;
  pc.in_irregularity = pc.stacked_rank < pair.generic_stacked_rank() || pc.in_incompleteness;

  pc.mu = n - pc.stacked_rank;
  auto ker_a = kernel_basis(p.a());
  for (const auto& l : mixed_lambda_schedule(lambda_samples))
    pc.mu_lambda_samples.emplace_back(l, intersect_subspaces(ker_a, kernel_basis(p.member(l)), n).size());

  if (pc.in_sing && !pc.in_incompleteness) throw InternalInconsistency("point in Sing but outside the incompleteness set");
  if (pc.in_incompleteness && !pc.in_irregularity)
    throw InternalInconsistency("point in the incompleteness set but outside the irregularity set");
  if (!pc.in_incompleteness)
    for (const auto& [l, m] : pc.mu_lambda_samples)
      if (m != pc.mu) throw InternalInconsistency("mu_lambda differs from mu outside the incompleteness set");
  return pc;
}

VectorField orbit_generator(const CanonicalPair& pair, std::size_t i) {
  const auto& layout = pair.c().layout();
  VectorField v = hamiltonian_field(pair.c(), MultiPoly::variable(layout, i));
  const std::size_t n = pair.dim();
  for (std::size_t k = 0; k < n; ++k) v[n + k] = v[k].conjugate();
  return v;
}

}  // namespace bihamil
