#include "bihamil/orbits.hpp"

#include "bihamil/errors.hpp"
#include "bihamil/subspace.hpp"

#include <stdexcept>

namespace bihamil {

namespace {

// u in C^n as a vector of R^2n (entries are real Gaussian rationals).
Vec realify(const Vec& u) {
  Vec out;
  out.reserve(2 * u.size());
  for (const auto& x : u) out.emplace_back(x.re());
  for (const auto& x : u) out.emplace_back(x.im());
  return out;
}

Vec complexify(const Vec& r) {
  const std::size_t n = r.size() / 2;
  Vec out;
  for (std::size_t k = 0; k < n; ++k) out.emplace_back(r[k].re(), r[n + k].re());
  return out;
}

Vec times_i(const Vec& u) { return scaled(u, GaussianRational::i()); }

// Column coordinates of each vector in the basis given by the columns of e.
Matrix coordinates_in(const Matrix& e, const std::vector<Vec>& vs) {
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < e.cols(); ++j) basis.push_back(e.col(j));
  std::vector<Vec> cols;
  for (const auto& v : vs) {
    auto a = coordinates(basis, v, e.rows());
    if (!a) throw InternalInconsistency("tangent vector outside the leaf");
    cols.push_back(*a);
  }
  if (cols.empty()) return Matrix(e.cols(), 0);
  return Matrix::from_columns(cols, e.cols());
}

// dim(U ∩ U^perp) for U spanned by the columns of a, under the form w.
std::size_t radical_dim(const Matrix& a, const Matrix& w) {
  if (a.cols() == 0) return 0;
  return a.cols() - rank_exact(a.transpose() * w * a);
}

void require_off_sing(const CanonicalPair& pair, const Vec& z) {
  if (in_sing(pair, z)) throw PreconditionError("point lies in Sing");
}

}  // namespace

OrbitFrame orbit_tangent(const CanonicalPair& pair, const Vec& z) {
  OrbitFrame f;
  f.z = z;
  const std::size_t n = pair.dim();
  Matrix c = pair.c_matrix(z);
  // The generator of z_i at z is row i of C(z).
  std::vector<Vec> gens, real_gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(c.row(i));
    real_gens.push_back(realify(gens.back()));
  }
  for (std::size_t i : independent_indices(real_gens, 2 * n)) f.real_tangent.push_back(gens[i]);
  f.orbit_dim = f.real_tangent.size();
  f.leaf_10_basis = image_basis(c);

  std::vector<Vec> t, jt;
  for (const auto& u : f.real_tangent) {
    t.push_back(realify(u));
    jt.push_back(realify(times_i(u)));
  }
  std::vector<Vec> cr;
  for (const auto& r : intersect_subspaces(t, jt, 2 * n)) cr.push_back(complexify(r));
  f.cr_tangent_10 = independent_subset(cr, n);
  f.cr_dim = f.cr_tangent_10.size();
  if (2 * f.cr_dim != cr.size()) throw InternalInconsistency("T ∩ JT is not a complex subspace");
  return f;
}

bool cr_genericity_check(const OrbitFrame& frame) {
  const std::size_t n = frame.z.size();
  std::vector<Vec> sum;
  for (const auto& u : frame.real_tangent) {
    sum.push_back(realify(u));
    sum.push_back(realify(times_i(u)));
  }
  std::vector<Vec> leaf;
  for (const auto& u : frame.leaf_10_basis) {
    leaf.push_back(realify(u));
    leaf.push_back(realify(times_i(u)));
  }
  const std::size_t d = span_dim(sum, 2 * n);
  if (d != span_dim(leaf, 2 * n)) return false;
  for (const auto& v : sum)
    if (!in_span(leaf, v, 2 * n)) return false;
  return true;
}

LeafData leaf_restrict(const CanonicalPair& pair, const Vec& z) {
  Matrix c = pair.c_matrix(z);
  auto cols = image_basis(c);
  if (cols.empty()) throw PreconditionError("C(z) vanishes; the leaf is a point");
  const std::size_t m = cols.size(), n = c.rows();
  LeafData out;
  // Full rank: the leaf is everything and the standard basis is the natural choice.
  out.basis = m == n ? Matrix::identity(n) : Matrix::from_columns(cols, n);
  // Left inverse of E from an invertible m x m row block.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(out.basis.row(i));
  auto idx = independent_indices(rows, m);
  std::vector<Vec> picked;
  for (std::size_t i : idx) picked.push_back(rows[i]);
  Matrix block_inv = inverse(Matrix::from_rows(picked, m));
  Matrix left(m, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) left(a, idx[b]) = block_inv(a, b);
  out.s = left * c * left.transpose();
  if (out.basis * out.s * out.basis.transpose() != c) throw InternalInconsistency("leaf restriction does not reproduce C(z)");
  out.omega = inverse(out.s);
  return out;
}

bool cr_isotropy_check(const CanonicalPair& pair, const Vec& z) {
  require_off_sing(pair, z);
  OrbitFrame f = orbit_tangent(pair, z);
  if (f.cr_dim == 0) return true;
  LeafData leaf = leaf_restrict(pair, z);
  Matrix a = coordinates_in(leaf.basis, f.cr_tangent_10);
  Matrix gram = a.transpose() * leaf.omega * a;
  return gram == Matrix(gram.rows(), gram.cols());
}

bool on_cross(const LambdaPair& l) {
  const GaussianRational i = GaussianRational::i();
  return (l.l1 - i * l.l2).is_zero() || (l.l1 + i * l.l2).is_zero();
}

KNumbers k_numbers(const CanonicalPair& pair, const Vec& z, const std::vector<LambdaPair>& lambdas) {
  require_off_sing(pair, z);
  for (const auto& l : lambdas)
    if (on_cross(l)) throw std::invalid_argument("lambda " + to_string(l) + " lies on the cross l1 = ±i l2");
  KNumbers out;
  OrbitFrame f = orbit_tangent(pair, z);
  if (f.leaf_10_basis.empty()) {
    for (const auto& l : lambdas) out.k_lambda.emplace_back(l, 0);
    return out;
  }
  LeafData leaf = leaf_restrict(pair, z);
  const std::size_t m = leaf.s.rows();
  out.k = radical_dim(coordinates_in(leaf.basis, f.cr_tangent_10), leaf.omega);

  // Complexified real tangent inside T^{1,0} ⊕ T^{0,1}: u ↦ (a, conj a).
  Matrix a = coordinates_in(leaf.basis, f.real_tangent);
  Matrix tc = vstack(a, a.conjugate());
  const GaussianRational half(Rational(1, 2)), i = GaussianRational::i();
  for (const auto& l : lambdas) {
    GaussianRational t1 = half * (l.l1 - i * l.l2), t2 = half * (l.l1 + i * l.l2);
    Matrix w(2 * m, 2 * m);
    Matrix o1 = leaf.omega.scaled(t1.inverse()), o2 = leaf.omega.conjugate().scaled(t2.inverse());
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t s = 0; s < m; ++s) {
        w(r, s) = o1(r, s);
        w(m + r, m + s) = o2(r, s);
      }
    out.k_lambda.emplace_back(l, radical_dim(tc, w));
  }
  return out;
}

Pushforward pushforward_at_point(std::size_t v_dim, const Matrix& c, const std::vector<Vec>& k) {
  if (c.rows() != v_dim || c.cols() != v_dim || !c.is_skew())
    throw std::invalid_argument("pushforward needs a skew matrix of the ambient size");
  if (span_dim(k, v_dim) != k.size()) throw std::invalid_argument("K must be an independent family");
  Pushforward out;
  for (const auto& xi : annihilator(k, v_dim)) out.image.push_back(c.transpose() * xi);
  out.image = independent_subset(out.image, v_dim);
  out.intersection = intersect_subspaces(k, out.image, v_dim);
  out.d = out.image.size() - out.intersection.size();

  std::vector<Vec> span = k;
  for (std::size_t j = 0; j < v_dim && span.size() < v_dim; ++j) {
    Vec e(v_dim, GaussianRational(0));
    e[j] = 1;
    if (in_span(span, e, v_dim)) continue;
    span.push_back(e);
    out.complement.push_back(j);
  }
  // Coordinates along the complement give the projection V -> V/K.
  Matrix basis_inv = inverse(Matrix::from_columns(span, v_dim));
  const std::size_t q = out.complement.size();
  Matrix p(q, v_dim);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t s = 0; s < v_dim; ++s) p(r, s) = basis_inv(k.size() + r, s);
  out.reduced = p * c * p.transpose();
  if (rank_exact(out.reduced) != out.d) throw InternalInconsistency("pushforward rank differs from dim c#(K^perp)/(K ∩ c#(K^perp))");
  return out;
}

ReductionReport reduction_completeness(const CanonicalPair& pair, const Vec& z,
                                       const std::vector<LambdaPair>& lambdas) {
  require_off_sing(pair, z);
  ReductionReport rep;
  rep.z = z;
  OrbitFrame f = orbit_tangent(pair, z);
  rep.orbit_dim = f.orbit_dim;
  rep.cr_dim = f.cr_dim;
  rep.quotient_dim = 2 * f.leaf_10_basis.size() - f.orbit_dim;
  KNumbers kn = k_numbers(pair, z, lambdas);
  rep.k = kn.k;
  rep.k_lambda = kn.k_lambda;
  rep.in_irregularity = in_kronecker_irregularity(pair, z);

  if (!f.leaf_10_basis.empty()) {
    LeafData leaf = leaf_restrict(pair, z);
    const std::size_t m = leaf.s.rows();
    Matrix a = coordinates_in(leaf.basis, f.real_tangent);
    Matrix tc = vstack(a, a.conjugate());
    std::vector<Vec> kc;
    for (std::size_t j = 0; j < tc.cols(); ++j) kc.push_back(tc.col(j));
    const GaussianRational half(Rational(1, 2)), i = GaussianRational::i();
    for (const auto& l : lambdas) {
      GaussianRational t1 = half * (l.l1 - i * l.l2), t2 = half * (l.l1 + i * l.l2);
      Matrix cl(2 * m, 2 * m);
      Matrix s1 = leaf.s.scaled(t1), s2 = leaf.s.conjugate().scaled(t2);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) {
          cl(r, s) = s1(r, s);
          cl(m + r, m + s) = s2(r, s);
        }
      std::size_t d = pushforward_at_point(2 * m, cl, kc).d;
      rep.d_lambda.emplace_back(l, d);
      rep.reduced_generic_rank = std::max(rep.reduced_generic_rank, d);
    }
  }

  bool constant = true;
  for (const auto& [l, kl] : rep.k_lambda) constant = constant && kl == rep.k;
  rep.complete = constant && !rep.in_irregularity;
  rep.minimal = rep.k == rep.cr_dim;
  return rep;
}

}  // namespace bihamil
