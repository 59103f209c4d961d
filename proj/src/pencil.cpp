#include "bihamil/pencil.hpp"

#include "bihamil/errors.hpp"
#include "bihamil/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace bihamil {

LambdaPair LambdaPair::normalized() const {
  if (!l1.is_zero()) return {1, l2 / l1};
  if (!l2.is_zero()) return {0, 1};
  return *this;
}

std::string to_string(const LambdaPair& l) { return "(" + to_string(l.l1) + "," + to_string(l.l2) + ")"; }

bool proportional(const LambdaPair& a, const LambdaPair& b) { return (a.l1 * b.l2 - a.l2 * b.l1).is_zero(); }

LambdaPair scheduled_lambda(std::size_t index) {
  if (index == 0) return {1, 0};
  if (index == 1) return {0, 1};
  return {1, static_cast<long>(index - 1)};
}

std::vector<LambdaPair> lambda_schedule(std::size_t count) {
  std::vector<LambdaPair> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(scheduled_lambda(k));
  return out;
}

SkewPencil::SkewPencil(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) throw std::invalid_argument("pencil matrices differ in size");
  if (!a_.is_skew() || !b_.is_skew()) throw std::invalid_argument("pencil matrices must be skew-symmetric");
}

Matrix SkewPencil::member(const LambdaPair& l) const { return a_.scaled(l.l1) + b_.scaled(l.l2); }

std::optional<std::complex<double>> DegenerateDirection::eigenvalue() const {
  if (std::abs(l2) == 0) return std::nullopt;
  return -l1 / l2;
}

std::size_t PencilInvariants::jordan_dim() const {
  std::size_t s = 0;
  for (const auto& j : jordan_part) s += j.dim;
  return s;
}

std::vector<std::size_t> PencilInvariants::kronecker_block_dims() const {
  std::vector<std::size_t> out;
  for (std::size_t m : kronecker_indices) out.push_back(2 * m + 1);
  return out;
}

namespace {

struct Scan {
  std::size_t r0 = 0;
  std::size_t anchor_index = 0;
};

Scan scan_ranks(const SkewPencil& p) {
  Scan s;
  const std::size_t samples = p.dim() + 3;
  bool found = false;
  for (std::size_t k = 0; k < samples; ++k) {
    std::size_t r = rank_exact(p.member(scheduled_lambda(k)));
    if (!found || r > s.r0) {
      s.r0 = r;
      s.anchor_index = k;
      found = true;
    }
  }
  return s;
}

std::vector<Vec> f0_with(const SkewPencil& p, std::size_t r0) {
  const std::size_t n = p.dim();
  std::vector<Vec> span;
  std::size_t stable = 0;
  const std::size_t limit = 4 * n + 16;
  for (std::size_t k = 0; k < limit && span.size() < n; ++k) {
    Matrix m = p.member(scheduled_lambda(k));
    if (rank_exact(m) != r0) continue;
    std::size_t before = span.size();
    for (auto& v : kernel_basis(m)) span.push_back(std::move(v));
    span = independent_subset(span, n);
    if (span.size() == before) {
      if (++stable >= std::max<std::size_t>(n, 1)) break;
    } else {
      stable = 0;
    }
  }
  return span;
}

std::vector<Vec> f0_tilde_with(const SkewPencil& p, const std::vector<Vec>& f0, const LambdaPair& anchor) {
  Matrix at = p.member(anchor).transpose();
  std::vector<Vec> images;
  for (const auto& xi : f0) images.push_back(at * xi);
  return annihilator(independent_subset(images, p.dim()), p.dim());
}

RecursionOperator recursion_with(const SkewPencil& p, const Scan& s) {
  const std::size_t n = p.dim();
  RecursionOperator r;
  r.anchor = scheduled_lambda(s.anchor_index);
  r.probe = scheduled_lambda(s.anchor_index + 1);
  if (rank_exact(p.member(r.anchor)) != s.r0) throw InternalInconsistency("recursion operator anchor is degenerate");
  r.f0 = f0_with(p, s.r0);
  std::vector<Vec> tilde = f0_tilde_with(p, r.f0, r.anchor);

  for (const auto& v : r.f0)
    if (!in_span(tilde, v, n)) throw InternalInconsistency("F0 is not contained in its skew-orthogonal complement");

  std::vector<Vec> basis = r.f0;
  for (const auto& v : tilde) {
    basis.push_back(v);
    if (span_dim(basis, n) == basis.size())
      r.complement.push_back(v);
    else
      basis.pop_back();
  }
  if (basis.size() != tilde.size()) throw InternalInconsistency("quotient basis of F0~/F0 has the wrong size");

  const Matrix a = p.member(r.anchor);
  const Matrix b = p.member(r.probe);
  const std::size_t q = r.complement.size();
  r.phi = Matrix(q, q);
  for (std::size_t j = 0; j < q; ++j) {
    auto eta = solve(a, b * r.complement[j]);
    if (!eta) throw InternalInconsistency("recursion operator: b(F0~) not inside a(F0~)");
    auto coords = coordinates(basis, *eta, n);
    if (!coords) throw InternalInconsistency("recursion operator: image leaves F0~");
    for (std::size_t i = 0; i < q; ++i) r.phi(i, j) = (*coords)[r.f0.size() + i];
  }
  return r;
}

LambdaPair exact_direction(const RecursionOperator& r, const GaussianRational& alpha) {
  return LambdaPair{r.probe.l1 - alpha * r.anchor.l1, r.probe.l2 - alpha * r.anchor.l2}.normalized();
}

DegenerateDirection make_direction(const SkewPencil& p, std::size_t r0, const RecursionOperator& r, const UPoly& factor,
                                   std::complex<long double> root) {
  DegenerateDirection d;
  if (auto exact = recover_exact_root(factor, root)) {
    LambdaPair l = exact_direction(r, *exact);
    if (rank_exact(p.member(l)) >= r0)
      throw InternalInconsistency("eigenvalue of the recursion operator gives a nondegenerate member");
    d.exact = l;
    d.l1 = l.l1.to_complex();
    d.l2 = l.l2.to_complex();
    d.residual = 0;
    return d;
  }
  std::complex<double> alpha(static_cast<double>(root.real()), static_cast<double>(root.imag()));
  std::complex<double> l1 = r.probe.l1.to_complex() - alpha * r.anchor.l1.to_complex();
  std::complex<double> l2 = r.probe.l2.to_complex() - alpha * r.anchor.l2.to_complex();
  if (std::abs(l1) > 1e-12 * std::max(1.0, std::abs(l2))) {
    d.l2 = l2 / l1;
    d.l1 = 1;
  } else {
    d.l1 = 0;
    d.l2 = 1;
  }
  d.residual = static_cast<double>(std::abs(eval(factor, root)));
  return d;
}

bool same_direction(const DegenerateDirection& x, const DegenerateDirection& y) {
  if (x.exact && y.exact) return *x.exact == *y.exact;
  return std::abs(x.l1 - y.l1) < 1e-9 && std::abs(x.l2 - y.l2) < 1e-9;
}

bool direction_less(const DegenerateDirection& x, const DegenerateDirection& y) {
  if (x.exact.has_value() != y.exact.has_value()) return x.exact.has_value();
  auto key = [](const DegenerateDirection& d) {
    return std::tuple(d.l1.real(), d.l1.imag(), d.l2.real(), d.l2.imag());
  };
  return key(x) < key(y);
}

}  // namespace

std::size_t generic_rank(const SkewPencil& p) { return scan_ranks(p).r0; }

std::vector<Vec> f0_subspace(const SkewPencil& p) { return f0_with(p, scan_ranks(p).r0); }

std::vector<Vec> f0_tilde(const SkewPencil& p) {
  Scan s = scan_ranks(p);
  return f0_tilde_with(p, f0_with(p, s.r0), scheduled_lambda(s.anchor_index));
}

RecursionOperator recursion_operator(const SkewPencil& p) { return recursion_with(p, scan_ranks(p)); }

CompletenessVerdict is_complete(const SkewPencil& p) {
  Scan s = scan_ranks(p);
  RecursionOperator r = recursion_with(p, s);
  CompletenessVerdict v;
  v.r0 = s.r0;
  v.anchor = r.anchor;
  v.probe = r.probe;
  v.f0_dim = r.f0.size();
  v.f0_tilde_dim = r.f0.size() + r.complement.size();
  v.complete = r.complement.empty();
  v.charpoly = characteristic_polynomial(r.phi);

  for (const auto& [factor, mult] : squarefree_decomposition(v.charpoly))
    for (auto root : approximate_roots(factor)) v.degenerate_directions.push_back(make_direction(p, s.r0, r, factor, root));

  for (const LambdaPair& axis : {LambdaPair{1, 0}, LambdaPair{0, 1}}) {
    if (rank_exact(p.member(axis)) >= s.r0) continue;
    if (v.complete) throw InternalInconsistency("complete pencil with a degenerate axis member");
    DegenerateDirection d;
    d.exact = axis;
    d.l1 = axis.l1.to_complex();
    d.l2 = axis.l2.to_complex();
    bool seen = false;
    for (const auto& e : v.degenerate_directions) seen = seen || same_direction(e, d);
    if (!seen) v.degenerate_directions.push_back(d);
  }
  std::stable_sort(v.degenerate_directions.begin(), v.degenerate_directions.end(), direction_less);
  return v;
}

std::size_t trivial_kronecker_dim_at(const SkewPencil& p, const LambdaPair& l) {
  const std::size_t n = p.dim();
  return intersect_subspaces(kernel_basis(p.a()), kernel_basis(p.member(l)), n).size();
}

std::size_t trivial_kronecker_dim(const SkewPencil& p) {
  CompletenessVerdict v = is_complete(p);
  if (!v.complete) throw PreconditionError("trivial Kronecker dimension needs a pencil without Jordan blocks");
  std::vector<std::size_t> values;
  for (std::size_t k = 2; values.size() < 2; ++k) {
    LambdaPair l = scheduled_lambda(k);
    if (rank_exact(p.member(l)) == v.r0) values.push_back(trivial_kronecker_dim_at(p, l));
  }
  if (values[0] != values[1]) throw InternalInconsistency("trivial Kronecker dimension depends on lambda");
  return values[0];
}

std::vector<Vec> kernel_at(const SkewPencil& p, const LambdaPair& l) {
  if (l.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  return kernel_basis(p.member(l));
}

std::size_t toeplitz_nullity(const SkewPencil& p, std::size_t k) {
  if (k == 0) return 0;
  const std::size_t n = p.dim();
  Matrix s((k + 1) * n, k * n);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        s(j * n + r, j * n + c) = p.a()(r, c);
        s((j + 1) * n + r, j * n + c) = p.b()(r, c);
      }
  return k * n - rank_exact(s);
}

PencilInvariants kronecker_invariants(const SkewPencil& p) {
  const std::size_t n = p.dim();
  Scan s = scan_ranks(p);
  PencilInvariants inv;
  inv.dim = n;
  inv.generic_rank = s.r0;

  // #{i : m_i <= k} = nu_{k+1} - nu_k.
  const std::size_t target = n - s.r0;
  std::size_t nu_prev = 0, count_prev = 0;
  for (std::size_t k = 0; count_prev < target; ++k) {
    if (2 * k + 1 > n) throw InternalInconsistency("minimal index search did not terminate");
    std::size_t nu = toeplitz_nullity(p, k + 1);
    if (nu < nu_prev) throw InternalInconsistency("block-Toeplitz nullities decreased");
    std::size_t count = nu - nu_prev;
    if (count < count_prev || count > target) throw InternalInconsistency("inconsistent minimal index counts");
    for (std::size_t c = count_prev; c < count; ++c) inv.kronecker_indices.push_back(k);
    nu_prev = nu;
    count_prev = count;
  }
  std::sort(inv.kronecker_indices.rbegin(), inv.kronecker_indices.rend());
  inv.trivial_count = static_cast<std::size_t>(std::count(inv.kronecker_indices.begin(), inv.kronecker_indices.end(), 0));

  RecursionOperator r = recursion_with(p, s);
  const std::size_t q = r.complement.size();
  UPoly charpoly = characteristic_polynomial(r.phi);
  for (const auto& [factor, mult] : squarefree_decomposition(charpoly)) {
    const std::size_t deg = static_cast<std::size_t>(degree(factor));
    for (auto root : approximate_roots(factor)) {
      JordanComponent comp;
      comp.direction = make_direction(p, s.r0, r, factor, root);
      comp.dim = mult;

      // Weyr sequence: kernel dimensions of (Phi - alpha)^j, or of factor(Phi)^j per root.
      std::vector<std::size_t> kdims{0};
      bool divisible = true;
      std::optional<GaussianRational> alpha = recover_exact_root(factor, root);
      UPoly lin = alpha ? UPoly{-*alpha, 1} : factor;
      std::size_t per_root_deg = alpha ? 1 : deg;
      Matrix base = evaluate_matrix(lin, r.phi);
      Matrix power = Matrix::identity(q);
      for (unsigned j = 1; j <= mult; ++j) {
        power = power * base;
        std::size_t null = q - rank_exact(power);
        if (null % per_root_deg != 0) divisible = false;
        kdims.push_back(null / per_root_deg);
      }
      if (divisible && kdims.back() != mult)
        throw InternalInconsistency("generalized eigenspace dimension differs from the algebraic multiplicity");
      comp.blocks_resolved = divisible && alpha.has_value();
      if (divisible) {
        std::vector<std::size_t> w;
        for (std::size_t j = 1; j < kdims.size(); ++j) w.push_back(kdims[j] - kdims[j - 1]);
        w.push_back(0);
        bool paired = true;
        std::vector<std::size_t> blocks;
        for (std::size_t size = mult; size >= 1; --size) {
          std::size_t exact_count = w[size - 1] - w[size];
          if (exact_count % 2 != 0) paired = false;
          for (std::size_t c = 0; c < exact_count / 2; ++c) blocks.push_back(2 * size);
        }
        if (paired)
          comp.block_dims = std::move(blocks);
        else
          comp.blocks_resolved = false;
      }
      inv.jordan_part.push_back(std::move(comp));
    }
  }

  std::size_t kron = 0;
  for (std::size_t m : inv.kronecker_indices) kron += 2 * m + 1;
  inv.dimension_checksum = kron + inv.jordan_dim();
  if (inv.dimension_checksum != n)
    throw InternalInconsistency("block dimensions sum to " + std::to_string(inv.dimension_checksum) + ", expected " +
                                std::to_string(n));
  if (inv.jordan_dim() != q) throw InternalInconsistency("Jordan dimension differs from dim F0~/F0");
  return inv;
}

SkewPencil kronecker_block(std::size_t m) {
  const std::size_t n = 2 * m + 1;
  Matrix a(n, n), b(n, n);
  for (std::size_t i = 0; i < m; ++i) {
    a(i, m + i) = 1;
    a(m + i, i) = -1;
    b(i, m + i + 1) = 1;
    b(m + i + 1, i) = -1;
  }
  return {a, b};
}

namespace {

SkewPencil jordan_from(const Matrix& a1, const Matrix& a2) {
  const std::size_t k = a1.rows();
  Matrix a(2 * k, 2 * k), b(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      a(i, k + j) = a1(i, j);
      a(k + j, i) = -a1(i, j);
      b(i, k + j) = a2(i, j);
      b(k + j, i) = -a2(i, j);
    }
  return {a, b};
}

Matrix jordan_matrix(std::size_t size, const GaussianRational& theta) {
  Matrix j(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    j(i, i) = theta;
    if (i + 1 < size) j(i, i + 1) = 1;
  }
  return j;
}

}  // namespace

SkewPencil jordan_block(std::size_t size, const GaussianRational& theta) {
  return jordan_from(Matrix::identity(size), jordan_matrix(size, theta));
}

SkewPencil jordan_block_at_infinity(std::size_t size) {
  return jordan_from(jordan_matrix(size, 0), Matrix::identity(size));
}

SkewPencil direct_sum(const SkewPencil& x, const SkewPencil& y) {
  const std::size_t n = x.dim(), m = y.dim();
  Matrix a(n + m, n + m), b(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = x.a()(i, j);
      b(i, j) = x.b()(i, j);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      a(n + i, n + j) = y.a()(i, j);
      b(n + i, n + j) = y.b()(i, j);
    }
  return {a, b};
}

SkewPencil congruence(const SkewPencil& p, const Matrix& g) {
  Matrix gt = g.transpose();
  return {g * p.a() * gt, g * p.b() * gt};
}

}  // namespace bihamil
