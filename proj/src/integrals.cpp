#include "bihamil/integrals.hpp"

#include "bihamil/errors.hpp"
#include "bihamil/orbits.hpp"
#include "bihamil/subspace.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace bihamil {

bool IntegralFamily::add(MultiPoly f, std::string tag) {
  if (f.is_zero() || std::find(members.begin(), members.end(), f) != members.end()) return false;
  members.push_back(std::move(f));
  provenance.push_back(std::move(tag));
  return true;
}

namespace {

// Sparse vectors keyed by K; linear relations among inserted vectors are found
// by elimination on the leading key.
template <class K>
class RelationFinder {
 public:
  using Sparse = std::map<K, GaussianRational>;
  using Combo = std::map<std::size_t, GaussianRational>;

  /// Relation sum combo[id] v_id = 0 if v reduces to zero, else nullopt.
  std::optional<Combo> insert(Sparse v, std::size_t id) {
    Combo combo{{id, GaussianRational(1)}};
    while (!v.empty()) {
      auto lead = v.begin();
      auto it = rows_.find(lead->first);
      if (it == rows_.end()) {
        const K key = lead->first;
        rows_.emplace(key, Row{std::move(v), std::move(combo)});
        return std::nullopt;
      }
      const GaussianRational f = lead->second / it->second.vec.begin()->second;
      axpy(v, it->second.vec, f);
      axpy(combo, it->second.combo, f);
    }
    return combo;
  }

 private:
  template <class M>
  static void axpy(M& dst, const M& src, const GaussianRational& f) {
    for (const auto& [k, x] : src) {
      auto [it, fresh] = dst.try_emplace(k, GaussianRational(0));
      it->second -= f * x;
      if (it->second.is_zero()) dst.erase(it);
    }
  }

  struct Row {
    Sparse vec;
    Combo combo;
  };
  std::map<K, Row> rows_;
};

// Exponent vectors of degree d in the first `holo` of `vars` variables, z_1^d first.
void monomials(std::size_t holo, std::size_t vars, unsigned d, std::size_t from, Exponents& cur,
               std::vector<Exponents>& out) {
  if (from == holo - 1) {
    cur[from] = static_cast<std::uint16_t>(d);
    out.push_back(cur);
    cur[from] = 0;
    return;
  }
  for (unsigned k = d + 1; k-- > 0;) {
    cur[from] = static_cast<std::uint16_t>(k);
    monomials(holo, vars, d - k, from + 1, cur, out);
  }
  cur[from] = 0;
}

std::vector<Exponents> monomials(std::size_t holo, std::size_t vars, unsigned d) {
  std::vector<Exponents> out;
  Exponents cur(vars, 0);
  if (holo > 0) monomials(holo, vars, d, 0, cur, out);
  return out;
}

// Homogeneous Casimirs of degree d as a basis of the solution space.
std::vector<MultiPoly> homogeneous_casimirs(const BivectorField& c, unsigned d) {
  const VarLayout layout = c.layout();
  const std::size_t n = c.dim();
  auto mons = monomials(n, layout.num_vars(), d);
  std::vector<MultiPoly> coeff;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) coeff.push_back(c.coeff(i, j));

  using Key = std::pair<std::size_t, Exponents>;
  RelationFinder<Key> finder;
  std::vector<MultiPoly> out;
  for (std::size_t id = 0; id < mons.size(); ++id) {
    MultiPoly m = MultiPoly::monomial(layout, mons[id], 1);
    std::map<Key, GaussianRational> col;
    for (std::size_t i = 0; i < n; ++i) {
      MultiPoly di = m.diff(i);
      if (di.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const MultiPoly& cij = coeff[i * n + j];
        if (cij.is_zero()) continue;
        const MultiPoly prod = di * cij;
        for (const auto& [e, x] : prod.terms()) {
          auto [it, fresh] = col.try_emplace(Key{j, e}, GaussianRational(0));
          it->second += x;
          if (it->second.is_zero()) col.erase(it);
        }
      }
    }
    if (auto rel = finder.insert(std::move(col), id)) {
      MultiPoly g(layout);
      for (const auto& [k, x] : *rel) g += MultiPoly::monomial(layout, mons[k], x);
      out.push_back(std::move(g));
    }
  }
  return out;
}

// Products of generators whose degrees add up to d.
void products(const std::vector<MultiPoly>& gens, const std::vector<unsigned>& degs, unsigned d, std::size_t from,
              const MultiPoly& acc, std::vector<MultiPoly>& out) {
  if (d == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t k = from; k < gens.size(); ++k)
    if (degs[k] <= d) products(gens, degs, d - degs[k], k, acc * gens[k], out);
}

std::map<Exponents, GaussianRational> as_sparse(const MultiPoly& p) { return {p.terms().begin(), p.terms().end()}; }

// Rank of B(z) over the scheduled points, stopping after dim+1 samples without growth.
std::size_t generic_rank_of(const BivectorField& c) {
  PointSchedule s(c.dim(), 42, 10);
  std::size_t best = 0, stable = 0;
  for (std::size_t k = 0; k < 16 * (c.dim() + 1) && stable <= c.dim(); ++k) {
    std::size_t r = rank_exact(evaluate_at(c, s.next()));
    if (r > best) {
      best = r;
      stable = 0;
    } else {
      ++stable;
    }
  }
  return best;
}

BivectorField pencil_member(const CanonicalPair& pair, const LambdaPair& l) {
  return pair.c().scaled(l.l1) + pair.c_tilde().scaled(l.l2);
}

}  // namespace

std::vector<MultiPoly> casimir_basis(const BivectorField& c, unsigned degree) {
  if (degree < 1) throw std::invalid_argument("Casimir degree bound must be at least 1");
  if (!c.is_linear_holomorphic()) throw std::invalid_argument("Casimir search needs a linear holomorphic bivector field");
  std::vector<MultiPoly> gens;
  std::vector<unsigned> degs;
  for (unsigned d = 1; d <= degree; ++d) {
    RelationFinder<Exponents> finder;
    std::size_t id = 0;
    std::vector<MultiPoly> prods;
    products(gens, degs, d, 0, MultiPoly::constant(c.layout(), 1), prods);
    for (const auto& p : prods) finder.insert(as_sparse(p), id++);
    for (auto& g : homogeneous_casimirs(c, d)) {
      if (finder.insert(as_sparse(g), id++)) continue;
      gens.push_back(std::move(g));
      degs.push_back(d);
    }
  }
  return gens;
}

std::vector<MultiPoly> casimir_basis(const CanonicalPair& pair, unsigned degree) {
  return casimir_basis(pair.c(), degree);
}

MultiPoly tilde(const MultiPoly& g) {
  if (!g.is_holomorphic()) throw std::invalid_argument("tilde needs a holomorphic polynomial");
  MultiPoly h = g.layout().mixed ? g : g.to_mixed();
  const VarLayout layout = h.layout();
  MultiPoly out(layout, h.degree_cap());
  for (std::size_t i = 0; i < layout.holo; ++i) {
    MultiPoly d = h.diff(i);
    if (!d.is_zero()) out += d.conjugate() * MultiPoly::variable(layout, i);
  }
  return out;
}

MultiPoly compose_phi_lambda(const MultiPoly& g, const LambdaPair& l) {
  if (l.is_zero()) throw std::invalid_argument("phi_lambda needs lambda != 0");
  if (!g.is_holomorphic()) throw std::invalid_argument("phi_lambda composition needs a holomorphic polynomial");
  MultiPoly h = g.layout().mixed ? g : g.to_mixed();
  const VarLayout layout = h.layout();
  const std::size_t n = layout.holo;
  std::vector<MultiPoly> images;
  for (std::size_t k = 0; k < n; ++k)
    images.push_back(MultiPoly::variable(layout, k).scaled(l.l1) + MultiPoly::conj_variable(layout, k).scaled(l.l2));
  for (std::size_t k = 0; k < n; ++k) images.push_back(images[k].conjugate());
  return h.substitute(images);
}

IntegralFamily translation_family(const BivectorField& c, const Vec& a, unsigned degree,
                                  const std::vector<LambdaPair>& lambdas) {
  if (a.size() != c.dim()) throw std::invalid_argument("translation point has the wrong dimension");
  IntegralFamily fam;
  fam.degree_bound = degree;
  const VarLayout layout = c.layout();
  if (c.is_zero()) {
    for (std::size_t k = 0; k < c.dim(); ++k) fam.add(MultiPoly::variable(layout, k), "holomorphic-casimir");
    fam.warnings.push_back("zero bivector: every function is a Casimir");
    return fam;
  }
  if (rank_exact(evaluate_at(c, a)) < generic_rank_of(c)) throw PreconditionError("translation point is singular");
  auto gens = casimir_basis(c, degree);
  if (gens.empty()) fam.warnings.push_back("no polynomial Casimirs up to degree " + std::to_string(degree));
  for (const auto& g : gens) fam.add(g, "holomorphic-casimir");
  for (const auto& l : lambdas) {
    if (l.l1.is_zero() || l.l2.is_zero()) continue;
    const GaussianRational t = l.l2 / l.l1;
    std::vector<MultiPoly> images;
    for (std::size_t k = 0; k < layout.num_vars(); ++k) {
      MultiPoly v = MultiPoly::variable(layout, k);
      if (k < c.dim()) v += MultiPoly::constant(layout, t * a[k]);
      else v += MultiPoly::constant(layout, (t * a[k - c.dim()]).conj());
      images.push_back(std::move(v));
    }
    for (const auto& g : gens) fam.add(g.substitute(images), "translation(t=" + to_string(t) + ")");
  }
  return fam;
}

IntegralFamily family_F1(const CanonicalPair& pair, unsigned degree, const std::vector<LambdaPair>& lambdas) {
  IntegralFamily fam;
  fam.degree_bound = degree;
  if (pair.c().is_zero()) {
    fam.warnings.push_back("abelian algebra: c vanishes and every function is a Casimir");
    return fam;
  }
  auto gens = casimir_basis(pair, degree);
  if (gens.empty()) fam.warnings.push_back("no polynomial Casimirs up to degree " + std::to_string(degree));
  for (const auto& g : gens) fam.add(g, "holomorphic-casimir");
  for (const auto& g : gens) fam.add(tilde(g), "tilde");
  for (const auto& l : lambdas) {
    if (l.l1.is_zero() || l.l2.is_zero()) continue;
    for (const auto& g : gens) fam.add(compose_phi_lambda(g, l), "phi-lambda" + to_string(l));
  }
  return fam;
}

bool involutivity_check(const IntegralFamily& fam, const CanonicalPair& pair, const std::vector<LambdaPair>& lambdas,
                        const std::vector<Vec>& points) {
  for (const auto& l : lambdas) {
    BivectorField cl = pencil_member(pair, l);
    for (std::size_t a = 0; a < fam.size(); ++a) {
      VectorField xa = hamiltonian_field(cl, fam.members[a]);
      for (std::size_t b = a + 1; b < fam.size(); ++b) {
        MultiPoly br = apply_field(xa, fam.members[b]);
        if (br.is_zero()) continue;
        for (const auto& z : points)
          if (!br.evaluate(z).is_zero()) return false;
      }
    }
  }
  return true;
}

bool g0_invariance_check(const MultiPoly& f, const CanonicalPair& pair, const std::vector<Vec>& points) {
  for (std::size_t i = 0; i < pair.dim(); ++i) {
    MultiPoly d = apply_field(orbit_generator(pair, i), f);
    if (d.is_zero()) continue;
    for (const auto& z : points)
      if (!d.evaluate(z).is_zero()) return false;
  }
  return true;
}

namespace {

// Rows d f and d conj(f) restricted to the z-directions; spans the same space as d Re f, d Im f.
std::vector<Vec> holomorphic_differentials(const IntegralFamily& fam, const Vec& z) {
  std::vector<Vec> rows;
  const std::size_t n = z.size();
  for (const auto& f : fam.members)
    for (const MultiPoly& h : {f, f.conjugate()}) {
      Vec row;
      for (std::size_t i = 0; i < n; ++i) row.push_back(h.diff(i).evaluate(z));
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace

std::size_t differential_rank(const IntegralFamily& fam, const Vec& z) {
  return span_dim(holomorphic_differentials(fam, z), z.size());
}

LagrangianCheck cr_lagrangian(const IntegralFamily& fam, const CanonicalPair& pair, const Vec& z) {
  if (in_kronecker_irregularity(pair, z)) throw PreconditionError("point lies in the irregularity set");
  LagrangianCheck out;
  LeafData leaf = leaf_restrict(pair, z);
  const std::size_t m = leaf.s.rows();
  out.leaf_dim = m;
  auto rows = holomorphic_differentials(fam, z);
  Matrix d = rows.empty() ? Matrix(1, m) : Matrix::from_rows(rows, z.size()) * leaf.basis;
  auto ker = kernel_basis(d);
  out.kernel_dim = ker.size();
  out.isotropic = true;
  for (std::size_t a = 0; a < ker.size() && out.isotropic; ++a)
    for (std::size_t b = a + 1; b < ker.size(); ++b)
      if (!dot(ker[a], leaf.omega * ker[b]).is_zero()) {
        out.isotropic = false;
        break;
      }
  out.lagrangian = out.isotropic && 2 * out.kernel_dim == m;
  return out;
}

bool cr_lagrangian_check(const IntegralFamily& fam, const CanonicalPair& pair, const Vec& z) {
  return cr_lagrangian(fam, pair, z).lagrangian;
}

}  // namespace bihamil
