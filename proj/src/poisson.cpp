#include "bihamil/poisson.hpp"

#include <stdexcept>

namespace bihamil {

std::string to_string(VariableKind kind) {
  switch (kind) {
    case VariableKind::holomorphic: return "holomorphic";
    case VariableKind::mixed: return "mixed";
    case VariableKind::real: return "real";
  }
  return "?";
}

VariableKind parse_variable_kind(const std::string& text) {
  if (text == "holomorphic") return VariableKind::holomorphic;
  if (text == "mixed") return VariableKind::mixed;
  if (text == "real") return VariableKind::real;
  throw std::invalid_argument("unknown variable kind '" + text + "'");
}

// ---------------------------------------------------------------- bivectors

BivectorField::BivectorField(std::size_t dim, VariableKind kind)
    : dim_(dim), kind_(kind), layout_{dim, kind == VariableKind::mixed} {
  upper_.assign(dim * (dim > 0 ? dim - 1 : 0) / 2, MultiPoly(layout_));
}

BivectorField BivectorField::constant(const Matrix& skew, VariableKind kind) {
  if (!skew.is_skew()) throw std::invalid_argument("constant bivector needs a skew matrix");
  BivectorField c(skew.rows(), kind);
  for (std::size_t i = 0; i < c.dim_; ++i)
    for (std::size_t j = i + 1; j < c.dim_; ++j) c.set(i, j, MultiPoly::constant(c.layout_, skew(i, j)));
  return c;
}

std::size_t BivectorField::index(std::size_t i, std::size_t j) const {
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

MultiPoly BivectorField::coeff(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("bivector index out of range");
  if (i == j) return MultiPoly(layout_);
  if (i < j) return upper_[index(i, j)];
  return -upper_[index(j, i)];
}

void BivectorField::set(std::size_t i, std::size_t j, MultiPoly value) {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("bivector index out of range");
  if (!(value.layout() == layout_)) throw std::invalid_argument("coefficient lives in a different ring");
  if (i == j) {
    if (!value.is_zero()) throw std::invalid_argument("diagonal bivector coefficient must vanish");
    return;
  }
  if (i < j)
    upper_[index(i, j)] = std::move(value);
  else
    upper_[index(j, i)] = -value;
}

void BivectorField::add_to(std::size_t i, std::size_t j, const MultiPoly& value) {
  set(i, j, coeff(i, j) + value);
}

bool BivectorField::is_zero() const {
  for (const auto& p : upper_)
    if (!p.is_zero()) return false;
  return true;
}

bool BivectorField::is_linear_holomorphic() const {
  for (const auto& p : upper_)
    if (!p.is_linear_homogeneous() || !p.is_holomorphic()) return false;
  return true;
}

BivectorField BivectorField::operator+(const BivectorField& o) const {
  if (dim_ != o.dim_ || !(layout_ == o.layout_)) throw std::invalid_argument("bivector sum: ring mismatch");
  BivectorField s = *this;
  for (std::size_t k = 0; k < upper_.size(); ++k) s.upper_[k] += o.upper_[k];
  return s;
}

BivectorField BivectorField::scaled(const GaussianRational& s) const {
  BivectorField t = *this;
  for (auto& p : t.upper_) p = p.scaled(s);
  return t;
}

// --------------------------------------------------------------- trivectors

TrivectorField::TrivectorField(std::size_t dim, VarLayout layout) : dim_(dim), layout_(layout) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) count += dim - j - 1;
  coeffs_.assign(count, MultiPoly(layout));
}

std::size_t TrivectorField::index(std::size_t i, std::size_t j, std::size_t k) const {
  std::size_t idx = 0;
  for (std::size_t a = 0; a < i; ++a)
    for (std::size_t b = a + 1; b < dim_; ++b) idx += dim_ - b - 1;
  for (std::size_t b = i + 1; b < j; ++b) idx += dim_ - b - 1;
  return idx + (k - j - 1);
}

const MultiPoly& TrivectorField::coeff_sorted(std::size_t i, std::size_t j, std::size_t k) const {
  if (!(i < j && j < k && k < dim_)) throw std::out_of_range("trivector indices must be strictly increasing");
  return coeffs_[index(i, j, k)];
}

MultiPoly TrivectorField::coeff(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j || j == k || i == k) return MultiPoly(layout_);
  std::size_t idx[3] = {i, j, k};
  int sign = 1;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b + 1 < 3 - a; ++b)
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
  const auto& v = coeff_sorted(idx[0], idx[1], idx[2]);
  return sign > 0 ? v : -v;
}

void TrivectorField::set_sorted(std::size_t i, std::size_t j, std::size_t k, MultiPoly value) {
  if (!(i < j && j < k && k < dim_)) throw std::out_of_range("trivector indices must be strictly increasing");
  coeffs_[index(i, j, k)] = std::move(value);
}

bool TrivectorField::is_zero() const {
  for (const auto& p : coeffs_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<TrivectorField::Component> TrivectorField::nonzero_components() const {
  std::vector<Component> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        const auto& v = coeff_sorted(i, j, k);
        if (!v.is_zero()) out.push_back({i, j, k, v});
      }
  return out;
}

// --------------------------------------------------------------- operations

BivectorField lie_poisson(const LieAlgebraSpec& g, VariableKind kind) {
  if (kind == VariableKind::real) kind = VariableKind::holomorphic;
  BivectorField c(g.dim(), kind);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      MultiPoly p(c.layout());
      for (std::size_t k = 0; k < g.dim(); ++k) {
        Rational s = g.structure(i, j, k);
        if (sgn(s) != 0) p += MultiPoly::variable(c.layout(), k).scaled(GaussianRational(s));
      }
      c.set(i, j, std::move(p));
    }
  return c;
}

BivectorField conjugate_twist(const BivectorField& c) {
  if (c.kind() != VariableKind::mixed) throw std::invalid_argument("conjugate twist needs a mixed-variable field");
  if (!c.is_linear_holomorphic())
    throw std::invalid_argument("conjugate twist needs linear holomorphic coefficients");
  const auto& layout = c.layout();
  std::vector<MultiPoly> images;
  for (std::size_t k = 0; k < layout.holo; ++k) images.push_back(MultiPoly::conj_variable(layout, k));
  for (std::size_t k = 0; k < layout.holo; ++k) images.push_back(MultiPoly::conj_variable(layout, k));
  BivectorField t(c.dim(), c.kind());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j) t.set(i, j, c.coeff(i, j).substitute(images));
  return t;
}

TrivectorField schouten_bracket(const BivectorField& c1, const BivectorField& c2) {
  if (c1.dim() != c2.dim() || !(c1.layout() == c2.layout()))
    throw std::invalid_argument("Schouten bracket: dimension mismatch");
  const std::size_t n = c1.dim();
  // Cache coefficients and their derivatives along the bivector coordinates.
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n)), b(n, std::vector<MultiPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = c1.coeff(i, j);
      b[i][j] = c2.coeff(i, j);
    }
  auto term = [&](std::size_t i, std::size_t j, std::size_t k) {
    MultiPoly s(c1.layout());
    for (std::size_t r = 0; r < n; ++r) {
      if (!a[i][r].is_zero()) {
        MultiPoly d = b[j][k].diff(r);
        if (!d.is_zero()) s += a[i][r] * d;
      }
      if (!b[i][r].is_zero()) {
        MultiPoly d = a[j][k].diff(r);
        if (!d.is_zero()) s += b[i][r] * d;
      }
    }
    return s;
  };
  TrivectorField t(n, c1.layout());
  const GaussianRational half = GaussianRational(Rational(1, 2));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        t.set_sorted(i, j, k, (term(i, j, k) + term(j, k, i) + term(k, i, j)).scaled(half));
  return t;
}

bool linearly_independent(const BivectorField& c1, const BivectorField& c2) {
  if (c1.dim() != c2.dim() || !(c1.layout() == c2.layout())) return true;
  if (c1.is_zero() || c2.is_zero()) return false;
  // Find a ratio from the first nonzero coefficient of c1, then compare exactly.
  for (std::size_t i = 0; i < c1.dim(); ++i)
    for (std::size_t j = i + 1; j < c1.dim(); ++j) {
      MultiPoly p = c1.coeff(i, j);
      if (p.is_zero()) continue;
      const auto& [e, coef] = *p.terms().begin();
      GaussianRational ratio = c2.coeff(i, j).coefficient(e) / coef;
      return !(c1.scaled(ratio) == c2);
    }
  return true;
}

PoissonPairCheck is_poisson_pair(const BivectorField& c1, const BivectorField& c2) {
  PoissonPairCheck r;
  r.first_poisson = schouten_bracket(c1, c1).is_zero();
  r.mixed_vanishes = schouten_bracket(c1, c2).is_zero();
  r.second_poisson = schouten_bracket(c2, c2).is_zero();
  r.independent = linearly_independent(c1, c2);
  return r;
}

BivectorField lie_derivative_bivector(const VectorField& x, const BivectorField& z) {
  const auto& layout = z.layout();
  const std::size_t total = layout.num_vars();
  if (x.size() != total) throw std::invalid_argument("vector field has the wrong number of components");
  for (const auto& comp : x)
    if (!(comp.layout() == layout)) throw std::invalid_argument("vector field lives in a different ring");
  const std::size_t n = z.dim();
  auto zc = [&](std::size_t a, std::size_t b) { return (a < n && b < n) ? z.coeff(a, b) : MultiPoly(layout); };

  BivectorField out(n, z.kind());
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = a + 1; b < total; ++b) {
      MultiPoly v(layout);
      MultiPoly zab = zc(a, b);
      for (std::size_t r = 0; r < total; ++r) {
        if (!x[r].is_zero() && !zab.is_zero()) v += x[r] * zab.diff(r);
        MultiPoly zrb = zc(r, b);
        if (!zrb.is_zero()) v -= zrb * x[a].diff(r);
        MultiPoly zar = zc(a, r);
        if (!zar.is_zero()) v -= zar * x[b].diff(r);
      }
      if (v.is_zero()) continue;
      if (b >= n) throw std::invalid_argument("Lie derivative leaves the bivector's coordinate directions");
      out.set(a, b, std::move(v));
    }
  return out;
}

VectorField hamiltonian_field(const BivectorField& c, const MultiPoly& f) {
  if (!(f.layout() == c.layout())) throw std::invalid_argument("function lives in a different ring");
  VectorField v(c.layout().num_vars(), MultiPoly(c.layout()));
  std::vector<MultiPoly> grad;
  for (std::size_t i = 0; i < c.dim(); ++i) grad.push_back(f.diff(i));
  for (std::size_t j = 0; j < c.dim(); ++j)
    for (std::size_t i = 0; i < c.dim(); ++i) {
      if (grad[i].is_zero() || i == j) continue;
      MultiPoly cij = c.coeff(i, j);
      if (!cij.is_zero()) v[j] += grad[i] * cij;
    }
  return v;
}

MultiPoly apply_field(const VectorField& x, const MultiPoly& f) {
  if (x.size() != f.num_vars()) throw std::invalid_argument("vector field and function ring mismatch");
  MultiPoly s(f.layout());
  for (std::size_t v = 0; v < x.size(); ++v)
    if (!x[v].is_zero()) {
      MultiPoly d = f.diff(v);
      if (!d.is_zero()) s += x[v] * d;
    }
  return s;
}

MultiPoly poisson_bracket(const BivectorField& c, const MultiPoly& f, const MultiPoly& g) {
  return apply_field(hamiltonian_field(c, f), g);
}

Matrix evaluate_at(const BivectorField& c, std::span<const GaussianRational> point) {
  if (point.size() != c.layout().holo) throw std::invalid_argument("evaluation point has the wrong dimension");
  Matrix m(c.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t j = i + 1; j < c.dim(); ++j) {
      GaussianRational v = c.coeff(i, j).evaluate(point);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

}  // namespace bihamil
