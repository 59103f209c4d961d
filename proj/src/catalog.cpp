#include "bihamil/catalog.hpp"

#include "bihamil/errors.hpp"

#include <array>

namespace bihamil {

LieAlgebraSpec so3() {
  LieAlgebraSpec g("so3", 3);
  g.set_structure(0, 1, 2, 1);
  g.set_structure(1, 2, 0, 1);
  g.set_structure(2, 0, 1, 1);
  return g;
}

LieAlgebraSpec heisenberg3() {
  LieAlgebraSpec g("heisenberg3", 3, {"x", "y", "z"});
  g.set_structure(0, 1, 2, 1);
  return g;
}

LieAlgebraSpec sl2r() {
  LieAlgebraSpec g("sl2r", 3, {"h", "e", "f"});
  g.set_structure(0, 1, 1, 2);
  g.set_structure(0, 2, 2, -2);
  g.set_structure(1, 2, 0, 1);
  return g;
}

LieAlgebraSpec so3xso3() { return direct_sum(so3(), so3(), "so3xso3"); }

LieAlgebraSpec sl3() {
  using M3 = std::array<std::array<Rational, 3>, 3>;
  const std::array<std::pair<int, int>, 6> offdiag{{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
  std::vector<M3> basis;
  for (auto [i, j] : offdiag) {
    M3 m{};
    m[i][j] = 1;
    basis.push_back(m);
  }
  M3 h1{}, h2{};
  h1[0][0] = 1;
  h1[1][1] = -1;
  h2[1][1] = 1;
  h2[2][2] = -1;
  basis.push_back(h1);
  basis.push_back(h2);

  LieAlgebraSpec g("sl3", 8, {"E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2"});
  auto product = [](const M3& a, const M3& b) {
    M3 c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b) {
      M3 x = product(basis[a], basis[b]), y = product(basis[b], basis[a]);
      M3 c{};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) c[i][j] = x[i][j] - y[i][j];
      for (std::size_t k = 0; k < offdiag.size(); ++k) {
        auto [i, j] = offdiag[k];
        g.set_structure(a, b, k, c[i][j]);
      }
      // diag(d1, d2, d3) with zero trace equals d1*H1 + (d1 + d2)*H2.
      g.set_structure(a, b, 6, c[0][0]);
      g.set_structure(a, b, 7, c[0][0] + c[1][1]);
    }
  return g;
}

LieAlgebraSpec d45() {
  std::vector<std::string> labels{"p1", "p2"};
  for (const char* prefix : {"q", "f", "g"})
    for (int i = 1; i <= 4; ++i) labels.push_back(prefix + std::to_string(i));
  LieAlgebraSpec g("d45", 14, labels);
  for (std::size_t i = 0; i < 4; ++i) {
    g.set_structure(0, 2 + i, 6 + i, 1);
    g.set_structure(1, 2 + i, 10 + i, 1);
  }
  return g;
}

LieAlgebraSpec abelian(std::size_t n) { return LieAlgebraSpec("abelian" + std::to_string(n), n); }

std::vector<std::string> catalog_algebra_names() { return {"so3", "heisenberg3", "sl2r", "so3xso3", "sl3", "d45"}; }

LieAlgebraSpec catalog_algebra(const std::string& name) {
  if (name == "so3") return so3();
  if (name == "heisenberg3") return heisenberg3();
  if (name == "sl2r") return sl2r();
  if (name == "so3xso3") return so3xso3();
  if (name == "sl3") return sl3();
  if (name == "d45") return d45();
  if (name.rfind("abelian", 0) == 0 && name.size() > 7) {
    try {
      std::size_t pos = 0;
      unsigned long n = std::stoul(name.substr(7), &pos);
      if (pos == name.size() - 7 && n > 0 && n <= 64) return abelian(n);
    } catch (const std::exception&) {
    }
  }
  throw InputError("unknown algebra '" + name + "'");
}

namespace {

MultiPoly constant_in(const BivectorField& c, long v) { return MultiPoly::constant(c.layout(), GaussianRational(v)); }

}  // namespace

BivectorPair kron_2068() {
  BivectorPair p{"kron_2068", {"p1", "p2", "q1", "q2", "q3", "q4"}, BivectorField(6, VariableKind::real),
                 BivectorField(6, VariableKind::real)};
  p.c1.set(0, 2, constant_in(p.c1, 1));
  p.c1.set(1, 3, constant_in(p.c1, 1));
  p.c2.set(0, 3, constant_in(p.c2, 1));
  p.c2.set(0, 4, MultiPoly::variable(p.c2.layout(), 2));
  p.c2.set(1, 5, constant_in(p.c2, 1));
  return p;
}

BivectorPair kron_2069() {
  BivectorPair p{"kron_2069", {"e", "p", "q1", "q2"}, BivectorField(4, VariableKind::real),
                 BivectorField(4, VariableKind::real)};
  p.c1.set(1, 2, constant_in(p.c1, 1));
  p.c2.set(1, 3, constant_in(p.c2, 1));
  return p;
}

BivectorPair jordan4_lam(const GaussianRational& theta) {
  BivectorPair p{"jordan4_lam(" + to_string(theta) + ")", {"x1", "x2", "y1", "y2"},
                 BivectorField(4, VariableKind::holomorphic), BivectorField(4, VariableKind::holomorphic)};
  const VarLayout& l = p.c1.layout();
  p.c1.set(0, 2, MultiPoly::constant(l, 1));
  p.c1.set(1, 3, MultiPoly::constant(l, 1));
  p.c2.set(0, 2, MultiPoly::constant(l, theta));
  p.c2.set(0, 3, MultiPoly::constant(l, 1));
  p.c2.set(1, 3, MultiPoly::constant(l, theta));
  return p;
}

std::vector<std::string> catalog_pair_names() { return {"kron_2068", "kron_2069", "jordan4_lam(<theta>)"}; }

BivectorPair catalog_pair(const std::string& name) {
  if (name == "kron_2068") return kron_2068();
  if (name == "kron_2069") return kron_2069();
  const std::string prefix = "jordan4_lam(";
  if (name.rfind(prefix, 0) == 0 && name.size() > prefix.size() + 1 && name.back() == ')') {
    try {
      return jordan4_lam(parse_gaussian(name.substr(prefix.size(), name.size() - prefix.size() - 1)));
    } catch (const std::invalid_argument& e) {
      throw InputError("bad eigenvalue in '" + name + "': " + e.what());
    }
  }
  throw InputError("unknown bivector pair '" + name + "'");
}

}  // namespace bihamil
