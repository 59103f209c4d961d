#include "support.hpp"

#include "bihamil/catalog.hpp"
#include "bihamil/errors.hpp"
#include "bihamil/integrals.hpp"

#include <doctest.h>

using namespace bihamil;
using testsupport::Gen;

namespace {

GaussianRational I() { return GaussianRational::i(); }

VarLayout mixed(std::size_t n) { return VarLayout{n, true}; }
MultiPoly z(std::size_t n, std::size_t k) { return MultiPoly::variable(mixed(n), k); }
MultiPoly zb(std::size_t n, std::size_t k) { return MultiPoly::conj_variable(mixed(n), k); }

MultiPoly so3_casimir() { return z(3, 0) * z(3, 0) + z(3, 1) * z(3, 1) + z(3, 2) * z(3, 2); }

// Casimir condition c(g) = 0 checked as a polynomial identity.
bool is_casimir(const BivectorField& c, const MultiPoly& g) {
  for (const auto& comp : hamiltonian_field(c, g))
    if (!comp.is_zero()) return false;
  return true;
}

// det(q, f, g, e_l) on d45, a cubic Casimir.
MultiPoly d45_cubic(std::size_t l) {
  const std::size_t n = 14;
  auto entry = [&](std::size_t row, std::size_t col) -> MultiPoly {
    if (row == 0) return z(n, 2 + col);
    if (row == 1) return z(n, 6 + col);
    if (row == 2) return z(n, 10 + col);
    return MultiPoly::constant(mixed(n), col == l ? 1 : 0);
  };
  MultiPoly det(mixed(n));
  int perm[4] = {0, 1, 2, 3};
  do {
    int inv = 0;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) inv += perm[a] > perm[b];
    MultiPoly t = MultiPoly::constant(mixed(n), inv % 2 ? -1 : 1);
    for (int r = 0; r < 4; ++r) t = t * entry(static_cast<std::size_t>(r), static_cast<std::size_t>(perm[r]));
    det += t;
  } while (std::next_permutation(perm, perm + 4));
  return det;
}

}  // namespace

TEST_CASE("casimir_basis examples") {
  CanonicalPair so(so3());
  auto cs = casimir_basis(so, 2);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0] == so3_casimir());
  CHECK(casimir_basis(so, 4).size() == 1);

  auto h = casimir_basis(CanonicalPair(heisenberg3()), 1);
  REQUIRE(h.size() == 1);
  CHECK(h[0] == z(3, 2));

  auto ab = casimir_basis(BivectorField(4, VariableKind::mixed), 1);
  CHECK(ab.size() == 4);
  CHECK_THROWS(casimir_basis(so, 0));
}

TEST_CASE("casimir_basis finds the quadratic and cubic Casimirs of sl3 and d45") {
  CanonicalPair s3(sl3());
  auto cs = casimir_basis(s3, 3);
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].total_degree() == 2);
  CHECK(cs[1].total_degree() == 3);

  CanonicalPair d(d45());
  auto lin = casimir_basis(d, 1);
  CHECK(lin.size() == 8);
  auto cub = casimir_basis(d, 3);
  CHECK(cub.size() == 12);
  for (const auto& g : cub) CHECK(is_casimir(d.c(), g));
  for (std::size_t l = 0; l < 4; ++l) CHECK(is_casimir(d.c(), d45_cubic(l)));
}

TEST_CASE("tilde examples") {
  MultiPoly g = so3_casimir().scaled(GaussianRational(Rational(1, 2)));
  CHECK(tilde(g) == zb(3, 0) * z(3, 0) + zb(3, 1) * z(3, 1) + zb(3, 2) * z(3, 2));
  CHECK(tilde(z(3, 1)) == z(3, 1));
  CHECK(tilde(MultiPoly::constant(mixed(3), 5)).is_zero());
  CHECK_THROWS(tilde(zb(3, 0)));
}

TEST_CASE("compose_phi_lambda examples") {
  MultiPoly g = so3_casimir();
  CHECK(compose_phi_lambda(g, LambdaPair{1, 0}) == g);
  CHECK(compose_phi_lambda(g, LambdaPair{0, 1}) == g.conjugate());
  MultiPoly expect(mixed(3));
  for (std::size_t k = 0; k < 3; ++k) expect += (z(3, k) + zb(3, k)).pow(2);
  CHECK(compose_phi_lambda(g, LambdaPair{1, 1}) == expect);
  CHECK_THROWS(compose_phi_lambda(g, LambdaPair{0, 0}));
}

TEST_CASE("translation_family examples") {
  CanonicalPair so(so3());
  auto fam = translation_family(so.c(), Vec{1, 0, 0}, 2, lambda_schedule(5));
  CHECK(fam.members[0] == so3_casimir());
  for (long t : {1L, 2L, 3L}) {
    MultiPoly shifted = (z(3, 0) + MultiPoly::constant(mixed(3), t)).pow(2) + z(3, 1) * z(3, 1) + z(3, 2) * z(3, 2);
    CHECK(std::find(fam.members.begin(), fam.members.end(), shifted) != fam.members.end());
  }
  for (const auto& f : fam.members) CHECK(f.is_holomorphic());

  auto ab = translation_family(BivectorField(3, VariableKind::mixed), Vec{1, 2, 3}, 2, lambda_schedule(5));
  CHECK(ab.size() == 3);
  CHECK_FALSE(ab.warnings.empty());

  CanonicalPair he(heisenberg3());
  auto hf = translation_family(he.c(), Vec{1, 2, 3}, 2, lambda_schedule(5));
  CHECK(hf.members[0] == z(3, 2));
  CHECK(hf.size() == 4);
  CHECK_THROWS_AS(translation_family(so.c(), Vec{0, 0, 0}, 2, lambda_schedule(3)), PreconditionError);
}

TEST_CASE("family_F1 examples") {
  CanonicalPair so(so3());
  auto fam = family_F1(so, 2, mixed_lambda_schedule(3));
  CHECK(fam.size() == 5);
  CHECK(fam.provenance[0] == "holomorphic-casimir");
  CHECK(fam.provenance[1] == "tilde");

  auto ab = family_F1(CanonicalPair(abelian(3)), 2, mixed_lambda_schedule(3));
  CHECK(ab.size() == 0);
  CHECK_FALSE(ab.warnings.empty());

  CanonicalPair d(d45());
  auto fd = family_F1(d, 1, mixed_lambda_schedule(3));
  const std::size_t n = 14;
  for (std::size_t k = 6; k < 14; ++k) {
    CHECK(std::find(fd.members.begin(), fd.members.end(), z(n, k)) != fd.members.end());
    // The tilde of a linear Casimir is the Casimir itself; its conjugate enters through phi_lambda.
    CHECK(tilde(z(n, k)) == z(n, k));
  }
  CHECK(fd.size() == 8 + 8 * 3);
}

TEST_CASE("involutivity examples") {
  CanonicalPair so(so3());
  auto lams = lambda_schedule(5);
  auto pts = point_schedule(3, 10, 42, 10);
  CHECK(involutivity_check(family_F1(so, 2, mixed_lambda_schedule(3)), so, lams, pts));
  IntegralFamily one;
  one.add(z(3, 0), "test");
  CHECK(involutivity_check(one, so, lams, pts));
  IntegralFamily two = one;
  two.add(z(3, 1), "test");
  CHECK_FALSE(involutivity_check(two, so, lams, pts));
}

TEST_CASE("g0 invariance examples") {
  CanonicalPair so(so3());
  auto pts = point_schedule(3, 5, 42, 10);
  MultiPoly norm = zb(3, 0) * z(3, 0) + zb(3, 1) * z(3, 1) + zb(3, 2) * z(3, 2);
  CHECK(g0_invariance_check(norm, so, pts));
  CHECK_FALSE(g0_invariance_check(z(3, 0), so, pts));
  CHECK(g0_invariance_check(so3_casimir().conjugate(), so, pts));
}

TEST_CASE("cr_lagrangian examples") {
  CanonicalPair so(so3());
  auto fam = family_F1(so, 2, mixed_lambda_schedule(3));
  auto res = cr_lagrangian(fam, so, Vec{1, I(), 0});
  CHECK(res.leaf_dim == 2);
  CHECK(res.kernel_dim == 1);
  CHECK(res.lagrangian);
  CHECK_FALSE(cr_lagrangian_check(IntegralFamily{}, so, Vec{1, I(), 0}));
  CHECK_THROWS_AS(cr_lagrangian(fam, so, Vec{1, 0, 0}), PreconditionError);

  // Linear Casimirs alone have no differential along the leaf; the cubic ones cut it in half.
  CanonicalPair d(d45());
  auto zd = point_schedule(14, 1, 42, 10)[0];
  auto lin = cr_lagrangian(family_F1(d, 1, mixed_lambda_schedule(3)), d, zd);
  CHECK(lin.kernel_dim == 4);
  CHECK_FALSE(lin.lagrangian);
  auto cub = cr_lagrangian(family_F1(d, 3, mixed_lambda_schedule(3)), d, zd);
  CHECK(cub.kernel_dim == 2);
  CHECK(cub.lagrangian);
}

TEST_CASE("property: Casimirs, tildes and phi_lambda compositions annihilate their pencil members") {
  Gen gen(51);
  for (const char* name : {"so3", "heisenberg3", "sl2r", "so3xso3", "sl3"}) {
    CanonicalPair p(catalog_algebra(name));
    for (const auto& g : casimir_basis(p, 3)) {
      CHECK(is_casimir(p.c(), g));
      CHECK(is_casimir(p.c_tilde(), tilde(g)));
      for (int t = 0; t < 2; ++t) {
        LambdaPair l{gen.gaussian(3), gen.gaussian(3)};
        if (l.is_zero()) continue;
        CHECK(is_casimir(p.c().scaled(l.l1) + p.c_tilde().scaled(l.l2), compose_phi_lambda(g, l)));
      }
    }
  }
}

TEST_CASE("property: F1 is involutive and G0-invariant, differential rank constant off the irregularity set") {
  auto lams = lambda_schedule(5);
  for (const char* name : {"so3", "heisenberg3", "sl2r", "so3xso3", "sl3"}) {
    CanonicalPair p(catalog_algebra(name));
    auto fam = family_F1(p, 3, mixed_lambda_schedule(3));
    auto pts = point_schedule(p.dim(), 10, 42, 10);
    CHECK(involutivity_check(fam, p, lams, pts));
    for (const auto& f : fam.members)
      if (fam.provenance[&f - fam.members.data()] == "tilde") CHECK(g0_invariance_check(f, p, pts));
    std::optional<std::size_t> rank;
    for (const auto& z0 : pts) {
      if (in_kronecker_irregularity(p, z0)) continue;
      std::size_t r = differential_rank(fam, z0);
      if (!rank) rank = r;
      CHECK(r == *rank);
    }
  }
}
