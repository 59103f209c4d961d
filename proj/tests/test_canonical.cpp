#include "support.hpp"

#include "bihamil/canonical.hpp"
#include "bihamil/catalog.hpp"
#include "bihamil/errors.hpp"
#include "bihamil/subspace.hpp"

#include <doctest.h>

using namespace bihamil;
using testsupport::Gen;
using testsupport::oracle_rank;

namespace {

GaussianRational I() { return GaussianRational::i(); }

// d45 point with f = (f0..f3) at 6..9 and g at 10..13; the p, q coordinates are arbitrary.
Vec d45_point(const Vec& f, const Vec& g) {
  Vec z(14, GaussianRational(0));
  for (std::size_t k = 0; k < 6; ++k) z[k] = GaussianRational(static_cast<long>(k) + 1);
  for (std::size_t k = 0; k < 4; ++k) {
    z[6 + k] = f[k];
    z[10 + k] = g[k];
  }
  return z;
}

Vec random_point(Gen& g, std::size_t n) {
  Vec z;
  for (std::size_t k = 0; k < n; ++k) z.push_back(g.gaussian(6));
  return z;
}

}  // namespace

TEST_CASE("point schedule is deterministic and bounded") {
  auto a = point_schedule(4, 10, 42, 10);
  auto b = point_schedule(4, 10, 42, 10);
  CHECK(a == b);
  CHECK(a != point_schedule(4, 10, 43, 10));
  for (const auto& z : a)
    for (const auto& x : z) {
      CHECK(abs(x.re().get_num()) <= 10);
      CHECK(x.re().get_den() <= 10);
      CHECK(abs(x.im().get_num()) <= 10);
    }
}

TEST_CASE("c_matrix examples") {
  CanonicalPair so(so3());
  Matrix c = so.c_matrix(Vec{1, 0, 0});
  CHECK(c.is_skew());
  CHECK(rank_exact(c) == 2);
  CHECK(c(1, 2) == GaussianRational(1));
  for (const auto& name : catalog_algebra_names()) {
    CanonicalPair p(catalog_algebra(name));
    CHECK(rank_exact(p.c_matrix(Vec(p.dim(), GaussianRational(0)))) == 0);
  }
  CanonicalPair d(d45());
  Matrix cd = d.c_matrix(d45_point({1, 2, 3, 5}, {2, -1, 7, 1}));
  CHECK(rank_exact(cd) == 4);
  CHECK(oracle_rank(cd) == 4);
}

TEST_CASE("rank of the algebra") {
  CHECK(CanonicalPair(so3()).rank_g() == 1);
  CHECK(CanonicalPair(heisenberg3()).rank_g() == 1);
  CHECK(CanonicalPair(sl2r()).rank_g() == 1);
  CHECK(CanonicalPair(so3xso3()).rank_g() == 2);
  CHECK(CanonicalPair(sl3()).rank_g() == 2);
  CanonicalPair d(d45());
  CHECK(d.rank_g() == 10);
  CHECK(d.generic_rank_c() == 4);
  CHECK(d.generic_stacked_rank() == 6);
  CHECK_THROWS_AS(CanonicalPair(abelian(3)).rank_g(), PreconditionError);
}

TEST_CASE("Sing, incompleteness and irregularity examples") {
  CanonicalPair so(so3());
  Vec zero{0, 0, 0}, real{1, 0, 0}, mixed{1, I(), 0};
  CHECK(in_sing(so, zero));
  CHECK_FALSE(in_sing(so, real));
  CHECK(in_incompleteness_set(so, real));
  CHECK_FALSE(in_incompleteness_set(so, mixed));
  CHECK(in_incompleteness_set(so, zero));
  CHECK_FALSE(in_kronecker_irregularity(so, mixed));
  CHECK(in_kronecker_irregularity(so, zero));

  CanonicalPair d(d45());
  Vec dz(14, GaussianRational(0));
  for (std::size_t k = 0; k < 6; ++k) dz[k] = GaussianRational(3);
  CHECK(in_sing(d, dz));
  // All four rows f, g, fbar, gbar have last entry 0, so their 4x4 determinant vanishes.
  Vec flat = d45_point({1, I(), 0, 0}, {1, 2, I(), 0});
  CHECK_FALSE(in_sing(d, flat));
  CHECK(in_kronecker_irregularity(d, flat));

  Gen g(31);
  for (const char* name : {"so3", "sl2r", "so3xso3", "sl3"}) {
    CanonicalPair p(catalog_algebra(name));
    for (const auto& z : point_schedule(p.dim(), 3, 7, 10)) CHECK_FALSE(in_sing(p, z));
  }
}

TEST_CASE("mu examples") {
  CanonicalPair so(so3());
  CHECK(mu(so, Vec{1, I(), 0}) == 0);
  CHECK(mu(so, Vec{1, 0, 0}) == 1);
  CHECK_THROWS(mu_lambda(so, Vec{1, 0, 0}, LambdaPair{1, 0}));

  CanonicalPair d(d45());
  Vec z = d45_point({1, I(), 2, -3}, {GaussianRational(2, 1), 5, -I(), 1});
  CHECK(mu(d, z) == 8);
  for (const auto& l : mixed_lambda_schedule(5)) CHECK(mu_lambda(d, z, l) == 8);
}

TEST_CASE("classify_point examples") {
  CanonicalPair so(so3());
  auto pc = classify_point(so, Vec{1, I(), 0}, 5);
  CHECK_FALSE(pc.in_sing);
  CHECK_FALSE(pc.in_incompleteness);
  CHECK_FALSE(pc.in_irregularity);
  CHECK(pc.mu == 0);
  CHECK(pc.mu_lambda_samples.size() == 5);

  auto z0 = classify_point(so, Vec{0, 0, 0}, 5);
  CHECK(z0.in_sing);
  CHECK(z0.in_incompleteness);
  CHECK(z0.in_irregularity);

  CanonicalPair d(d45());
  for (const auto& z : point_schedule(14, 2, 5, 10)) {
    auto c = classify_point(d, z, 5);
    CHECK_FALSE(c.in_sing);
    CHECK(c.mu == 8);
    for (const auto& [l, m] : c.mu_lambda_samples) CHECK(m == 8);
  }
}

TEST_CASE("mixed lambda schedule starts at (1,1)") {
  auto s = mixed_lambda_schedule(3);
  REQUIRE(s.size() == 3);
  CHECK(s[0] == LambdaPair{1, 1});
  CHECK(s[1] == LambdaPair{1, 2});
  CHECK(s[2] == LambdaPair{1, 3});
}

TEST_CASE("property: pencil identity l1 C(z) + l2 C(zbar) = C(l1 z + l2 zbar)") {
  Gen g(32);
  const char* names[] = {"so3", "heisenberg3", "sl2r", "so3xso3", "sl3", "d45"};
  for (int t = 0; t < 20; ++t) {
    CanonicalPair p(catalog_algebra(names[t % 6]));
    Vec z = random_point(g, p.dim());
    GaussianRational l1 = g.gaussian(5), l2 = g.gaussian(5);
    Vec w = add(scaled(z, l1), scaled(conjugate(z), l2));
    CHECK(p.c_matrix(z).scaled(l1) + p.c_matrix(conjugate(z)).scaled(l2) == p.c_matrix(w));
  }
}

TEST_CASE("property: c~ is invariant along the orbit generators") {
  for (const auto& name : catalog_algebra_names()) {
    CanonicalPair p(catalog_algebra(name));
    if (p.dim() > 6) continue;
    for (std::size_t i = 0; i < p.dim(); ++i) {
      VectorField v = orbit_generator(p, i);
      CHECK(v.size() == 2 * p.dim());
      CHECK(lie_derivative_bivector(v, p.c_tilde()).is_zero());
      CHECK(lie_derivative_bivector(v, p.c()).is_zero());
    }
  }
}

TEST_CASE("property: membership chain and mu invariance off the incompleteness set") {
  Gen g(33);
  for (const char* name : {"so3", "heisenberg3", "sl2r", "so3xso3", "sl3"}) {
    CanonicalPair p(catalog_algebra(name));
    for (int t = 0; t < 6; ++t) {
      Vec z = random_point(g, p.dim());
      // Real and sparse points hit the special sets.
      if (t == 1) z = Vec(z.size(), GaussianRational(0)), z[0] = 1;
      if (t == 2)
        for (auto& x : z) x = GaussianRational(x.re());
      auto pc = classify_point(p, z, 5);
      CHECK((!pc.in_sing || pc.in_incompleteness));
      CHECK((!pc.in_incompleteness || pc.in_irregularity));
      CHECK(pc.mu == p.dim() - pc.stacked_rank);
      if (!pc.in_incompleteness)
        for (const auto& [l, m] : pc.mu_lambda_samples) CHECK(m == pc.mu);
      CHECK(pc.in_sing == (oracle_rank(p.c_matrix(z)) < p.generic_rank_c()));
    }
  }
}
