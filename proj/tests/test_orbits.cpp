#include "support.hpp"

#include "bihamil/catalog.hpp"
#include "bihamil/errors.hpp"
#include "bihamil/orbits.hpp"
#include "bihamil/subspace.hpp"

#include <doctest.h>

using namespace bihamil;
using testsupport::Gen;
using testsupport::unit;

namespace {

GaussianRational I() { return GaussianRational::i(); }

Matrix wedge_sum(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  Matrix m(n, n);
  for (auto [i, j] : pairs) {
    m(i, j) += 1;
    m(j, i) -= 1;
  }
  return m;
}

const char* kAlgebras[] = {"so3", "heisenberg3", "sl2r", "so3xso3", "sl3", "d45"};

}  // namespace

TEST_CASE("orbit_tangent examples") {
  CanonicalPair so(so3());
  auto f = orbit_tangent(so, Vec{1, I(), 0});
  CHECK(f.orbit_dim == 3);
  CHECK(f.cr_dim == 1);
  CHECK(f.leaf_10_basis.size() == 2);
  for (const auto& v : f.cr_tangent_10) CHECK(in_span(f.leaf_10_basis, v, 3));

  for (const auto& name : catalog_algebra_names()) {
    CanonicalPair p(catalog_algebra(name));
    auto z0 = orbit_tangent(p, Vec(p.dim(), GaussianRational(0)));
    CHECK(z0.orbit_dim == 0);
    CHECK(cr_genericity_check(z0));
  }

  CanonicalPair d(d45());
  for (const auto& z : point_schedule(14, 2, 42, 10)) {
    auto fd = orbit_tangent(d, z);
    CHECK(fd.orbit_dim == 6);
    CHECK(fd.cr_dim == 2);
    CHECK(cr_genericity_check(fd));
  }
}

TEST_CASE("cr genericity fails for a frame that does not fill the leaf") {
  CanonicalPair so(so3());
  auto f = orbit_tangent(so, Vec{1, I(), 0});
  CHECK(cr_genericity_check(f));
  f.real_tangent.resize(1);
  CHECK_FALSE(cr_genericity_check(f));
}

TEST_CASE("leaf_restrict examples") {
  CanonicalPair so(so3());
  auto leaf = leaf_restrict(so, Vec{1, 0, 0});
  CHECK(leaf.basis.cols() == 2);
  CHECK(leaf.s.is_skew());
  CHECK(determinant(leaf.omega) != GaussianRational(0));
  CHECK(leaf.s * leaf.omega == Matrix::identity(2));
  CHECK_THROWS_AS(leaf_restrict(so, Vec{0, 0, 0}), PreconditionError);

  CanonicalPair d(d45());
  auto ld = leaf_restrict(d, point_schedule(14, 1, 3, 10)[0]);
  CHECK(ld.basis.cols() == 4);
  CHECK(ld.omega.rows() == 4);
}

TEST_CASE("leaf_restrict on a nondegenerate C(z) is C(z) itself") {
  // The 2-dim nonabelian algebra [e1,e2] = e2 has C(z) invertible off z2 = 0.
  LieAlgebraSpec aff("aff1", 2);
  aff.set_structure(0, 1, 1, 1);
  CanonicalPair p(aff);
  Vec z{3, 1};
  auto leaf = leaf_restrict(p, z);
  CHECK(leaf.basis == Matrix::identity(2));
  CHECK(leaf.s == p.c_matrix(z));
}

TEST_CASE("cr_isotropy examples") {
  CHECK(cr_isotropy_check(CanonicalPair(so3()), Vec{1, I(), 0}));
  CanonicalPair so(so3());
  CHECK(orbit_tangent(so, Vec{1, 2, 3}).cr_dim == 0);
  CHECK(cr_isotropy_check(so, Vec{1, 2, 3}));
  CanonicalPair d(d45());
  for (const auto& z : point_schedule(14, 2, 42, 10)) CHECK(cr_isotropy_check(d, z));
  CHECK_THROWS_AS(cr_isotropy_check(so, Vec{0, 0, 0}), PreconditionError);
}

TEST_CASE("k numbers examples") {
  auto lams = lambda_schedule(5);
  CanonicalPair so(so3());
  auto kn = k_numbers(so, Vec{1, I(), 0}, lams);
  CHECK(kn.k == 1);
  for (const auto& [l, k] : kn.k_lambda) CHECK(k == 1);

  CanonicalPair pp(so3xso3());
  for (const auto& z : point_schedule(6, 2, 42, 10)) {
    auto k2 = k_numbers(pp, z, lams);
    CHECK(k2.k == 2);
    for (const auto& [l, k] : k2.k_lambda) CHECK(k == 2);
  }
  CHECK(on_cross(LambdaPair{1, I()}));
  CHECK(on_cross(LambdaPair{I(), 1}));
  CHECK_FALSE(on_cross(LambdaPair{1, 1}));
  CHECK_THROWS_AS(k_numbers(so, Vec{1, I(), 0}, {LambdaPair{1, -I()}}), std::invalid_argument);
}

TEST_CASE("pushforward examples") {
  Gen g(41);
  Matrix c = g.skew(4, 5);
  auto triv = pushforward_at_point(4, c, {});
  CHECK(triv.reduced == c);

  // (p1, p2, q1, q2) with c = p1∧q1 + p2∧q2 and K = span{∂q2}.
  Matrix sym = wedge_sum(4, {{0, 2}, {1, 3}});
  auto pf = pushforward_at_point(4, sym, {unit(4, 3)});
  CHECK(pf.reduced.rows() == 3);
  CHECK(rank_exact(pf.reduced) == 2);
  CHECK(pf.image.size() == 3);
  CHECK(pf.intersection.size() == 1);

  // x0 ∂0∧∂1 + ∂2∧∂3 along K = span{∂0}: the image drops at x0 = 0, the quotient data does not.
  for (long x0 : {0L, 1L, 5L}) {
    Matrix m = wedge_sum(4, {{2, 3}});
    m(0, 1) = x0;
    m(1, 0) = -x0;
    auto r = pushforward_at_point(4, m, {unit(4, 0)});
    CHECK(r.image.size() == (x0 == 0 ? 2u : 3u));
    CHECK(r.d == 2);
    CHECK(rank_exact(r.reduced) == 2);
  }
  CHECK_THROWS(pushforward_at_point(4, sym, {unit(4, 0), unit(4, 0)}));
}

TEST_CASE("reduction_completeness examples") {
  auto lams = lambda_schedule(5);
  auto so = reduction_completeness(CanonicalPair(so3()), Vec{1, I(), 0}, lams);
  CHECK(so.quotient_dim == 1);
  CHECK(so.reduced_generic_rank == 0);
  CHECK(so.complete);
  CHECK(so.minimal);

  CanonicalPair pp(so3xso3());
  auto z6 = point_schedule(6, 1, 42, 10)[0];
  auto r6 = reduction_completeness(pp, z6, lams);
  CHECK(r6.quotient_dim == 2);
  CHECK(r6.k == 2);
  CHECK(r6.complete);

  CanonicalPair s3(sl3());
  auto r8 = reduction_completeness(s3, point_schedule(8, 1, 42, 10)[0], lams);
  CHECK(r8.quotient_dim == 4);
  CHECK(r8.k == 2);
  for (const auto& [l, k] : r8.k_lambda) CHECK(k == 2);
  CHECK(r8.reduced_generic_rank == 2);
  CHECK(r8.complete);
  CHECK(r8.minimal);

  CHECK_THROWS_AS(reduction_completeness(pp, Vec(6, GaussianRational(0)), lams), PreconditionError);
}

TEST_CASE("property: orbit and CR dimensions off the irregularity set") {
  auto lams = lambda_schedule(5);
  for (const char* name : kAlgebras) {
    CanonicalPair p(catalog_algebra(name));
    const std::size_t r = p.rank_g();
    std::size_t tested = 0;
    for (const auto& z : point_schedule(p.dim(), 10, 42, 10)) {
      if (in_kronecker_irregularity(p, z)) continue;
      ++tested;
      const std::size_t m = mu(p, z);
      auto f = orbit_tangent(p, z);
      CHECK(f.orbit_dim == p.dim() - m);
      CHECK(f.cr_dim == r - m);
      CHECK(cr_genericity_check(f));
      CHECK(cr_isotropy_check(p, z));
      auto rep = reduction_completeness(p, z, lams);
      for (const auto& [l, k] : rep.k_lambda) CHECK(k == rep.k);
      CHECK(rep.complete);
      for (const auto& [l, d] : rep.d_lambda) CHECK(d == rep.quotient_dim - rep.k);
    }
    // Heisenberg's stacked rank drops generically, so every point lies in the irregularity set.
    if (std::string(name) != "heisenberg3") CHECK(tested > 0);
  }
}

TEST_CASE("property: CR isotropy at random points off Sing") {
  Gen g(42);
  for (const char* name : {"so3", "sl2r", "so3xso3", "heisenberg3"}) {
    CanonicalPair p(catalog_algebra(name));
    for (int t = 0; t < 8; ++t) {
      Vec z;
      for (std::size_t k = 0; k < p.dim(); ++k) z.push_back(g.coin() ? g.gaussian(4) : GaussianRational(g.small_int(3)));
      if (in_sing(p, z)) continue;
      CHECK(cr_isotropy_check(p, z));
      auto f = orbit_tangent(p, z);
      CHECK(f.cr_dim <= f.leaf_10_basis.size());
    }
  }
}
