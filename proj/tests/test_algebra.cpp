#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "surfalg/groebner.hpp"

using namespace surfalg;

TEST_CASE("closed-form dimension and Cartan matrix of the disc family") {
  auto tq = fx::disc_quiver();
  for (long m : {1L, 2L, 3L}) {
    auto w = fx::default_weights(tq, m, 1);
    auto alg = build_wta(tq, w);
    CHECK(alg.dimension == fx::disc_dim(m));
    CHECK(alg.cartan == fx::disc_cartan(m));
    // dimension is a sum over cycles, so the parameters do not enter
    auto w2 = fx::default_weights(tq, m, Rat(5, 3));
    CHECK(build_wta(tq, w2).dimension == fx::disc_dim(m));
  }
}

TEST_CASE("closed-form dimension and Cartan matrix of the pentagon family") {
  auto tq = fx::pentagon_quiver();
  for (long m : {1L, 2L, 3L}) {
    auto w = fx::pentagon_weights(tq, m, 1);
    auto alg = build_wta(tq, w);
    CHECK(alg.dimension == fx::pentagon_dim(m));
    CHECK(alg.cartan == fx::pentagon_cartan(m));
  }
}

TEST_CASE("spherical and self-folded dimensions") {
  auto stq = quiver_from_surface(fx::sphere_surface());
  for (auto [m, n] : std::vector<std::pair<long, long>>{{1, 1}, {1, 2}, {2, 3}}) {
    auto w = fx::sphere_weights(stq, m, n, 2, 3);
    CHECK(build_wta(stq, w).dimension == fx::sphere_dim(m, n));
  }
  auto ftq = quiver_from_surface(fx::selffolded3_surface());
  for (long m : {3L, 4L, 5L})
    CHECK(build_wta(ftq, fx::selffolded3_weights(ftq, m, 1)).dimension ==
          fx::selffolded3_dim(m));
}

TEST_CASE("dimension equals the weighted sum of squared cycle lengths") {
  for (auto tq : {fx::disc_quiver(), fx::pentagon_quiver(),
                  quiver_from_surface(fx::sphere_surface())}) {
    auto w = fx::default_weights(tq, 2, 1);
    long want = 0;
    for (int o = 0; o < (int)tq.g_orbits.size(); ++o)
      want += w.m[o] * (long)tq.g_orbits[o].size() * (long)tq.g_orbits[o].size();
    CHECK(build_wta(tq, w).dimension == want);
  }
}

TEST_CASE("basis, Cartan and socle are mutually consistent") {
  auto tq = fx::disc_quiver();
  auto w = fx::default_weights(tq, 2, Rat(3, 2));
  auto alg = build_wta(tq, w);
  long total = 0;
  for (size_t i = 0; i < alg.basis.size(); ++i)
    for (size_t j = 0; j < alg.basis[i].size(); ++j) {
      CHECK((long)alg.basis[i][j].size() == alg.cartan[i][j]);
      total += (long)alg.basis[i][j].size();
    }
  CHECK(total == alg.dimension);
  REQUIRE(alg.socle_reps.size() == tq.q.vertices.size());
  for (size_t v = 0; v < alg.socle_reps.size(); ++v) {
    // each socle generator is a full cycle at its vertex
    CHECK(alg.socle_reps[v].src == (int)v);
    CHECK(alg.socle_reps[v].target(alg.q) == (int)v);
  }

  auto rs = complete_with_retry(alg.q, alg.relations, default_cap(tq, w));
  auto rep = socle_check(alg, tq, w, rs);
  CHECK(rep.ok);
  CHECK(rep.notes.empty());
}

TEST_CASE("the ordinary quiver drops the virtual arrows") {
  auto tq = fx::disc_quiver();
  auto w = fx::default_weights(tq, 1, 1);
  auto alg = build_wta(tq, w);
  auto rs = complete_with_retry(alg.q, alg.relations, default_cap(tq, w));
  auto gq = gabriel_quiver(alg, rs);
  CHECK(gq.vertices.size() == 4);
  CHECK(gq.arrows.size() == 6);
  for (auto& a : gq.arrows) {
    CHECK(a.id != "t0.1");
    CHECK(a.id != "t1.2");
  }
  // pentagon: the weight-one length-2 cycle through xi and mu is virtual
  auto ptq = fx::pentagon_quiver();
  auto pw = fx::pentagon_weights(ptq, 1, 1);
  auto palg = build_wta(ptq, pw);
  auto prs = complete_with_retry(palg.q, palg.relations, default_cap(ptq, pw));
  auto pgq = gabriel_quiver(palg, prs);
  CHECK(pgq.arrows.size() == 8);
  for (auto& a : pgq.arrows) {
    CHECK(a.id != "xi");
    CHECK(a.id != "mu");
  }
}

TEST_CASE("oracle agreement including per-pair basis counts") {
  auto tq = fx::pentagon_quiver();
  auto w = fx::pentagon_weights(tq, 2, Rat(-1, 2));
  auto alg = build_wta(tq, w);
  auto rs = complete_with_retry(alg.q, alg.relations, default_cap(tq, w));
  CHECK(rs.dimension == alg.dimension);
  CHECK(rs.cartan == alg.cartan);
  // count standard monomials per (source, target) pair
  size_t V = tq.q.vertices.size();
  std::vector<std::vector<long>> counts(V, std::vector<long>(V, 0));
  for (auto& p : rs.std_monos) counts[p.src][p.target(alg.q)]++;
  for (size_t i = 0; i < V; ++i)
    for (size_t j = 0; j < V; ++j)
      CHECK(counts[i][j] == (long)alg.basis[i][j].size());
}

TEST_CASE("degenerate shapes are guarded") {
  SUBCASE("three vertices trip the conservative guard") {
    auto tq = quiver_from_surface(fx::torus_surface());
    auto w = fx::default_weights(tq, 1, 1);
    try {
      build_wta(tq, w);
      FAIL("expected the guard to fire");
    } catch (const Error& e) {
      CHECK(e.code == Err::PossiblySingular);
    }
    CHECK(build_wta(tq, w, true).dimension == fx::torus_dim());
  }
  SUBCASE("the singular spherical parameter locus") {
    auto tq = quiver_from_surface(fx::sphere_surface());
    auto w = fx::sphere_weights(tq, 1, 1, 2, Rat(1, 2));  // product of parameters 1
    try {
      build_wta(tq, w);
      FAIL("expected the spherical guard to fire");
    } catch (const Error& e) {
      CHECK(e.code == Err::SingularSpherical);
    }
    // off the singular locus everything is fine
    CHECK(build_wta(tq, fx::sphere_weights(tq, 1, 1, 2, 3)).dimension ==
          fx::sphere_dim(1, 1));
  }
}
