#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "surfalg/groebner.hpp"
#include "surfalg/tilting.hpp"

using namespace surfalg;

namespace {

long star_cap(const MutationData& md) {
  long cap = 0;
  for (int h = 0; h < (int)md.qx.arrows.size(); ++h)
    if (md.in_star[h]) cap = std::max(cap, md.star_mn(h));
  return 2 * cap + 4;
}

struct Frozen {
  PresentedAlgebra alg;
  RewriteSystem rs;
  AlgebraOps ops;
};

Frozen freeze(const TriangulationQuiver& tq, const Weights& w) {
  Frozen f{build_wta(tq, w, true), {}, {}};
  f.rs = complete_with_retry(f.alg.q, f.alg.relations, default_cap(tq, w));
  f.ops = make_ops(f.alg, f.rs);
  return f;
}

}  // namespace

TEST_CASE("hom spaces between stalk complexes recover the Cartan matrix") {
  auto tq = fx::disc_quiver();
  auto f = freeze(tq, fx::default_weights(tq, 1, 1));
  int V = (int)tq.q.vertices.size();
  for (int i = 0; i < V; ++i)
    for (int j = 0; j < V; ++j) {
      auto X = stalk_complex(i), Y = stalk_complex(j);
      // projectives concentrated in one degree have no shifted homs
      CHECK(chain_hom_dim(f.ops, X, Y, 0) == f.alg.cartan[i][j]);
      CHECK(chain_hom_dim(f.ops, X, Y, 1) == 0);
      CHECK(chain_hom_dim(f.ops, X, Y, -1) == 0);
    }
  CHECK_THROWS_AS(chain_hom_dim(f.ops, stalk_complex(0), stalk_complex(0), 2), Error);
}

TEST_CASE("an empty map never gives a left approximation") {
  auto tq = fx::disc_quiver();
  auto f = freeze(tq, fx::default_weights(tq, 1, 1));
  auto md = build_mutated_quiver(tq, fx::default_weights(tq, 1, 1), {"t0.1"});
  int c = md.atlas[0].c;
  std::vector<int> complement;
  for (int v = 0; v < (int)tq.q.vertices.size(); ++v)
    if (v != c) complement.push_back(v);
  CHECK(!approximates(f.ops, c, {}, complement));
}

TEST_CASE("the one-sided complexes tilt to the mutated algebra") {
  for (long m : {1L, 2L}) {
    auto tq = fx::disc_quiver();
    auto w = fx::default_weights(tq, m, 1);
    auto base = freeze(tq, w);
    auto md = build_mutated_quiver(tq, w, {"t0.1"});
    auto mut = build_mutation(md);
    auto mrs = complete_with_retry(mut.q, mut.relations, star_cap(md));
    auto mops = make_ops(mut, mrs);

    auto fam = build_T_xi(base.ops, md);
    CHECK(fam.summands.size() == tq.q.vertices.size());
    auto r = end_algebra_summary(base.ops, fam, mut.cartan, mut.dimension);
    CHECK(r.t1_holds);
    CHECK(r.dim_end == mut.dimension);
    CHECK(r.cartan_match);
    CHECK(approximation_check(base.ops, md, "T_xi"));

    auto fam2 = build_That_xi(mops, md);
    auto r2 = end_algebra_summary(mops, fam2, base.alg.cartan, base.alg.dimension);
    CHECK(r2.t1_holds);
    CHECK(r2.dim_end == base.alg.dimension);
    CHECK(r2.cartan_match);
    CHECK(approximation_check(mops, md, "That_xi"));
  }
}

TEST_CASE("the double-move complex tilts back to the base up to a vertex swap") {
  auto tq = fx::pentagon_quiver();
  auto w = fx::pentagon_weights(tq, 1, 1);
  auto base = freeze(tq, w);
  auto md = build_mutated_quiver(tq, w, {"xi"});
  auto fam = build_T_xi_mu(base.ops, md);
  auto target = t_xi_mu_target(md, base.alg.cartan);
  auto r = end_algebra_summary(base.ops, fam, target, base.alg.dimension);
  CHECK(r.t1_holds);
  CHECK(r.dim_end == base.alg.dimension);
  CHECK(r.cartan_match);
  CHECK(approximation_check(base.ops, md, "T_xi_mu"));
  // the swap really moves the two patch vertices
  int c = md.atlas[0].c, d = md.atlas[0].d;
  CHECK(target[c][c] == base.alg.cartan[d][d]);
  CHECK(target[d][d] == base.alg.cartan[c][c]);
}
