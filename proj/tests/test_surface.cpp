#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace surfalg;

static Err code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code;
  }
  FAIL("expected an error");
  return Err::BadInput;
}

TEST_CASE("surface validation") {
  CHECK_NOTHROW(validate_surface(fx::disc_surface()));
  CHECK_NOTHROW(validate_surface(fx::torus_surface()));
  CHECK_NOTHROW(validate_surface(fx::selffolded3_surface()));

  Surface s = fx::disc_surface();
  SUBCASE("triangle referencing an unknown edge") {
    s.triangles[0][0] = "9";
    CHECK(code_of([&] { validate_surface(s); }) == Err::UnknownEdge);
  }
  SUBCASE("unknown boundary edge") {
    s.boundary.push_back("9");
    CHECK(code_of([&] { validate_surface(s); }) == Err::UnknownEdge);
  }
  SUBCASE("edge occurring three times") {
    s.triangles.push_back({"2", "3", "4"});
    CHECK(code_of([&] { validate_surface(s); }) == Err::InvalidSurface);
  }
  SUBCASE("boundary edge used twice in triangles") {
    s.boundary = {"3"};
    CHECK(code_of([&] { validate_surface(s); }) == Err::InvalidSurface);
  }
  SUBCASE("triangle on a single edge") {
    Surface t;
    t.edges = {"1", "2"};
    t.triangles = {{"1", "1", "1"}};
    t.boundary = {"2"};
    CHECK(code_of([&] { validate_surface(t); }) == Err::InvalidSurface);
  }
}

TEST_CASE("quiver of a surface") {
  auto tq = quiver_from_surface(fx::disc_surface());
  CHECK(tq.q.vertices.size() == 4);
  CHECK(tq.q.arrows.size() == 8);
  // deterministic ids: triangle arrows plus one fixed loop per boundary edge
  CHECK(tq.q.aindex("t0.0") >= 0);
  CHECK(tq.q.aindex("t1.2") >= 0);
  int b1 = tq.q.aindex("bnd.1");
  REQUIRE(b1 >= 0);
  CHECK(tq.q.arrows[b1].src == tq.q.arrows[b1].tgt);
  CHECK(tq.f[b1] == b1);
  // triangle slot arrows follow the oriented triple
  int a = tq.q.aindex("t0.0");
  CHECK(tq.q.vertices[tq.q.arrows[a].src] == "1");
  CHECK(tq.q.vertices[tq.q.arrows[a].tgt] == "2");
  CHECK(tq.f[a] == tq.q.aindex("t0.1"));
}

TEST_CASE("blow-up of interior edges") {
  auto s = fx::torus_surface();
  auto r = blow_up(s, {"2", "3"});
  CHECK(r.surface.edges.size() == 9);    // each blown edge becomes four
  CHECK(r.surface.triangles.size() == 6);  // two glued discs of two triangles
  CHECK_NOTHROW(validate_surface(r.surface));
  auto ntq = quiver_from_surface(r.surface);
  CHECK(ntq.q.vertices.size() == 9);
  CHECK(ntq.q.arrows.size() == 18);
  // orbit profile 14 + 2 + 2
  std::multiset<size_t> sizes;
  for (auto& o : ntq.g_orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<size_t>{2, 2, 14});

  SUBCASE("weight transport") {
    auto tq = quiver_from_surface(s);
    auto w = fx::default_weights(tq, 1, 1);
    auto nw = blow_up_weights(s, w, r);
    long dim = 0;
    for (int o = 0; o < (int)ntq.g_orbits.size(); ++o)
      dim += nw.m[o] * (long)ntq.g_orbits[o].size() * (long)ntq.g_orbits[o].size();
    CHECK(dim == 204);
    for (int o = 0; o < (int)ntq.g_orbits.size(); ++o)
      if (ntq.g_orbits[o].size() == 2) {
        CHECK(nw.m[o] == 1);
        CHECK(nw.c[o] == 1);
      }
  }
  SUBCASE("orientation choice picks the matching virtual arrow") {
    auto xi = epsilon_to_xi(r, {{"2", 1}, {"3", 1}});
    REQUIRE(xi.size() == 2);
    auto ntq2 = quiver_from_surface(r.surface);
    for (size_t i = 0; i < xi.size(); ++i) {
      int a = ntq2.q.aindex(xi[i]);
      REQUIRE(a >= 0);
      CHECK(ntq2.q.vertices[ntq2.q.arrows[a].src] == r.I[i] + ".c");
      CHECK(ntq2.q.vertices[ntq2.q.arrows[a].tgt] == r.I[i] + ".d");
    }
    auto flipped = epsilon_to_xi(r, {{"2", -1}, {"3", 1}});
    int a = ntq2.q.aindex(flipped[0]);
    CHECK(ntq2.q.vertices[ntq2.q.arrows[a].src] == "2.d");
    CHECK(ntq2.q.vertices[ntq2.q.arrows[a].tgt] == "2.c");
  }
  SUBCASE("missing orientation value") {
    CHECK(code_of([&] { epsilon_to_xi(r, {{"2", 1}}); }) == Err::MissingEpsilonValue);
  }

  SUBCASE("error paths") {
    CHECK(code_of([&] { blow_up(s, {}); }) == Err::EmptyEdgeSet);
    CHECK(code_of([&] { blow_up(s, {"9"}); }) == Err::UnknownEdge);
    CHECK(code_of([&] { blow_up(s, {"2", "2"}); }) == Err::BadInput);
  }
}

TEST_CASE("blow-up of boundary and self-folded edges") {
  SUBCASE("boundary edge closes into a disc") {
    auto s = fx::disc_surface();
    auto r = blow_up(s, {"1"});
    CHECK_NOTHROW(validate_surface(r.surface));
    // the boundary moves to the fresh edge b
    CHECK(std::find(r.surface.boundary.begin(), r.surface.boundary.end(), "1.b") !=
          r.surface.boundary.end());
  }
  SUBCASE("self-folded edge") {
    auto s = fx::selffolded3_surface();
    auto r = blow_up(s, {"1"});
    CHECK_NOTHROW(validate_surface(r.surface));
    auto ntq = quiver_from_surface(r.surface);
    // the loop at the folded edge opens into a 3-cycle
    int a = ntq.q.aindex("t0.0");
    REQUIRE(a >= 0);
    CHECK(ntq.n_of(a) == 3);
  }
}

TEST_CASE("attaching self-folded triangles to the boundary") {
  Surface s;
  s.edges = {"4", "5", "6"};
  s.triangles = {{"4", "5", "6"}};
  s.boundary = {"4", "5", "6"};
  auto r = attach_self_folded_boundary(s, {"4", "5", "6"});
  CHECK(r.boundary.empty());
  CHECK(r.edges.size() == 6);
  CHECK(r.triangles.size() == 4);
  auto tq = quiver_from_surface(r);
  // same shape as the bundled triple self-folded example
  auto tq2 = quiver_from_surface(fx::selffolded3_surface());
  std::multiset<size_t> a, b;
  for (auto& o : tq.g_orbits) a.insert(o.size());
  for (auto& o : tq2.g_orbits) b.insert(o.size());
  CHECK(a == b);

  CHECK(code_of([&] { attach_self_folded_boundary(s, {"9"}); }) == Err::NotBoundaryEdge);
  Surface closed = fx::torus_surface();
  CHECK(code_of([&] { attach_self_folded_boundary(closed, {"1"}); }) ==
        Err::NotBoundaryEdge);
}
