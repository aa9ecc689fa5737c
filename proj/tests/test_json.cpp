#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "surfalg/json_io.hpp"

using namespace surfalg;

namespace {

Json disc_doc_json() {
  Json j;
  j["schema"] = kSchema;
  j["edges"] = {"1", "2", "3", "4"};
  j["triangles"] = {{"1", "2", "4"}, {"2", "3", "4"}};
  j["boundary"] = {"1", "3"};
  j["weights"] = Json::array();
  j["weights"].push_back({{"rep", "t0.0"}, {"m", "m"}, {"c", "lambda"}});
  j["weights"].push_back({{"rep", "t0.1"}, {"m", 1}, {"c", 1}});
  return j;
}

}  // namespace

TEST_CASE("surface documents parse and rebuild") {
  auto doc = parse_input_doc(disc_doc_json());
  CHECK(doc.is_surface);
  CHECK(doc.surface.edges.size() == 4);
  CHECK(doc.surface.boundary.size() == 2);
  REQUIRE(doc.weights.size() == 2);
  CHECK(doc.weights[0].rep == "t0.0");
  CHECK(doc.weights[0].m == "m");   // symbolic entries stay as names
  CHECK(doc.weights[1].m == "1");   // literals are normalized to strings
  auto tq = doc_quiver(doc);
  CHECK(tq.q.vertices.size() == 4);
  auto round = surface_doc_json(doc.surface, doc.weights);
  CHECK(parse_input_doc(round).surface.triangles == doc.surface.triangles);
}

TEST_CASE("explicit quiver documents parse") {
  Json j;
  j["schema"] = kSchema;
  j["vertices"] = {"1", "2"};
  j["arrows"] = Json::array();
  for (auto [id, s, t] : {std::tuple{"a", "1", "2"}, {"b", "2", "1"},
                          {"x", "1", "1"}, {"y", "2", "2"}}) {
    j["arrows"].push_back({{"id", id}, {"source", s}, {"target", t}});
  }
  j["f"] = {{"a", "y"}, {"y", "b"}, {"b", "x"}, {"x", "a"}};
  auto doc = parse_input_doc(j);
  CHECK(!doc.is_surface);
  CHECK(doc.quiver.arrows.size() == 4);
  CHECK(doc.f_pairs.size() == 4);
}

TEST_CASE("malformed documents are rejected with a parse error") {
  auto expect_bad = [](Json j) {
    try {
      parse_input_doc(j);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code == Err::BadInput);
    }
  };
  Json j = disc_doc_json();
  j["schema"] = "surfalg/99";
  expect_bad(j);
  j = disc_doc_json();
  j.erase("triangles");
  expect_bad(j);
  j = disc_doc_json();
  j["triangles"][0] = {"1", "2"};  // not a triple
  expect_bad(j);
  j = disc_doc_json();
  j["weights"][0].erase("rep");
  expect_bad(j);
  expect_bad(Json::array());
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), Error);
}

TEST_CASE("validation summaries carry the cycle structure") {
  auto tq = fx::disc_quiver();
  auto j = validation_summary_json(tq);
  CHECK(j["valid"] == true);
  CHECK(j["vertices"] == 4);
  CHECK(j["arrows"] == 8);
  CHECK(j["g_orbits"].size() == 2);
  CHECK(j["f_orbits"].size() == 4);
}

TEST_CASE("algebra output round-trips through its own document") {
  auto tq = fx::disc_quiver();
  auto w = fx::default_weights(tq, 1, Rat(3, 2));
  auto alg = build_wta(tq, w);
  auto j = algebra_to_json(alg);
  CHECK(j["schema"] == kSchema);
  CHECK(j["dimension"] == alg.dimension);
  auto doc = parse_algebra_doc(j);
  CHECK(doc.dimension == alg.dimension);
  CHECK(doc.cartan == alg.cartan);
  CHECK(doc.q.arrows.size() == alg.q.arrows.size());
  CHECK(doc.relations.size() == alg.relations.size());
  long total = 0;
  for (auto& [k, v] : doc.basis_counts) total += v;
  CHECK(total == alg.dimension);
  // rational parameters survive as exact strings
  bool found = false;
  for (auto& rel : doc.relations)
    for (auto& t : rel)
      if (t.coef == Rat(3, 2) || t.coef == Rat(-3, 2)) found = true;
  CHECK(found);
}

TEST_CASE("serialization is deterministic") {
  auto tq = fx::pentagon_quiver();
  auto w = fx::pentagon_weights(tq, 2, 1);
  auto a = algebra_to_json(build_wta(tq, w)).dump(2);
  auto b = algebra_to_json(build_wta(tq, w)).dump(2);
  CHECK(a == b);
}

TEST_CASE("reduced-quiver dumps describe the surgery") {
  auto tq = fx::disc_quiver();
  auto w = fx::default_weights(tq, 1, 1);
  auto md = build_mutated_quiver(tq, w, {"t0.1"});
  RelationAudit audit;
  mutation_relations(md, &audit);
  auto j = star_to_json(md, audit);
  CHECK(j["removed_vertices"].size() == 1);
  CHECK(j["f_star"].size() == j["star_arrows"].size());
  CHECK(!j["g_star_orbits"].empty());
  for (auto& o : j["g_star_orbits"]) {
    CHECK(o.contains("m"));
    CHECK(o.contains("c"));
    CHECK(o.contains("n_nu"));
  }
  CHECK(j.contains("zero_relation_audit"));
}

TEST_CASE("text renderings stay aligned") {
  auto tq = fx::disc_quiver();
  auto alg = build_wta(tq, fx::default_weights(tq, 1, 1));
  auto ct = cartan_text(alg.cartan);
  CHECK(ct.find("4") != std::string::npos);
  auto at = algebra_text(alg);
  CHECK(at.find("= 0") != std::string::npos);
  CHECK(at.find("dimension") != std::string::npos);
}
