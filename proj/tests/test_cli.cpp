#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

// SURFALG_BIN and SURFALG_DATA are injected by the build
#ifndef SURFALG_BIN
#error "SURFALG_BIN must point at the command-line binary"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(SURFALG_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(SURFALG_DATA) + "/" + name; }

nlohmann::json parse(const RunResult& r) {
  auto j = nlohmann::json::parse(r.out, nullptr, false);
  REQUIRE(!j.is_discarded());
  return j;
}

}  // namespace

TEST_CASE("validate reports the cycle structure") {
  auto r = run("validate " + data("disc.json"));
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["valid"] == true);
  CHECK(j["vertices"] == 4);
  CHECK(j["g_orbits"].size() == 2);
}

TEST_CASE("build resolves weights from flags") {
  auto r = run("build " + data("disc.json"));
  CHECK(r.code == 0);
  CHECK(parse(r)["dimension"] == 40);

  r = run("build " + data("disc.json") + " --m 3 --c lambda=2");
  CHECK(r.code == 0);
  CHECK(parse(r)["dimension"] == 112);

  // positional values bind the template symbols in order
  r = run("build " + data("spherical.json") + " --m 1 2 --c 2 3");
  CHECK(r.code == 0);
  CHECK(parse(r)["dimension"] == 56);
}

TEST_CASE("the degenerate spherical parameters are refused") {
  auto r = run("build " + data("spherical.json") + " --m 1 1 --c 2 1/2");
  CHECK(r.code == 2);
  CHECK(parse(r)["error"] == "SingularSpherical");
}

TEST_CASE("validation failures exit with status two") {
  auto r = run("build /nonexistent.json");
  CHECK(r.code == 2);
  CHECK(parse(r)["error"] == "BadInput");
  r = run("mutate " + data("disc.json") + " --xi alpha");
  CHECK(r.code == 2);
  CHECK(parse(r)["error"] == "NotVirtualOrbit");
}

TEST_CASE("mutate emits the mutated presentation and optional star dump") {
  auto r = run("mutate " + data("pentagon.json") + " --xi mu");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["dimension"] == 40);
  CHECK(!j.contains("star"));

  r = run("mutate " + data("pentagon.json") + " --xi mu --show-star");
  CHECK(r.code == 0);
  j = parse(r);
  REQUIRE(j.contains("star"));
  CHECK(j["star"]["removed_vertices"].size() == 1);
  CHECK(j["star"].contains("zero_relation_audit"));
}

TEST_CASE("deform chains blow-up and mutation") {
  auto r = run("deform " + data("torus.json") + " --I 2,3 --eps 2=1,3=1");
  CHECK(r.code == 0);
  CHECK(parse(r)["dimension"] == 196);
}

TEST_CASE("blowup emits a surface document that builds") {
  auto r = run("blowup " + data("torus.json") + " --I 2,3");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["edges"].size() == 9);
  std::string tmp = "/tmp/surfalg_blown.json";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f != nullptr);
  fputs(r.out.c_str(), f);
  fclose(f);
  auto r2 = run("build " + tmp);
  CHECK(r2.code == 0);
  CHECK(parse(r2)["dimension"] == 204);
}

TEST_CASE("oracle-check accepts its own build output") {
  auto r = run("build " + data("disc.json"));
  REQUIRE(r.code == 0);
  std::string tmp = "/tmp/surfalg_alg.json";
  FILE* f = fopen(tmp.c_str(), "w");
  REQUIRE(f != nullptr);
  fputs(r.out.c_str(), f);
  fclose(f);
  auto r2 = run("oracle-check " + tmp);
  CHECK(r2.code == 0);
  auto j = parse(r2);
  CHECK(j["agrees"] == true);
  CHECK(j["mismatches"].empty());
}

TEST_CASE("tilting-check passes on the disc mutation") {
  auto r = run("tilting-check " + data("disc.json") + " --xi xi --which T_xi_mu");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j["t1_holds"] == true);
  CHECK(j["cartan_match"] == true);
  CHECK(j["approximation"] == true);
}

TEST_CASE("regress filters by substring") {
  auto r = run("regress --only dims/disc");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS dims/disc-m1") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
