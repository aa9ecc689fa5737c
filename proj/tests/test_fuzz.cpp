#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "surfalg/regress.hpp"

// the random-instance sweep: builds two hundred random admissible inputs and
// checks dimensions, Cartan symmetry and every legal single-arrow mutation
TEST_CASE("random instance sweep") {
  for (auto& row : surfalg::regress::build_rows()) {
    if (row.name != "fuzz/random-200") continue;
    auto msg = row.run();
    if (!msg.empty()) MESSAGE(msg);
    CHECK(msg.empty());
    return;
  }
  FAIL("the random sweep row is missing from the suite");
}
