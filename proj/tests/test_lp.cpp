#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lp.hpp"
#include "rng.hpp"

using namespace inferfan;

TEST_CASE("feasible 2-D system with interior solutions") {
  // w1 >= 1, w2 >= 1, w1 + w2 >= 3
  std::vector<IntVec> G = {{1, 0}, {0, 1}, {1, 1}};
  IntVec h = {1, 1, 3};
  auto d = lp_feasible(G, h, 2);
  CHECK(d.feasible);
  CHECK(lp_check(G, h, d));
}

TEST_CASE("infeasible pair of opposite strict bounds") {
  // w1 >= 1 and -w1 >= 0
  std::vector<IntVec> G = {{1}, {-1}};
  IntVec h = {1, 0};
  auto d = lp_feasible(G, h, 1);
  CHECK_FALSE(d.feasible);
  CHECK(lp_check(G, h, d));
}

TEST_CASE("farkas certificate fields verify by hand") {
  // w >= 2, -w >= -1 is infeasible
  std::vector<IntVec> G = {{1}, {-1}};
  IntVec h = {2, -1};
  auto d = lp_feasible(G, h, 1);
  REQUIRE_FALSE(d.feasible);
  REQUIRE(d.farkas.size() == 2);
  Rat comb = d.farkas[0] - d.farkas[1];      // farkas^T G, single column
  Rat rhs = d.farkas[0] * 2 - d.farkas[1];   // farkas^T h
  CHECK(comb == 0);
  CHECK(rhs > 0);
  CHECK(d.farkas[0] >= 0);
  CHECK(d.farkas[1] >= 0);
}

TEST_CASE("equality encoded as two inequalities") {
  // w1 + w2 >= 4, -(w1 + w2) >= -4, w1 >= 0, w2 >= 0
  std::vector<IntVec> G = {{1, 1}, {-1, -1}, {1, 0}, {0, 1}};
  IntVec h = {4, -4, 0, 0};
  auto d = lp_feasible(G, h, 2);
  CHECK(d.feasible);
  CHECK(lp_check(G, h, d));
  CHECK(d.witness[0] + d.witness[1] == 4);
}

TEST_CASE("tight but feasible system") {
  // only w = (1, 1) works
  std::vector<IntVec> G = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  IntVec h = {1, -1, 1, -1};
  auto d = lp_feasible(G, h, 2);
  REQUIRE(d.feasible);
  CHECK(d.witness == RatVec{Rat(1), Rat(1)});
}

TEST_CASE("redundant rows do not change the verdict") {
  std::vector<IntVec> G = {{1, 2}, {2, 4}, {1, 2}};
  IntVec h = {2, 4, 1};
  auto d = lp_feasible(G, h, 2);
  CHECK(d.feasible);
  CHECK(lp_check(G, h, d));
}

TEST_CASE("random systems: verdict always carries a valid certificate") {
  Rng rng(2024, 0);
  for (int it = 0; it < 400; ++it) {
    const size_t r = 1 + rng.below(4);
    const size_t rows = 1 + rng.below(6);
    std::vector<IntVec> G(rows, IntVec(r));
    IntVec h(rows);
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < r; ++j) G[i][j] = rng.range(-5, 5);
      h[i] = rng.range(-5, 5);
    }
    auto d = lp_feasible(G, h, r);
    CAPTURE(it);
    CHECK(lp_check(G, h, d));
  }
}

TEST_CASE("higher dimensional feasible box") {
  const size_t r = 6;
  std::vector<IntVec> G;
  IntVec h;
  for (size_t j = 0; j < r; ++j) {
    IntVec lo(r, 0), hi(r, 0);
    lo[j] = 1;
    hi[j] = -1;
    G.push_back(lo);
    h.push_back(-3);
    G.push_back(hi);
    h.push_back(-3);
  }
  auto d = lp_feasible(G, h, r);
  CHECK(d.feasible);
  CHECK(lp_check(G, h, d));
}
