#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "minkowski.hpp"
#include "polytope.hpp"
#include "rng.hpp"

using namespace inferfan;

namespace {

NewtonPolytope np_of(int dim, const std::vector<IntVec>& pts) {
  NewtonPolytope acc = np_point(dim, pts[0], {0});
  for (size_t i = 1; i < pts.size(); ++i)
    acc = np_add(acc, np_point(dim, pts[i], {static_cast<int32_t>(i)}));
  return acc;
}

VertexPolytope rand_poly(Rng& rng, int dim, int span) {
  std::vector<IntVec> pts;
  const size_t n = 1 + rng.below(6);
  for (size_t i = 0; i < n; ++i) {
    IntVec p(dim);
    for (auto& c : p) c = rng.range(0, span);
    pts.push_back(std::move(p));
  }
  return hull_reduce(dim, pts);
}

}  // namespace

TEST_CASE("np_add quoted examples") {
  auto P = np_point(2, {3, 0}, {0});
  auto Q = np_point(2, {0, 4}, {1});
  auto S = np_add(P, Q);
  CHECK(S.poly.verts == std::vector<IntVec>{{0, 4}, {3, 0}});
  CHECK(np_add(S, S).poly == S.poly);

  auto fig = np_of(2, {{3, 0}, {2, 2}, {1, 2}, {1, 0}, {0, 4}});
  CHECK(fig.poly.verts == std::vector<IntVec>{{0, 4}, {1, 0}, {2, 2}, {3, 0}});
  REQUIRE(fig.tracked());
}

TEST_CASE("np_add keeps the smaller witness on coinciding exponents") {
  auto a = np_point(2, {1, 1}, {3, 1});
  auto b = np_point(2, {1, 1}, {2, 9});
  CHECK(np_add(a, b).wit == std::vector<Witness>{{2, 9}});
  CHECK(np_add(b, a).wit == std::vector<Witness>{{2, 9}});
}

TEST_CASE("np_mul quoted examples") {
  auto h = np_add(np_point(2, {0, 0}, {0}), np_point(2, {1, 0}, {1}));
  auto v = np_add(np_point(2, {0, 0}, {0}), np_point(2, {0, 1}, {1}));
  auto sq = np_mul(h, v);
  CHECK(sq.poly.verts == std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  auto fig = np_of(2, {{3, 0}, {2, 2}, {1, 2}, {1, 0}, {0, 4}});
  auto one = np_point(2, {0, 0}, {5});
  CHECK(np_mul(fig, one).poly == fig.poly);

  auto s1 = np_add(np_point(2, {0, 0}, {0}), np_point(2, {1, 1}, {1}));
  auto s2 = np_add(np_point(2, {0, 0}, {0}), np_point(2, {2, 2}, {1}));
  CHECK(np_mul(s1, s2).poly.verts == std::vector<IntVec>{{0, 0}, {3, 3}});
}

TEST_CASE("np_mul concatenates witnesses along the unique decomposition") {
  auto h = np_add(np_point(2, {0, 0}, {7}), np_point(2, {1, 0}, {8}));
  auto v = np_add(np_point(2, {0, 0}, {4}), np_point(2, {0, 1}, {5}));
  auto sq = np_mul(h, v);
  REQUIRE(sq.tracked());
  // canonical vertex order (0,0),(0,1),(1,0),(1,1)
  CHECK(sq.wit == std::vector<Witness>{{7, 4}, {7, 5}, {8, 4}, {8, 5}});
}

TEST_CASE("semiring laws on random inputs") {
  Rng rng(23, 0);
  for (int it = 0; it < 80; ++it) {
    const int dim = 2 + static_cast<int>(rng.below(2));
    auto F = np_of(dim, rand_poly(rng, dim, 3).verts);
    auto G = np_of(dim, rand_poly(rng, dim, 3).verts);
    auto H = np_of(dim, rand_poly(rng, dim, 3).verts);
    CAPTURE(it);
    CHECK(np_add(F, G).poly == np_add(G, F).poly);
    CHECK(np_mul(F, G).poly == np_mul(G, F).poly);
    CHECK(np_mul(np_add(F, G), H).poly ==
          np_add(np_mul(F, H), np_mul(G, H)).poly);
  }
}

TEST_CASE("bounds quoted examples and line format") {
  auto r1 = bounds(1, std::nullopt, 1);
  REQUIRE(r1.gs);
  CHECK(*r1.gs == 2);

  auto r2 = bounds(std::nullopt, 9, 2);
  REQUIRE(r2.fif);
  CHECK(*r2.fif == 722);
  REQUIRE(r2.dominant);
  CHECK(*r2.dominant == Rat(648));
  CHECK(r2.line() == "m=- M=9 d=2 gs=- fif=722 dominant=648");

  auto r3 = bounds(0, std::nullopt, 3);
  CHECK(*r3.gs == 1);

  CHECK_THROWS_AS(bounds(1, 1, 0), BadInput);
  CHECK_THROWS_AS(bounds(-1, std::nullopt, 2), BadInput);
  CHECK_THROWS_AS(bounds(std::nullopt, -2, 2), BadInput);
}

TEST_CASE("dominant term formula for d=3") {
  // 2^7 / 2! * M^6
  auto r = bounds(std::nullopt, 2, 3);
  CHECK(*r.dominant == Rat(4096));
}

TEST_CASE("minkowski quoted examples") {
  auto seg = [](IntVec a, IntVec b) {
    VertexPolytope s{2, {std::move(a), std::move(b)}};
    std::sort(s.verts.begin(), s.verts.end());
    return s;
  };
  std::vector<VertexPolytope> zono = {seg({0, 0}, {1, 1}), seg({0, 0}, {1, 2}),
                                      seg({0, 0}, {2, 1})};
  auto ms = minkowski_sum_many(2, zono, false);
  CHECK(ms.sum.verts.size() == 6);
  CHECK(ms.sum == minkowski_naive(2, zono));
  CHECK(ms.sum == polygon_sum(zono));

  std::vector<VertexPolytope> copies(5, seg({0, 0}, {1, 1}));
  auto ms2 = minkowski_sum_many(2, copies, false);
  CHECK(ms2.sum.verts == std::vector<IntVec>{{0, 0}, {5, 5}});
}

TEST_CASE("three routes agree on random 2-D collections") {
  Rng rng(29, 0);
  for (int it = 0; it < 120; ++it) {
    std::vector<VertexPolytope> ps;
    const size_t k = 1 + rng.below(4);
    for (size_t i = 0; i < k; ++i) ps.push_back(rand_poly(rng, 2, 4));
    CAPTURE(it);
    auto bfs = minkowski_sum_many(2, ps, false).sum;
    auto naive = minkowski_naive(2, ps);
    auto walk = polygon_sum(ps);
    CHECK(bfs == naive);
    CHECK(bfs == walk);
    CHECK(polygon_sum_vertex_count(ps) == walk.verts.size());
    std::reverse(ps.begin(), ps.end());
    CHECK(minkowski_sum_many(2, ps, false).sum == bfs);
  }
}

TEST_CASE("cell BFS agrees with the naive route in 3-D and 4-D") {
  Rng rng(31, 0);
  for (int it = 0; it < 60; ++it) {
    const int dim = 3 + static_cast<int>(rng.below(2));
    std::vector<VertexPolytope> ps;
    const size_t k = 1 + rng.below(3);
    for (size_t i = 0; i < k; ++i) ps.push_back(rand_poly(rng, dim, 3));
    CAPTURE(it);
    CAPTURE(dim);
    auto bfs = minkowski_sum_many(dim, ps, false).sum;
    CHECK(bfs == minkowski_naive(dim, ps));
    std::rotate(ps.begin(), ps.begin() + ps.size() / 2, ps.end());
    CHECK(minkowski_sum_many(dim, ps, false).sum == bfs);
  }
}

TEST_CASE("requested choices decompose every sum vertex") {
  Rng rng(37, 0);
  for (int it = 0; it < 60; ++it) {
    const int dim = 2 + static_cast<int>(rng.below(3));
    std::vector<VertexPolytope> ps;
    const size_t k = 1 + rng.below(3);
    for (size_t i = 0; i < k; ++i) ps.push_back(rand_poly(rng, dim, 3));
    auto ms = minkowski_sum_many(dim, ps, true);
    REQUIRE(ms.choice.size() == ms.sum.verts.size());
    CAPTURE(it);
    for (size_t v = 0; v < ms.sum.verts.size(); ++v) {
      REQUIRE(ms.choice[v].size() == ps.size());
      IntVec acc(dim, 0);
      for (size_t s = 0; s < ps.size(); ++s)
        acc = add(acc, ps[s].verts[ms.choice[v][s]]);
      CHECK(acc == ms.sum.verts[v]);
    }
  }
}

TEST_CASE("sum vertex count respects the edge-class bound") {
  Rng rng(41, 0);
  for (int it = 0; it < 50; ++it) {
    const int dim = 2 + static_cast<int>(rng.below(2));
    std::vector<VertexPolytope> ps;
    const size_t k = 1 + rng.below(4);
    for (size_t i = 0; i < k; ++i) ps.push_back(rand_poly(rng, dim, 3));
    std::set<IntVec> classes;
    for (const auto& p : ps)
      for (const auto& e : edge_directions(p)) classes.insert(e);
    auto ms = minkowski_sum_many(dim, ps, false);
    auto b = bounds(static_cast<long long>(classes.size()), std::nullopt, dim);
    CAPTURE(it);
    CHECK(Int(static_cast<long>(ms.sum.verts.size())) <= *b.gs);
  }
}

TEST_CASE("single point summands only translate") {
  std::vector<VertexPolytope> ps = {{2, {{1, 2}}}, {2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}}};
  auto ms = minkowski_sum_many(2, ps, false);
  CHECK(ms.sum.verts == std::vector<IntVec>{{1, 2}, {1, 3}, {2, 2}, {2, 3}});
  CHECK(polygon_sum(ps).verts == ms.sum.verts);
}
