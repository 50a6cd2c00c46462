#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "counting.hpp"
#include "lp.hpp"

using namespace inferfan;

namespace {

// Primitive positive integer vectors with coordinate sum below n, the normal
// directions the arrangement routines are supposed to enumerate.
std::vector<IntVec> primitive_normals(int d, long long n) {
  std::vector<IntVec> out;
  IntVec a(static_cast<size_t>(d), 1);
  const std::function<void(int, long long)> rec = [&](int pos, long long left) {
    if (pos == d) {
      if (content(a) == 1) out.push_back(a);
      return;
    }
    for (long long v = 1; v + (d - pos - 1) <= left; ++v) {
      a[static_cast<size_t>(pos)] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, n - 1);
  return out;
}

// Chambers counted by deciding, for every sign vector, whether the open cone
// { x : sign_i (a_i . x) > 0 } is nonempty. Homogeneity turns the strict
// system into G x >= 1.
Int chambers_by_lp(const std::vector<IntVec>& normals, size_t r) {
  const size_t N = normals.size();
  REQUIRE(N <= 12);
  Int cnt = 0;
  for (uint64_t mask = 0; mask < (uint64_t(1) << N); ++mask) {
    std::vector<IntVec> G;
    IntVec h;
    for (size_t i = 0; i < N; ++i) {
      G.push_back(((mask >> i) & 1) ? normals[i] : neg(normals[i]));
      h.push_back(1);
    }
    if (lp_feasible(G, h, r).feasible) cnt += 1;
  }
  return cnt;
}

}  // namespace

TEST_CASE("census fixtures on the short chains") {
  const auto r1 = count_inference_functions(build_homogeneous_hmm(1, 2, 2));
  CHECK(r1.record() ==
        "model=hmm1 observations=2 used=2 distinct=2 count=4 m=2 M=1 d=8 gs=4 "
        "fif=207013957855961632848306 dominant=9007199254740992/315");
  REQUIRE(r1.bound.gs.has_value());
  CHECK(r1.count == *r1.bound.gs);  // the bound is tight here
  CHECK(r1.sum.verts.size() == 4);

  const auto r2 = count_inference_functions(build_homogeneous_hmm(2, 2, 2));
  CHECK(r2.count == 38);
  CHECK(r2.bound.m == 14);
  CHECK(r2.bound.M == 3);
  CHECK(*r2.bound.gs == 11624);

  const auto r3 = count_inference_functions(build_homogeneous_hmm(3, 2, 2));
  CHECK(r3.count == 398);
  CHECK(r3.observations == 8);
  CHECK(r3.used == 8);
  CHECK(r3.distinct == 8);
  CHECK(r3.bound.m == 46);
}

TEST_CASE("two chain census against the reference summation route") {
  const auto r = count_inference_functions(build_lowerbound_hmm(2, 7));
  CHECK(r.record() ==
        "model=lb2n7 observations=128 used=29 distinct=16 count=23 "
        "m=14 M=6 d=2 gs=28 fif=338 dominant=288");

  std::set<std::vector<IntVec>> seen;
  std::vector<VertexPolytope> distinct;
  auto m = build_lowerbound_hmm(2, 7);
  for (uint64_t i = 0; i < 128; ++i) {
    try {
      auto p = observation_polytope(m, nth_observation(m, i)).poly;
      if (seen.insert(p.verts).second) distinct.push_back(std::move(p));
    } catch (const Unexplainable&) {
    }
  }
  REQUIRE(distinct.size() == 16);
  CHECK(minkowski_naive(2, distinct) == r.sum);
  CHECK(Int(static_cast<unsigned long>(polygon_sum_vertex_count(distinct))) == r.count);

  // at least one chamber of the slope arrangement per inference function
  CHECK(r.count >= arrangement_chambers(2, 7).chambers);
  CHECK(count_inference_functions(build_lowerbound_hmm(2, 5)).count >=
        arrangement_chambers(2, 5).chambers);
  CHECK(count_inference_functions(build_lowerbound_hmm(2, 6)).count >=
        arrangement_chambers(2, 6).chambers);
}

TEST_CASE("job splitting does not change any reported field") {
  const auto a = count_inference_functions(build_homogeneous_hmm(3, 2, 2), 1u << 20, 1);
  const auto b = count_inference_functions(build_homogeneous_hmm(3, 2, 2), 1u << 20, 3);
  CHECK(a.record() == b.record());
  CHECK(a.sum == b.sum);
  const auto c = count_inference_functions(build_lowerbound_hmm(2, 6), 1u << 20, 4);
  CHECK(c.record() == count_inference_functions(build_lowerbound_hmm(2, 6)).record());
}

TEST_CASE("one parameter models never exceed two inference functions") {
  FactorModel m;
  m.name = "onepar";
  m.d = 1;
  m.params = {"t"};
  m.hidden_alphabet = {"a", "b"};
  m.hidden_count = 3;
  m.observed_alphabet = {"0", "1"};
  m.observed_count = 3;
  for (int32_t i = 0; i < 3; ++i) {
    Factor f;
    f.scope_hidden = {i};
    f.scope_observed = {i};
    f.table[{0, 0}] = IntVec{1};
    f.table[{0, 1}] = IntVec{0};
    f.table[{1, 0}] = IntVec{0};
    f.table[{1, 1}] = IntVec{3};
    m.factors.push_back(std::move(f));
  }
  for (int32_t i = 0; i + 1 < 3; ++i) {
    Factor f;
    f.scope_hidden = {i, i + 1};
    f.table[{0, 0}] = IntVec{0};
    f.table[{0, 1}] = IntVec{1};
    f.table[{1, 0}] = IntVec{2};
    f.table[{1, 1}] = IntVec{0};
    m.factors.push_back(std::move(f));
  }
  m.validate();
  const auto r = count_inference_functions(m);
  CHECK(r.count <= 2);
  CHECK(r.sum.dim == 1);
}

TEST_CASE("census cap refuses oversized observation spaces") {
  CHECK_THROWS_AS(count_inference_functions(build_homogeneous_hmm(25, 2, 2), 100),
                  CapExceeded);
  CHECK_THROWS_AS(
      sample_inference_functions(build_homogeneous_hmm(25, 2, 2), 10, 1, 100),
      CapExceeded);
}

TEST_CASE("sampling census saturates tiny counts and is reproducible") {
  const auto m1 = build_homogeneous_hmm(1, 2, 2);
  const auto s1 = sample_inference_functions(m1, 2000, 42);
  CHECK(s1.distinct == 4);
  CHECK(s1.record() == "model=hmm1 samples=2000 seed=42 distinct=4");
  CHECK(sample_inference_functions(m1, 2000, 42).record() == s1.record());

  const auto lb = build_lowerbound_hmm(2, 5);
  CHECK(sample_inference_functions(lb, 4000, 7).distinct == 12);

  // sampling can only ever see what the census counts
  const auto s2 = sample_inference_functions(build_homogeneous_hmm(2, 2, 2), 500, 9);
  CHECK(s2.distinct <= 38);
  CHECK(s2.distinct >= 2);
}

TEST_CASE("block observation family fills its own slope arrangement") {
  const auto m = build_lowerbound_hmm(2, 7);
  std::vector<std::vector<int32_t>> family;
  std::vector<VertexPolytope> segments;
  for (const auto& a : block_vectors(2, 7)) {
    family.push_back(block_observation(2, 7, a));
    const auto p = observation_polytope(m, family.back()).poly;
    REQUIRE(p.verts.size() == 2);
    CHECK(p.verts[0] == IntVec{0, 0});
    CHECK(p.verts[1] == a);
    segments.push_back(p);
  }
  REQUIRE(family.size() == 6);
  const auto zon = polygon_sum_vertex_count(segments);
  CHECK(zon == 10);  // five distinct directions among the six blocks
  const auto s = sample_inference_functions(m, 2000, 3, 1u << 20, &family);
  CHECK(s.distinct == zon);
  CHECK(Int(static_cast<long>(zon)) <= arrangement_chambers(2, 7).chambers);
}

TEST_CASE("planar arrangements match a direct coprime pair census") {
  for (long long n : {3, 4, 5, 6, 7, 8, 12, 20, 37, 60, 100, 151, 200}) {
    long long direct = 0;
    for (long long a = 1; a < n; ++a)
      for (long long b = 1; a + b < n; ++b)
        if (std::gcd(a, b) == 1) ++direct;
    const auto r = arrangement_chambers(2, n);
    CHECK(r.normals == static_cast<uint64_t>(direct));
    CHECK(r.chambers == Int(2) * Int(static_cast<long>(direct)));
  }
  CHECK(arrangement_chambers(2, 4).record() == "d=2 n=4 normals=3 chambers=6");
}

TEST_CASE("spatial arrangements match an exact sign vector census") {
  for (long long n : {4, 5, 6}) {
    const auto normals = primitive_normals(3, n);
    const auto r = arrangement_chambers(3, n);
    CHECK(r.normals == normals.size());
    CHECK(r.chambers == chambers_by_lp(normals, 3));
  }
  CHECK(arrangement_chambers(3, 4).record() == "d=3 n=4 normals=1 chambers=2");
  CHECK(arrangement_chambers(3, 5).record() == "d=3 n=5 normals=4 chambers=14");
  CHECK(arrangement_chambers(3, 6).record() == "d=3 n=6 normals=10 chambers=68");
  // the planar census in the same harness, for the helper's sake
  CHECK(arrangement_chambers(2, 5).chambers == chambers_by_lp(primitive_normals(2, 5), 2));
}

TEST_CASE("extreme ray scan") {
  CHECK(extreme_rays_check(2, 3) == 2);
  CHECK(extreme_rays_check(2, 50) == 2);
  CHECK(extreme_rays_check(3, 4) == 0);  // one plane, no rays to speak of
  CHECK(extreme_rays_check(3, 5) == 4);
  CHECK(extreme_rays_check(3, 6) == 4);
}

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(arrangement_chambers(1, 5), BadInput);
  CHECK_THROWS_AS(arrangement_chambers(2, 2), BadInput);
  CHECK_THROWS_AS(arrangement_chambers(2, 10001), CapExceeded);
  CHECK_THROWS_AS(arrangement_chambers(3, 9), CapExceeded);
  CHECK_THROWS_AS(arrangement_chambers(4, 5), CapExceeded);
  CHECK_THROWS_AS(extreme_rays_check(3, 7), CapExceeded);
  CHECK_THROWS_AS(extreme_rays_check(4, 5), CapExceeded);
}

TEST_CASE("zeta product brackets") {
  const auto inv = [](const char* num) -> Rat {
    return Rat(Int(num)) / Rat(Int("10000000000000000"));
  };
  const auto z2 = zeta_reference(2, 1);
  CHECK(z2.second - z2.first <= Rat(1) / Rat(1000000));
  CHECK(z2.first <= inv("6079271018540266"));
  CHECK(z2.second >= inv("6079271018540267"));

  const auto z3 = zeta_reference(3, 1);
  CHECK(z3.first <= inv("8319073725807074"));
  CHECK(z3.second >= inv("8319073725807075"));

  const auto z23 = zeta_reference(3, 2);
  CHECK(z23.first <= inv("5057390380239874"));
  CHECK(z23.second >= inv("5057390380239875"));

  CHECK_THROWS_AS(zeta_reference(2, 0), BadInput);
  CHECK_THROWS_AS(zeta_reference(2, 2), BadInput);
}

TEST_CASE("primitive minor probability concentrates near the zeta product") {
  const auto near = [](const PrimProbReport& r, const std::pair<Rat, Rat>& z, int cents) {
    const Rat slack = Rat(cents) / Rat(100);
    CHECK(r.p_hat >= z.first - slack);
    CHECK(r.p_hat <= z.second + slack);
  };
  const auto a = primitive_probability(2, 1, 1000000, 4000, 11);
  near(a, zeta_reference(2, 1), 3);
  CHECK(a.p_hat == Rat(Int(static_cast<unsigned long>(a.hits))) / Rat(4000));

  const auto b = primitive_probability(3, 2, 1000000, 3000, 12);
  near(b, zeta_reference(3, 2), 4);

  CHECK(primitive_probability(2, 1, 1000000, 500, 5).record() ==
        primitive_probability(2, 1, 1000000, 500, 5).record());
}

TEST_CASE("primitive minor probability validation") {
  CHECK_THROWS_WITH_AS(primitive_probability(2, 0, 10, 10, 1),
                       "need 1 <= m < d (zeta(1) diverges)", BadInput);
  CHECK_THROWS_AS(primitive_probability(2, 2, 10, 10, 1), BadInput);
  CHECK_THROWS_AS(primitive_probability(2, 1, 0, 10, 1), BadInput);
  CHECK_THROWS_AS(primitive_probability(2, 1, 10, 0, 1), BadInput);
}
