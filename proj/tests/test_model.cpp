#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "model.hpp"

using namespace inferfan;

namespace {

// Exhaustive explanation finder. Positions are restricted to states whose
// emission entry for the observed symbol exists (reading the factor tables
// directly), every surviving assignment still goes through monomial_of.
std::vector<IntVec> explanations_brute(const FactorModel& m,
                                       const std::vector<int32_t>& tau) {
  const int q = m.hidden_count;
  std::vector<std::vector<int32_t>> cand(static_cast<size_t>(q));
  for (int pos = 0; pos < q; ++pos) {
    for (int32_t s = 0; s < m.l(); ++s) {
      bool ok = true;
      for (const auto& f : m.factors) {
        if (f.scope_hidden == std::vector<int32_t>{pos} &&
            f.scope_observed == std::vector<int32_t>{pos} &&
            !f.table.count({s, tau[static_cast<size_t>(pos)]}))
          ok = false;
      }
      if (ok) cand[static_cast<size_t>(pos)].push_back(s);
    }
  }
  std::vector<IntVec> monos;
  std::vector<int32_t> h(static_cast<size_t>(q));
  std::vector<size_t> idx(static_cast<size_t>(q), 0);
  while (true) {
    for (int i = 0; i < q; ++i)
      h[static_cast<size_t>(i)] = cand[static_cast<size_t>(i)][idx[static_cast<size_t>(i)]];
    if (auto mono = monomial_of(m, h, tau)) monos.push_back(*mono);
    int pos = q - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] + 1 == cand[static_cast<size_t>(pos)].size())
      idx[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
  }
  std::sort(monos.begin(), monos.end());
  return monos;
}

}  // namespace

TEST_CASE("homogeneous hmm shape") {
  auto m = build_homogeneous_hmm(5, 2, 2);
  CHECK(m.name == "hmm5");
  CHECK(m.d == 8);
  CHECK(m.params.size() == 8);
  CHECK(m.hidden_count == 5);
  CHECK(m.observed_count == 5);
  CHECK(m.factors.size() == 9);  // 5 emissions + 4 transitions
  REQUIRE(m.edges.has_value());
  CHECK(*m.edges == 9);
  CHECK(m.observation_space() == 32);
  CHECK(complexity_M(m) == 9);  // 2n - 1
  m.validate();

  auto m3 = build_homogeneous_hmm(3, 3, 2);
  CHECK(m3.d == 9 + 6);
  CHECK(m3.observation_space() == 8);
  CHECK(complexity_M(m3) == 5);
}

TEST_CASE("hmm monomials are one transition and one emission per position") {
  auto m = build_homogeneous_hmm(2, 2, 2);
  // h = (1,1), tau = (0,1): parameters t1_1, s1_0, s1_1
  auto mono = monomial_of(m, {1, 1}, {0, 1});
  REQUIRE(mono.has_value());
  CHECK(*mono == IntVec{0, 0, 0, 1, 0, 0, 1, 1});
  CHECK_THROWS_AS(monomial_of(m, {1}, {0, 1}), BadInput);
  CHECK_THROWS_AS(monomial_of(m, {1, 1}, {0, 2}), BadInput);
}

TEST_CASE("lowerbound model shape") {
  auto m = build_lowerbound_hmm(2, 7);
  CHECK(m.name == "lb2n7");
  CHECK(m.d == 2);
  CHECK(m.l() == 12);  // 4d + 4
  CHECK(m.observed_alphabet == std::vector<std::string>{"S", "C"});
  CHECK(m.hidden_count == 7);
  CHECK(complexity_M(m) == 6);  // n - 1
  m.validate();
  CHECK_THROWS_AS(build_lowerbound_hmm(2, 3), BadInput);  // n >= d + 2
}

TEST_CASE("block observations have exactly two explanations") {
  // small enough to sweep every hidden assignment with no candidate pruning
  auto m5 = build_lowerbound_hmm(2, 5);
  const auto tau5 = block_observation(2, 5, {2, 2});
  CHECK(m5.observation_string(tau5) == "SCSCS");
  std::vector<IntVec> raw;
  std::vector<int32_t> h(5, 0);
  while (true) {
    if (auto mono = monomial_of(m5, h, tau5)) raw.push_back(*mono);
    int pos = 4;
    while (pos >= 0 && h[pos] == m5.l() - 1) h[pos--] = 0;
    if (pos < 0) break;
    ++h[pos];
  }
  std::sort(raw.begin(), raw.end());
  CHECK(raw == std::vector<IntVec>{{0, 0}, {2, 2}});
  CHECK(explanations_brute(m5, tau5) == raw);

  auto m7 = build_lowerbound_hmm(2, 7);
  const auto tau7 = block_observation(2, 7, {2, 3});
  CHECK(m7.observation_string(tau7) == "SCSCCSC");
  CHECK(explanations_brute(m7, tau7) == std::vector<IntVec>{{0, 0}, {2, 3}});
}

TEST_CASE("block vectors at d=2 n=7") {
  auto vs = block_vectors(2, 7);
  std::set<std::vector<long long>> got(vs.begin(), vs.end());
  std::set<std::vector<long long>> expect = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}};
  CHECK(got == expect);
  CHECK(block_vectors(2, 5) == std::vector<std::vector<long long>>{{2, 2}});
  CHECK_THROWS_AS(block_observation(2, 7, {1, 4}), BadInput);  // entries >= 2
  CHECK_THROWS_AS(block_observation(2, 7, {3, 4}), BadInput);  // sum < n
  CHECK_THROWS_AS(block_observation(2, 7, {2, 2, 2}), BadInput);
}

TEST_CASE("alignment model shape") {
  auto m = build_alignment_model(3, 4);
  CHECK(m.kind == FactorModel::Kind::PairAlignment);
  CHECK(m.name == "align3x4");
  CHECK(m.d == 3);
  CHECK(m.observed_count == 7);
  CHECK(m.l() == 8);
  CHECK(m.factors.empty());
  CHECK(complexity_M(m) == 7);
  m.validate();

  // column codes are ordered dash-first
  CHECK(m.hidden_alphabet ==
        std::vector<std::string>{"-0", "-1", "0-", "00", "01", "1-", "10", "11"});
}

TEST_CASE("pair observations accept an optional separator") {
  auto m = build_alignment_model(2, 2);
  auto a = m.parse_observation("0110");
  auto b = m.parse_observation("01|10");
  CHECK(a == b);
  CHECK(m.observation_string(a) == "01|10");
  CHECK_THROWS_AS(m.parse_observation("012"), BadInput);
  CHECK_THROWS_AS(m.parse_observation("011"), BadInput);
}

TEST_CASE("pair monomials count mismatches, spaces, matches") {
  auto m = build_alignment_model(2, 2);
  const auto tau = m.parse_observation("0110");
  // columns (-,1)(0,0)(1,-) read "01" along the top and "10" along the bottom
  auto mono = monomial_of(m, {1, 3, 5}, tau);
  REQUIRE(mono.has_value());
  CHECK(*mono == IntVec{0, 2, 1});
  // two diagonal columns, both mismatched
  mono = monomial_of(m, {4, 6}, tau);
  REQUIRE(mono.has_value());
  CHECK(*mono == IntVec{2, 0, 0});
  // wrong spelling or incomplete consumption explains nothing
  CHECK_FALSE(monomial_of(m, {1, 3, 4}, tau).has_value());
  CHECK_FALSE(monomial_of(m, {1, 3}, tau).has_value());
  CHECK_FALSE(monomial_of(m, {1, 3, 5, 0}, tau).has_value());
}

TEST_CASE("json round trip is the identity on all three builders") {
  for (const auto& m :
       {build_homogeneous_hmm(3, 2, 2), build_lowerbound_hmm(2, 5),
        build_alignment_model(2, 3), build_lowerbound_hmm(9, 12)}) {
    const auto text = model_to_json(m);
    const auto back = model_from_json(text);
    CHECK(model_to_json(back) == text);
    CHECK(back.name == m.name);
    CHECK(back.d == m.d);
    CHECK(back.factors.size() == m.factors.size());
    CHECK(back.kind == m.kind);
  }
}

TEST_CASE("multi digit state symbols survive the key concatenation") {
  // lb9 has states s1 .. s10, so "s1" is a proper prefix of "s10"
  auto m = build_lowerbound_hmm(9, 12);
  auto back = model_from_json(model_to_json(m));
  REQUIRE(back.factors.size() == m.factors.size());
  for (size_t i = 0; i < m.factors.size(); ++i) {
    CHECK(back.factors[i].table == m.factors[i].table);
  }
}

TEST_CASE("ambiguous table keys are rejected") {
  const char* text = R"({
    "name": "amb", "kind": "factors", "d": 1, "params": ["t"],
    "hidden": {"alphabet": ["x", "xx"], "count": 2},
    "observed": {"alphabet": ["o"], "count": 1},
    "factors": [{"scope_hidden": [0, 1], "scope_observed": [],
                 "table": {"xxx": [1]}}]
  })";
  CHECK_THROWS_WITH_AS(model_from_json(text), "ambiguous table key: xxx", BadInput);
}

TEST_CASE("unparseable and malformed inputs are rejected") {
  CHECK_THROWS_AS(model_from_json("{"), BadInput);
  CHECK_THROWS_AS(model_from_json(R"({"kind": "mystery"})"), BadInput);
  const char* bad_symbol = R"({
    "name": "b", "kind": "factors", "d": 1, "params": ["t"],
    "hidden": {"alphabet": ["a"], "count": 1},
    "observed": {"alphabet": ["o"], "count": 1},
    "factors": [{"scope_hidden": [0], "scope_observed": [],
                 "table": {"q": [1]}}]
  })";
  CHECK_THROWS_WITH_AS(model_from_json(bad_symbol), "table key does not parse: q", BadInput);
}

TEST_CASE("validate rejects structural nonsense") {
  auto m = build_homogeneous_hmm(2, 2, 2);
  m.d = 0;
  CHECK_THROWS_AS(m.validate(), BadInput);
  m = build_homogeneous_hmm(2, 2, 2);
  m.factors[0].scope_observed = {9};
  CHECK_THROWS_AS(m.validate(), BadInput);
  m = build_homogeneous_hmm(2, 2, 2);
  m.factors[0].table[{0, 0}] = IntVec{0, 0, 0, 0, 0, 0, 0, -1};
  CHECK_THROWS_AS(m.validate(), BadInput);
  m = build_alignment_model(2, 2);
  m.observed_count = 3;
  CHECK_THROWS_AS(m.validate(), BadInput);
}

TEST_CASE("chain view recognizes the chain builders only") {
  CHECK(chain_view(build_homogeneous_hmm(4, 2, 2)).has_value());
  CHECK(chain_view(build_lowerbound_hmm(2, 6)).has_value());
  CHECK_FALSE(chain_view(build_alignment_model(2, 2)).has_value());

  // a factor touching non-consecutive hidden variables is not a chain
  auto m = build_homogeneous_hmm(3, 2, 2);
  for (auto& f : m.factors)
    if (f.scope_hidden.size() == 2) {
      f.scope_hidden = {0, 2};
      break;
    }
  CHECK_FALSE(chain_view(m).has_value());
}

TEST_CASE("observation space saturates instead of overflowing") {
  auto m = build_homogeneous_hmm(80, 2, 2);
  CHECK(m.observation_space() >= (uint64_t(1) << 62));
}
