#pragma once

#include "model.hpp"
#include "polytope.hpp"

namespace inferfan {

// Observation that no positive-probability hidden assignment produces.
struct Unexplainable : BadInput {
  explicit Unexplainable(const std::string& msg) : BadInput(msg) {}
};

struct Explanation {
  std::vector<int32_t> h;
  IntVec exponent;
  Rat score;
};

// Best explanation of tau at log-parameters v: maximizes v . exponent, ties
// resolved to the lexicographically least hidden data under the declared
// alphabet order. Chain models run a suffix DP plus greedy forward pass, the
// pair model the analogous DP on the edit grid, anything else an exhaustive
// scan (guarded).
Explanation viterbi(const FactorModel& m, const std::vector<int32_t>& tau, const RatVec& v);

// Newton polytope of the observation polynomial f_tau, with one witness
// explanation per vertex (the lex-least hidden data attaining that exponent).
NewtonPolytope observation_polytope(const FactorModel& m, const std::vector<int32_t>& tau);

// Whole inference function at v: one entry per observation in odometer order
// (last position varies fastest). Unexplainable observations are marked with
// an empty entry; table equality includes the markers.
struct InferenceFunction {
  std::vector<std::vector<int32_t>> table;
};
InferenceFunction inference_function(const FactorModel& m, const RatVec& v, uint64_t cap);

// index -> observation, in the same odometer order.
std::vector<int32_t> nth_observation(const FactorModel& m, uint64_t index);

}  // namespace inferfan
