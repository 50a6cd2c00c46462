#pragma once

#include <cstdint>

#include "inference.hpp"
#include "minkowski.hpp"

namespace inferfan {

// Census of a model's inference functions over all generic parameter vectors.
// count equals the number of vertices of the Minkowski sum of the distinct
// observation polytopes, which is the number of full-dimensional cones in the
// common refinement of their normal fans.
struct CountReport {
  std::string model;
  long long d = 0;
  uint64_t observations = 0;  // size of the observation space
  uint64_t used = 0;          // observations with at least one explanation
  uint64_t distinct = 0;      // distinct observation polytopes among those
  Int count = 0;
  VertexPolytope sum;
  BoundReport bound;
  std::string record() const;
};

// Enumerates the full observation space (must fit in cap), collects each
// observation's polytope, and counts vertices of their Minkowski sum.
// jobs > 1 splits the polytope collection across threads; the result is
// identical for every jobs value.
CountReport count_inference_functions(const FactorModel& m, uint64_t cap = 1u << 20,
                                      int jobs = 1);

struct SampleReport {
  std::string model;
  uint64_t samples = 0;
  uint64_t seed = 0;
  uint64_t distinct = 0;  // distinct inference functions seen
  std::string record() const;
};

// Draws integer parameter directions and records which vertex of each
// observation polytope wins; each map from observations to winners is one
// inference function. Directions that tie anywhere are redrawn within the
// same stream, so results depend only on (seed, samples). A subset of
// observations restricts the census to those observations.
SampleReport sample_inference_functions(
    const FactorModel& m, uint64_t samples, uint64_t seed, uint64_t cap = 1u << 20,
    const std::vector<std::vector<int32_t>>* observations = nullptr);

struct ArrangementReport {
  long long d = 0;
  long long n = 0;
  uint64_t normals = 0;  // primitive positive vectors with coordinate sum < n
  Int chambers = 0;
  std::string record() const;
};

// Chambers of the hyperplane arrangement {a . x = 0} over all primitive
// a >= 1 with a_1 + ... + a_d < n. d = 2 supports n up to 10^4, d = 3 up
// to 8.
ArrangementReport arrangement_chambers(long long d, long long n);

// Maximum number of extreme rays over all chambers of the same arrangement.
// d = 2 always gives 2; d = 3 supports n <= 6.
int extreme_rays_check(long long d, long long n);

struct PrimProbReport {
  long long d = 0;
  long long m = 0;
  long long box = 0;
  uint64_t samples = 0;
  uint64_t seed = 0;
  uint64_t hits = 0;
  Rat p_hat;
  std::string record() const;
};

// Monte Carlo estimate of the probability that a uniformly random m x d
// integer matrix with entries in [0, box] has all maximal minors coprime,
// i.e. extends to a basis-like primitive system. Requires 1 <= m < d.
PrimProbReport primitive_probability(long long d, long long m, long long box,
                                     uint64_t samples, uint64_t seed);

// Rational interval [lo, hi] bracketing prod_{j=d-m+1}^{d} 1/zeta(j), with
// hi - lo <= 10^-6. Requires 1 <= m < d so every j is at least 2.
std::pair<Rat, Rat> zeta_reference(long long d, long long m);

}  // namespace inferfan
