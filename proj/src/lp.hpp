#pragma once

#include "rational.hpp"

namespace inferfan {

// Outcome of an exact feasibility question { w in Q^r : G w >= h }.
// Exactly one of witness/farkas is meaningful:
//   feasible:   G * witness >= h componentwise
//   infeasible: farkas >= 0, farkas^T G = 0, farkas^T h > 0
// The farkas vector doubles as a convex-combination certificate for callers
// that encode "is p in conv(V)" questions.
struct LpDecision {
  bool feasible = false;
  RatVec witness;
  RatVec farkas;
};

// Decides feasibility exactly. G rows are integer vectors of length r, h has
// one entry per row. A double-precision simplex runs first on larger systems;
// its final basis is re-solved in rational arithmetic and certified, with a
// from-scratch exact simplex as fallback, so the verdict never depends on
// floating point.
LpDecision lp_feasible(const std::vector<IntVec>& G, const IntVec& h, size_t r);

// Exact check of a decision against the system, for tests and debugging.
bool lp_check(const std::vector<IntVec>& G, const IntVec& h, const LpDecision& d);

}  // namespace inferfan
