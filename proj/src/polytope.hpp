#pragma once

#include <optional>

#include "geometry.hpp"

namespace inferfan {

// Hidden-assignment label attached to a vertex: a sequence of symbol codes,
// compared lexicographically. Ties between equal exponent vectors are always
// resolved toward the smaller witness.
using Witness = std::vector<int32_t>;

struct NewtonPolytope {
  VertexPolytope poly;
  std::vector<Witness> wit;  // aligned with poly.verts; empty when untracked

  bool tracked() const { return wit.size() == poly.verts.size() && !poly.verts.empty(); }
};

NewtonPolytope np_point(int dim, IntVec pt, Witness w);

// Polynomial addition: conv(P u Q). Coinciding exponents keep the smaller
// witness.
NewtonPolytope np_add(const NewtonPolytope& a, const NewtonPolytope& b);

// Polynomial multiplication: Minkowski sum. Each vertex of the sum decomposes
// uniquely into one vertex per factor, so witnesses concatenate.
NewtonPolytope np_mul(const NewtonPolytope& a, const NewtonPolytope& b);

struct BoundReport {
  std::optional<long long> m;  // number of non-parallel edges across summands
  std::optional<long long> M;  // model complexity
  long long d = 0;
  std::optional<Int> gs;
  std::optional<Int> fif;
  std::optional<Rat> dominant;
  std::string line() const;
};

// gs needs m, fif and the dominant term need M; absent inputs give absent
// outputs, printed as "-".
BoundReport bounds(std::optional<long long> m, std::optional<long long> M, long long d);

}  // namespace inferfan
