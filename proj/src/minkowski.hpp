#pragma once

#include "geometry.hpp"

namespace inferfan {

// Vertex set of a Minkowski sum. When choices are requested, choice[k][s] is
// the index (into summand s's canonical vertex list) of the unique vertex of
// summand s appearing in the decomposition of sum vertex k; the per-cell
// tuples double as chamber sign vectors for zonotope inputs.
struct MinkSum {
  VertexPolytope sum;
  std::vector<std::vector<int32_t>> choice;
  size_t distinct_classes = 0;
};

// Enumerates the vertices of summands[0] + ... + summands[k-1] exactly, by
// breadth-first search over the maximal cells of the common refinement of the
// summands' normal fans. Summands that are translates of each other share
// their normal fan and are folded into one class. Rank <= 2 inputs take
// direct routes (the 2-D route is skipped when choices are requested).
MinkSum minkowski_sum_many(int dim, const std::vector<VertexPolytope>& summands,
                           bool want_choice);

// Reference route: repeated pairwise vertex sums with hull reduction.
// Independent of the cell BFS; used by tests and fine for small inputs.
VertexPolytope minkowski_naive(int dim, const std::vector<VertexPolytope>& summands);

// 2-D route: merge the counterclockwise edge sequences of the summand
// polygons. Independent of the cell BFS.
VertexPolytope polygon_sum(const std::vector<VertexPolytope>& polys);

// Number of vertices polygon_sum would produce, without materializing.
unsigned long long polygon_sum_vertex_count(const std::vector<VertexPolytope>& polys);

}  // namespace inferfan
