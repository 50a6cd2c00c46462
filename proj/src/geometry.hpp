#pragma once

#include "rational.hpp"

namespace inferfan {

// Finite lattice polytope given by its full vertex set. Canonical form:
// vertices lex-sorted and irredundant (every point is a vertex).
struct VertexPolytope {
  int dim = 0;
  std::vector<IntVec> verts;
  bool operator==(const VertexPolytope&) const = default;
};

// Basis of the integer span of a generator set, in column echelon form
// (column k is zero above its pivot row), so lattice membership is decided by
// forward substitution with exact divisions.
struct Lattice {
  size_t d = 0;
  std::vector<IntVec> basis;
  std::vector<size_t> pivot_rows;
  size_t rank() const { return basis.size(); }
  IntVec reduce(const IntVec& v) const;  // x with basis * x = v, throws if absent
  IntVec lift(const IntVec& x) const;
};

Lattice lattice_from(size_t d, const std::vector<IntVec>& gens);

// Deduplicates, drops non-vertices, returns canonical form. Dispatch: affine
// reduction to the difference lattice, then direct answers in rank <= 1,
// monotone chain in rank 2, LP-driven vertex confirmation above.
VertexPolytope hull_reduce(int dim, std::vector<IntVec> points);

// Is p a vertex of conv(points u {p})? Decided by a strict separation LP in
// the ambient space.
bool is_vertex(const std::vector<IntVec>& points, const IntVec& p);

// Vertices of P attaining max w.x, lex-sorted.
std::vector<IntVec> argmax_face(const VertexPolytope& P, const IntVec& w);
std::vector<IntVec> argmax_face(const VertexPolytope& P, const RatVec& w);

// Primitive edge directions of P, one representative per parallel class
// (first nonzero coordinate positive), lex-sorted.
std::vector<IntVec> edge_directions(const VertexPolytope& P);

// Facet rows of the vertex normal cones. For vertex index i of P, entry i
// lists pairs (primitive direction of v_i - u, index of u) where u runs over
// the edge-adjacent vertices of v_i; the normal cone is exactly
// { w : dir . w >= 0 for each listed dir }.
struct ConeFacet {
  IntVec dir;
  int32_t neighbor;
};
std::vector<std::vector<ConeFacet>> vertex_cone_facets(const VertexPolytope& P);

// Boundary order (counterclockwise, starting at the lex-min vertex) for a
// 2-dimensional polytope given by its vertex set.
std::vector<IntVec> ccw_order(std::vector<IntVec> verts);

// Text format: first line "d k", then k lines of d space-separated integers,
// vertices lex-sorted.
std::string polytope_text(const VertexPolytope& P);
VertexPolytope polytope_parse(const std::string& text);

}  // namespace inferfan
