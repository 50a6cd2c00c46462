#pragma once

#include <string>
#include <utility>

#include "counting.hpp"

namespace inferfan {

// Exponent polytope of one sequence pair over {0,1}. Coordinates of the full
// polytope are (mismatches, spaces, matches); together with the pair lengths
// they satisfy 2x + y + 2z = n1 + n2, so the polytope is planar and is also
// exposed as a 2-D polygon. Equal-length pairs keep (spaces/2, matches);
// the spaces coordinate is even there. Unequal lengths keep
// (mismatches, spaces).
struct AlignmentPolygon {
  std::string s1, s2;
  NewtonPolytope full;  // 3-D, with witness column sequences
  VertexPolytope poly;  // lossless 2-D view
  bool halved = false;  // true when the 2-D view is (spaces/2, matches)
};
AlignmentPolygon alignment_polygon(const std::string& s1, const std::string& s2);

// Pair of binary sequences of length n whose alignment polygon carries an
// edge of slope u/v, padded with zeros to length n. The core is
// s1 = 0^a 1^b 0^b 1^a against s2 = 1^a 0^b 1^b 0^a with a = 2v, b = v - u,
// which needs 2a + 2b <= n; when that fails and v - u is even, the shorter
// a = v, b = (v - u) / 2 variant is used. family_verts lists the predicted
// polygon vertices in the equal-length 2-D view.
struct SlopeFamily {
  long long u = 0, v = 0, n = 0, a = 0, b = 0;
  bool short_route = false;
  std::string s1, s2;
  std::vector<IntVec> family_verts;
};
SlopeFamily slope_family(long long u, long long v, long long n);

// Coprime (u, v) with 1 <= u < v and 6v - 2u <= n: the slopes realized by
// the default construction at length n.
std::vector<std::pair<long long, long long>> slope_families(long long n);

// Census over all pairs of binary sequences of length n: distinct alignment
// polygons and the vertex count of their Minkowski sum, i.e. the number of
// inference functions of the two-parameter alignment model at length n.
// Pairs related by swapping the sequences, complementing both, or reversing
// both share a polygon and are enumerated once.
struct AlignCountReport {
  long long n = 0;
  uint64_t pairs = 0;
  uint64_t classes = 0;
  uint64_t distinct = 0;
  Int count = 0;
  Int fif = 0;  // 2 (2n+1)^2
  uint64_t families = 0;
  std::string record() const;
};
AlignCountReport count_alignment_report(long long n);

// Number of inference functions whose parameter chamber meets the scoring
// directions induced by mismatch penalty alpha >= 0 and space penalty
// beta >= 0 (score = matches - alpha mismatches - beta spaces). With
// alpha_le_beta, only directions with alpha <= beta count.
long long meaningful_cone_count(long long n, bool alpha_le_beta);

struct Alignment {
  std::string row1, row2;
  IntVec exponent;  // (mismatches, spaces, matches)
  Rat score;
};
// Best-scoring alignment of s1 and s2, ties resolved to the
// lexicographically least column sequence (insertion < deletion < diagonal
// at each step).
Alignment optimal_alignment(const std::string& s1, const std::string& s2,
                            const Rat& alpha, const Rat& beta);

// Standalone SVG 1.1 drawing of a 2-D polygon, integer coordinates only.
std::string polygon_svg(const VertexPolytope& poly);

}  // namespace inferfan
