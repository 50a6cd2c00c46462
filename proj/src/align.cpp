#include "align.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace inferfan {

namespace {

std::vector<int32_t> pair_observation(const FactorModel& m, const std::string& s1,
                                      const std::string& s2) {
  return m.parse_observation(s1 + s2);
}

}  // namespace

AlignmentPolygon alignment_polygon(const std::string& s1, const std::string& s2) {
  const auto m = build_alignment_model(static_cast<long long>(s1.size()),
                                       static_cast<long long>(s2.size()));
  AlignmentPolygon out;
  out.s1 = s1;
  out.s2 = s2;
  out.full = observation_polytope(m, pair_observation(m, s1, s2));
  out.halved = s1.size() == s2.size();
  out.poly.dim = 2;
  for (const auto& v : out.full.poly.verts) {
    if (out.halved)
      out.poly.verts.push_back(IntVec{v[1] / 2, v[2]});
    else
      out.poly.verts.push_back(IntVec{v[0], v[1]});
  }
  std::sort(out.poly.verts.begin(), out.poly.verts.end());
  return out;
}

SlopeFamily slope_family(long long u, long long v, long long n) {
  if (u < 1 || v <= u) throw BadInput("need 1 <= u < v");
  if (gcdll(u, v) != 1) throw BadInput("u and v must be coprime");
  SlopeFamily f;
  f.u = u;
  f.v = v;
  f.n = n;
  if (6 * v - 2 * u <= n) {
    f.a = 2 * v;
    f.b = v - u;
  } else if ((v - u) % 2 == 0 && 3 * v - u <= n) {
    f.a = v;
    f.b = (v - u) / 2;
    f.short_route = true;
  } else {
    throw BadInput("slope u/v is not realizable at length " + std::to_string(n));
  }
  const long long a = f.a, b = f.b, p = n - 2 * a - 2 * b;
  f.s1 = std::string(a, '0') + std::string(b, '1') + std::string(b, '0') +
         std::string(a, '1') + std::string(p, '0');
  f.s2 = std::string(a, '1') + std::string(b, '0') + std::string(b, '1') +
         std::string(a, '0') + std::string(p, '0');
  f.family_verts = {IntVec{0, p}, IntVec{b, p + 3 * b}, IntVec{a + b, n - a - b},
                    IntVec{n, 0}, IntVec{p, 0}};
  std::sort(f.family_verts.begin(), f.family_verts.end());
  f.family_verts.erase(std::unique(f.family_verts.begin(), f.family_verts.end()),
                       f.family_verts.end());
  return f;
}

std::vector<std::pair<long long, long long>> slope_families(long long n) {
  std::vector<std::pair<long long, long long>> out;
  for (long long v = 2; 4 * v + 2 <= n; ++v)
    for (long long u = 1; u < v; ++u)
      if (6 * v - 2 * u <= n && gcdll(u, v) == 1) out.emplace_back(u, v);
  return out;
}

namespace {

using Pt = std::pair<int, int>;

// Convex hull vertices of a small point set, output sorted; collinear
// interior points are dropped.
void hull2(std::vector<Pt>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return;
  auto cr = [](const Pt& o, const Pt& a, const Pt& b) {
    return static_cast<long long>(a.first - o.first) * (b.second - o.second) -
           static_cast<long long>(a.second - o.second) * (b.first - o.first);
  };
  std::vector<Pt> h(2 * pts.size());
  size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cr(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  const size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && cr(h[k - 2], h[k - 1], *it) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  std::sort(h.begin(), h.end());
  pts = std::move(h);
}

uint32_t rev_bits(uint32_t m, long long n) {
  uint32_t r = 0;
  for (long long i = 0; i < n; ++i)
    if (m & (1u << i)) r |= 1u << (n - 1 - i);
  return r;
}

struct PairCensus {
  uint64_t pairs = 0, classes = 0;
  std::vector<VertexPolytope> distinct;
};

// Polygons over all length-n binary pairs, one representative per symmetry
// class. Cells carry the hull of reachable (spaces, matches) prefixes; the
// mismatch count is recoverable from the cell position, so nothing is lost.
PairCensus pair_census(long long n) {
  if (n < 1) throw BadInput("need n >= 1");
  if (n > 10) throw CapExceeded("alignment census supports n <= 10");
  PairCensus out;
  const uint32_t lim = 1u << n;
  const uint32_t mask = lim - 1;
  std::vector<std::vector<std::vector<Pt>>> dp(
      n + 1, std::vector<std::vector<Pt>>(n + 1));
  std::vector<Pt> scratch;
  std::set<std::vector<Pt>> seen;

  for (uint32_t m1 = 0; m1 < lim; ++m1) {
    for (uint32_t m2 = 0; m2 < lim; ++m2) {
      ++out.pairs;
      const uint32_t key = (m1 << n) | m2;
      uint32_t canon = key;
      for (int sw = 0; sw < 2; ++sw)
        for (int cp = 0; cp < 2; ++cp)
          for (int rv = 0; rv < 2; ++rv) {
            uint32_t a = sw ? m2 : m1;
            uint32_t b = sw ? m1 : m2;
            if (cp) {
              a = ~a & mask;
              b = ~b & mask;
            }
            if (rv) {
              a = rev_bits(a, n);
              b = rev_bits(b, n);
            }
            canon = std::min(canon, (a << n) | b);
          }
      if (canon != key) continue;
      ++out.classes;

      for (long long i = 0; i <= n; ++i)
        for (long long j = 0; j <= n; ++j) {
          scratch.clear();
          if (i == 0 && j == 0) {
            scratch.emplace_back(0, 0);
          } else {
            if (i > 0)
              for (const auto& p : dp[i - 1][j])
                scratch.emplace_back(p.first + 1, p.second);
            if (j > 0)
              for (const auto& p : dp[i][j - 1])
                scratch.emplace_back(p.first + 1, p.second);
            if (i > 0 && j > 0) {
              const int match = ((m1 >> (i - 1)) & 1) == ((m2 >> (j - 1)) & 1);
              for (const auto& p : dp[i - 1][j - 1])
                scratch.emplace_back(p.first, p.second + match);
            }
          }
          hull2(scratch);
          dp[i][j] = scratch;
        }

      std::vector<Pt> fin = dp[n][n];
      for (auto& p : fin) p.first /= 2;
      if (seen.insert(fin).second) {
        VertexPolytope P;
        P.dim = 2;
        for (const auto& p : fin) P.verts.push_back(IntVec{p.first, p.second});
        out.distinct.push_back(std::move(P));
      }
    }
  }
  return out;
}

}  // namespace

std::string AlignCountReport::record() const {
  std::ostringstream os;
  os << "n=" << n << " pairs=" << pairs << " classes=" << classes
     << " distinct=" << distinct << " count=" << int_str(count)
     << " fif=" << int_str(fif) << " families=" << families;
  return os.str();
}

AlignCountReport count_alignment_report(long long n) {
  const auto census = pair_census(n);
  AlignCountReport r;
  r.n = n;
  r.pairs = census.pairs;
  r.classes = census.classes;
  r.distinct = census.distinct.size();
  r.count = Int(static_cast<unsigned long>(polygon_sum_vertex_count(census.distinct)));
  r.fif = *bounds(std::nullopt, n, 2).fif;
  r.families = slope_families(n).size();
  if (r.count > r.fif) throw std::logic_error("alignment count exceeds the bound");
  return r;
}

long long meaningful_cone_count(long long n, bool alpha_le_beta) {
  const auto census = pair_census(n);
  const auto sum = polygon_sum(census.distinct);
  const auto ring = ccw_order(sum.verts);
  if (ring.size() < 3) throw std::logic_error("summed polygon is degenerate");

  // A scoring pair (alpha, beta) selects vertices maximizing the direction
  // w = (alpha - 2 beta, 1 + alpha) in the halved 2-D view. Over alpha,
  // beta >= 0 these are exactly the directions with w2 > 0, w1 < w2; with
  // alpha <= beta the interior shrinks to w1 < 0 < w2.
  const auto in_w = [&](long long w1, long long w2) {
    return alpha_le_beta ? (w2 > 0 && w1 < 0) : (w2 > 0 && w1 < w2);
  };
  const long long rep1 = alpha_le_beta ? -1 : 0;
  const long long rep2 = 1;
  const auto cross = [](long long a1, long long a2, long long b1, long long b2) {
    return a1 * b2 - a2 * b1;
  };

  const size_t k = ring.size();
  std::vector<std::array<long long, 2>> normal(k);
  for (size_t i = 0; i < k; ++i) {
    const IntVec e = sub(ring[(i + 1) % k], ring[i]);
    normal[i] = {e[1], -e[0]};
  }
  long long hits = 0;
  for (size_t i = 0; i < k; ++i) {
    const auto& a = normal[(i + k - 1) % k];  // cone of vertex ring[i]
    const auto& b = normal[i];
    const bool meets = in_w(a[0], a[1]) || in_w(b[0], b[1]) ||
                       (cross(a[0], a[1], rep1, rep2) > 0 &&
                        cross(rep1, rep2, b[0], b[1]) > 0);
    if (meets) ++hits;
  }
  return hits;
}

Alignment optimal_alignment(const std::string& s1, const std::string& s2,
                            const Rat& alpha, const Rat& beta) {
  const auto m = build_alignment_model(static_cast<long long>(s1.size()),
                                       static_cast<long long>(s2.size()));
  const RatVec v = {-alpha, -beta, Rat(1)};
  const auto ex = viterbi(m, pair_observation(m, s1, s2), v);
  Alignment out;
  out.exponent = ex.exponent;
  out.score = ex.score;
  size_t i = 0, j = 0;
  for (int32_t code : ex.h) {
    const int32_t r1 = (code + 1) / 3;
    const int32_t r2 = (code + 1) % 3;
    out.row1 += r1 == 0 ? '-' : s1[i++];
    out.row2 += r2 == 0 ? '-' : s2[j++];
  }
  if (i != s1.size() || j != s2.size())
    throw std::logic_error("alignment does not spell the input pair");
  return out;
}

std::string polygon_svg(const VertexPolytope& poly) {
  if (poly.dim != 2 || poly.verts.empty()) throw BadInput("svg needs a 2-D polygon");
  const auto ring = ccw_order(poly.verts);
  long long maxx = 0, maxy = 0;
  for (const auto& p : ring) {
    maxx = std::max(maxx, p[0]);
    maxy = std::max(maxy, p[1]);
  }
  const long long scale = 24, margin = 24;
  const long long w = maxx * scale + 2 * margin;
  const long long h = maxy * scale + 2 * margin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  os << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (size_t i = 0; i < ring.size(); ++i) {
    if (i) os << ' ';
    os << margin + ring[i][0] * scale << ',' << h - margin - ring[i][1] * scale;
  }
  os << "\"/>\n";
  for (const auto& p : ring)
    os << "<circle cx=\"" << margin + p[0] * scale << "\" cy=\""
       << h - margin - p[1] * scale << "\" r=\"4\" fill=\"black\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace inferfan
