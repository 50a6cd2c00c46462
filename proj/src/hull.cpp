#include "geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lp.hpp"

namespace inferfan {

namespace {

constexpr Coord kCoordCap = (Coord)1 << 60;

Coord to_coord(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("lattice entry out of range");
  long v = z.get_si();
  if (v >= kCoordCap || v <= -kCoordCap) throw std::overflow_error("lattice entry out of range");
  return v;
}

// Monotone chain in 2-D. Input must be deduped and sorted; output is the
// counterclockwise boundary starting at the lex-min point.
std::vector<IntVec> chain2d(const std::vector<IntVec>& pts) {
  auto cross = [](const IntVec& o, const IntVec& a, const IntVec& b) -> __int128 {
    return (__int128)(a[0] - o[0]) * (b[1] - o[1]) -
           (__int128)(a[1] - o[1]) * (b[0] - o[0]);
  };
  size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<IntVec> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// LP-driven vertex confirmation for rank >= 3: grow a confirmed vertex set V;
// a point outside conv(V) yields a separating direction whose exact argmax
// (lex-min tie break) is a new vertex of the hull.
std::vector<int> clarkson_vertices(const std::vector<IntVec>& pts, size_t r) {
  size_t n = pts.size();
  std::vector<char> inV(n, 0);
  std::vector<int> V;
  auto addV = [&](int i) {
    inV[i] = 1;
    V.push_back(i);
  };
  addV(0);
  addV((int)(n - 1));  // lex-min and lex-max of a sorted list are vertices

  for (size_t i = 0; i < n; ++i) {
    while (!inV[i]) {
      std::vector<IntVec> G;
      IntVec h;
      G.reserve(V.size());
      for (int v : V) {
        G.push_back(sub(pts[i], pts[v]));
        h.push_back(1);
      }
      LpDecision d = lp_feasible(G, h, r);
      if (!d.feasible) break;  // inside conv(V): not a vertex
      Rat best;
      int arg = -1;
      for (size_t j = 0; j < n; ++j) {
        Rat s = dotq(d.witness, pts[j]);
        if (arg < 0 || s > best || (s == best && pts[j] < pts[arg])) {
          best = s;
          arg = (int)j;
        }
      }
      addV(arg);
    }
  }
  std::sort(V.begin(), V.end());
  return V;
}

}  // namespace

Lattice lattice_from(size_t d, const std::vector<IntVec>& gens) {
  std::vector<std::vector<Int>> cols;
  for (const auto& g : gens) {
    if (!is_zero(g)) {
      std::vector<Int> c(d);
      for (size_t i = 0; i < d; ++i) c[i] = (long)g[i];
      cols.push_back(std::move(c));
    }
  }
  Lattice L;
  L.d = d;
  for (size_t row = 0; row < d && !cols.empty(); ++row) {
    // Euclidean column reduction until at most one column is nonzero at row.
    for (;;) {
      size_t m = cols.size();
      size_t piv = m;
      for (size_t c = 0; c < m; ++c) {
        if (sgn(cols[c][row]) == 0) continue;
        if (piv == m ||
            mpz_cmpabs(cols[c][row].get_mpz_t(), cols[piv][row].get_mpz_t()) < 0)
          piv = c;
      }
      if (piv == m) break;  // all zero at this row
      bool others = false;
      for (size_t c = 0; c < m; ++c) {
        if (c == piv || sgn(cols[c][row]) == 0) continue;
        others = true;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), cols[c][row].get_mpz_t(), cols[piv][row].get_mpz_t());
        for (size_t i = row; i < d; ++i) cols[c][i] -= q * cols[piv][i];
      }
      if (!others) {
        IntVec b(d, 0);
        for (size_t i = row; i < d; ++i) b[i] = to_coord(cols[piv][i]);
        L.basis.push_back(std::move(b));
        L.pivot_rows.push_back(row);
        cols.erase(cols.begin() + piv);
        break;
      }
    }
  }
  return L;
}

IntVec Lattice::reduce(const IntVec& v) const {
  std::vector<Int> rem(d);
  for (size_t i = 0; i < d; ++i) rem[i] = (long)v[i];
  IntVec x(basis.size());
  for (size_t k = 0; k < basis.size(); ++k) {
    size_t r = pivot_rows[k];
    Int q, m;
    mpz_tdiv_qr(q.get_mpz_t(), m.get_mpz_t(), rem[r].get_mpz_t(),
                Int((long)basis[k][r]).get_mpz_t());
    if (sgn(m) != 0) throw BadInput("point not in lattice");
    x[k] = to_coord(q);
    for (size_t i = r; i < d; ++i) rem[i] -= q * (long)basis[k][i];
  }
  for (size_t i = 0; i < d; ++i)
    if (sgn(rem[i]) != 0) throw BadInput("point not in lattice");
  return x;
}

IntVec Lattice::lift(const IntVec& x) const {
  IntVec v(d, 0);
  for (size_t k = 0; k < basis.size(); ++k) {
    if (x[k] == 0) continue;
    for (size_t i = pivot_rows[k]; i < d; ++i) {
      __int128 acc = (__int128)v[i] + (__int128)x[k] * basis[k][i];
      if (acc >= kCoordCap || acc <= -kCoordCap) throw std::overflow_error("lift overflow");
      v[i] = (Coord)acc;
    }
  }
  return v;
}

VertexPolytope hull_reduce(int dim, std::vector<IntVec> points) {
  for (const auto& p : points)
    if ((int)p.size() != dim) throw BadInput("point dimension mismatch");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  VertexPolytope P;
  P.dim = dim;
  if (points.size() <= 1) {
    P.verts = std::move(points);
    return P;
  }

  const IntVec& origin = points[0];
  std::vector<IntVec> diffs;
  diffs.reserve(points.size());
  for (const auto& p : points) diffs.push_back(sub(p, origin));
  Lattice lat = lattice_from(dim, diffs);
  size_t r = lat.rank();
  std::vector<IntVec> red(points.size());
  for (size_t i = 0; i < points.size(); ++i) red[i] = lat.reduce(diffs[i]);

  std::vector<int> keep;
  if (r == 1) {
    size_t lo = 0, hi = 0;
    for (size_t i = 1; i < red.size(); ++i) {
      if (red[i][0] < red[lo][0]) lo = i;
      if (red[i][0] > red[hi][0]) hi = i;
    }
    keep = {(int)lo, (int)hi};
  } else if (r == 2) {
    std::vector<IntVec> rs = red;
    std::sort(rs.begin(), rs.end());
    auto hull = chain2d(rs);
    std::sort(hull.begin(), hull.end());
    for (size_t i = 0; i < red.size(); ++i)
      if (std::binary_search(hull.begin(), hull.end(), red[i])) keep.push_back((int)i);
  } else {
    keep = clarkson_vertices(red, r);
  }

  std::sort(keep.begin(), keep.end());
  for (int i : keep) P.verts.push_back(points[i]);
  return P;
}

bool is_vertex(const std::vector<IntVec>& points, const IntVec& p) {
  std::vector<IntVec> G;
  IntVec h;
  for (const auto& q : points) {
    if (q == p) continue;
    G.push_back(sub(p, q));
    h.push_back(1);
  }
  return lp_feasible(G, h, p.size()).feasible;
}

std::vector<IntVec> argmax_face(const VertexPolytope& P, const IntVec& w) {
  if (std::all_of(w.begin(), w.end(), [](Coord c) { return c == 0; }))
    throw BadInput("zero direction");
  std::vector<IntVec> out;
  __int128 best = 0;
  for (const auto& v : P.verts) {
    __int128 s = dot128(w, v);
    if (out.empty() || s > best) {
      best = s;
      out.clear();
    }
    if (s == best) out.push_back(v);
  }
  return out;
}

std::vector<IntVec> argmax_face(const VertexPolytope& P, const RatVec& w) {
  if (std::all_of(w.begin(), w.end(), [](const Rat& c) { return sgn(c) == 0; }))
    throw BadInput("zero direction");
  std::vector<IntVec> out;
  Rat best;
  for (const auto& v : P.verts) {
    Rat s = dotq(w, v);
    if (out.empty() || s > best) {
      best = s;
      out.clear();
    }
    if (s == best) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<ConeFacet>> vertex_cone_facets(const VertexPolytope& P) {
  size_t k = P.verts.size();
  std::vector<std::vector<ConeFacet>> out(k);
  if (k <= 1) return out;
  for (size_t i = 0; i < k; ++i) {
    // Per parallel class keep the nearest candidate: only it can be the edge
    // neighbor, farther ones are implied.
    std::map<IntVec, std::pair<Coord, int32_t>> cand;
    for (size_t u = 0; u < k; ++u) {
      if (u == i) continue;
      IntVec dif = sub(P.verts[i], P.verts[u]);
      Coord len = content(dif);
      IntVec prim = primitive(dif);
      auto it = cand.find(prim);
      if (it == cand.end() || len < it->second.first)
        cand[prim] = {len, (int32_t)u};
    }
    std::vector<IntVec> rows;
    std::vector<int32_t> nbr;
    for (auto& [dir, v] : cand) {
      rows.push_back(dir);
      nbr.push_back(v.second);
    }
    for (size_t a = 0; a < rows.size(); ++a) {
      if (rows.size() == 1) {
        out[i].push_back({rows[a], nbr[a]});
        break;
      }
      std::vector<IntVec> G;
      IntVec h;
      G.push_back(neg(rows[a]));
      h.push_back(1);
      for (size_t b = 0; b < rows.size(); ++b) {
        if (b == a) continue;
        G.push_back(rows[b]);
        h.push_back(0);
      }
      if (lp_feasible(G, h, P.dim).feasible) out[i].push_back({rows[a], nbr[a]});
    }
  }
  return out;
}

std::vector<IntVec> edge_directions(const VertexPolytope& P) {
  auto cones = vertex_cone_facets(P);
  std::vector<IntVec> dirs;
  for (const auto& facets : cones)
    for (const auto& f : facets) dirs.push_back(lex_positive(f.dir));
  std::sort(dirs.begin(), dirs.end());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

std::vector<IntVec> ccw_order(std::vector<IntVec> verts) {
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return chain2d(verts);
}

std::string polytope_text(const VertexPolytope& P) {
  std::ostringstream os;
  os << P.dim << ' ' << P.verts.size() << '\n';
  for (const auto& v : P.verts) {
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    os << '\n';
  }
  return os.str();
}

VertexPolytope polytope_parse(const std::string& text) {
  std::istringstream is(text);
  long long d = -1, k = -1;
  if (!(is >> d >> k) || d < 0 || k < 0) throw BadInput("bad polytope header");
  VertexPolytope P;
  P.dim = (int)d;
  for (long long i = 0; i < k; ++i) {
    IntVec v(d);
    for (long long j = 0; j < d; ++j)
      if (!(is >> v[j])) throw BadInput("truncated polytope body");
    if (!P.verts.empty() && !(P.verts.back() < v))
      throw BadInput("polytope vertices not lex-sorted");
    P.verts.push_back(std::move(v));
  }
  std::string tail;
  if (is >> tail) throw BadInput("trailing data after polytope body");
  return P;
}

}  // namespace inferfan
