#include "minkowski.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "lp.hpp"

namespace inferfan {

namespace {

// One normal-fan class: summands that are translates of each other, keyed by
// their vertex lists relative to the lex-min vertex (reduced coordinates,
// original index order, which translation preserves).
struct FanClass {
  std::vector<IntVec> verts;
  std::vector<std::vector<ConeFacet>> cones;  // facet rows sorted by dir
  long long mult = 0;
};

std::vector<Coord> flatten(const std::vector<IntVec>& vs) {
  std::vector<Coord> f;
  for (const auto& v : vs) f.insert(f.end(), v.begin(), v.end());
  return f;
}

int32_t lex_max_index(const std::vector<IntVec>& vs) {
  int32_t best = 0;
  for (size_t j = 1; j < vs.size(); ++j)
    if (vs[best] < vs[j]) best = (int32_t)j;
  return best;
}

int32_t cone_neighbor(const std::vector<ConeFacet>& facets, const IntVec& dir,
                      int32_t self) {
  auto it = std::lower_bound(
      facets.begin(), facets.end(), dir,
      [](const ConeFacet& f, const IntVec& d) { return f.dir < d; });
  if (it != facets.end() && it->dir == dir) return it->neighbor;
  return self;
}

struct Walk2D {
  IntVec start;                 // lex-min by (y, x) of the sum
  std::map<IntVec, IntVec> edges;  // primitive direction -> total edge vector
};

// Angular order starting just above the positive x-axis, counterclockwise.
bool angle_less(const IntVec& a, const IntVec& b) {
  auto half = [](const IntVec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return (__int128)a[0] * b[1] - (__int128)a[1] * b[0] > 0;
}

Walk2D polygon_walk_data(const std::vector<VertexPolytope>& polys) {
  Walk2D w;
  w.start = IntVec{0, 0};
  for (const auto& p : polys) {
    if (p.dim != 2) throw BadInput("polygon_sum expects 2-D input");
    if (p.verts.empty()) throw BadInput("empty summand");
    size_t lo = 0;
    for (size_t i = 1; i < p.verts.size(); ++i) {
      const IntVec& a = p.verts[i];
      const IntVec& b = p.verts[lo];
      if (a[1] < b[1] || (a[1] == b[1] && a[0] < b[0])) lo = i;
    }
    w.start[0] += p.verts[lo][0];
    w.start[1] += p.verts[lo][1];
    auto ring = ccw_order(p.verts);
    size_t n = ring.size();
    if (n < 2) continue;
    size_t nedges = (n == 2) ? 2 : n;  // a segment contributes both directions
    for (size_t i = 0; i < nedges; ++i) {
      IntVec e = sub(ring[(i + 1) % n], ring[i % n]);
      auto it = w.edges.try_emplace(primitive(e), IntVec{0, 0}).first;
      it->second[0] += e[0];
      it->second[1] += e[1];
    }
  }
  return w;
}

}  // namespace

VertexPolytope polygon_sum(const std::vector<VertexPolytope>& polys) {
  Walk2D w = polygon_walk_data(polys);
  VertexPolytope out;
  out.dim = 2;
  if (w.edges.empty()) {
    out.verts = {w.start};
    return out;
  }
  std::vector<IntVec> dirs;
  for (auto& [d, v] : w.edges) dirs.push_back(d);
  std::sort(dirs.begin(), dirs.end(), angle_less);
  IntVec pos = w.start;
  for (const auto& d : dirs) {
    out.verts.push_back(pos);
    pos = add(pos, w.edges.at(d));
  }
  if (pos != w.start) throw std::logic_error("polygon walk did not close");
  std::sort(out.verts.begin(), out.verts.end());
  out.verts.erase(std::unique(out.verts.begin(), out.verts.end()), out.verts.end());
  return out;
}

unsigned long long polygon_sum_vertex_count(const std::vector<VertexPolytope>& polys) {
  Walk2D w = polygon_walk_data(polys);
  if (w.edges.empty()) return 1;
  if (w.edges.size() == 1) throw std::logic_error("polygon walk did not close");
  return w.edges.size();
}

VertexPolytope minkowski_naive(int dim, const std::vector<VertexPolytope>& summands) {
  if (summands.empty()) throw BadInput("empty summand list");
  VertexPolytope acc = summands[0];
  for (size_t s = 1; s < summands.size(); ++s) {
    std::vector<IntVec> pts;
    pts.reserve(acc.verts.size() * summands[s].verts.size());
    for (const auto& a : acc.verts)
      for (const auto& b : summands[s].verts) pts.push_back(add(a, b));
    acc = hull_reduce(dim, std::move(pts));
  }
  return acc;
}

MinkSum minkowski_sum_many(int dim, const std::vector<VertexPolytope>& summands,
                           bool want_choice) {
  if (summands.empty()) throw BadInput("empty summand list");
  size_t k = summands.size();
  IntVec origin(dim, 0);
  std::vector<IntVec> gens;
  for (const auto& s : summands) {
    if (s.dim != dim) throw BadInput("summand dimension mismatch");
    if (s.verts.empty()) throw BadInput("empty summand");
    if (!std::is_sorted(s.verts.begin(), s.verts.end()))
      throw BadInput("summand not canonical");
    origin = add(origin, s.verts[0]);
    for (size_t j = 1; j < s.verts.size(); ++j)
      gens.push_back(sub(s.verts[j], s.verts[0]));
  }
  Lattice lat = lattice_from(dim, gens);
  size_t r = lat.rank();

  // Fold translates.
  std::map<std::vector<Coord>, int32_t> class_ids;
  std::vector<FanClass> classes;
  std::vector<int32_t> class_of(k);
  for (size_t s = 0; s < k; ++s) {
    std::vector<IntVec> red(summands[s].verts.size());
    for (size_t j = 0; j < red.size(); ++j)
      red[j] = lat.reduce(sub(summands[s].verts[j], summands[s].verts[0]));
    auto key = flatten(red);
    auto it = class_ids.find(key);
    if (it == class_ids.end()) {
      it = class_ids.emplace(std::move(key), (int32_t)classes.size()).first;
      FanClass fc;
      fc.verts = std::move(red);
      classes.push_back(std::move(fc));
    }
    class_of[s] = it->second;
    classes[it->second].mult += 1;
  }
  size_t nc = classes.size();

  MinkSum out;
  out.sum.dim = dim;
  out.distinct_classes = nc;

  auto assemble = [&](std::vector<std::pair<IntVec, std::vector<int32_t>>>& cells) {
    std::sort(cells.begin(), cells.end());
    for (size_t i = 0; i + 1 < cells.size(); ++i)
      if (cells[i].first == cells[i + 1].first)
        throw std::logic_error("cell/vertex bijection violated");
    for (auto& [v, t] : cells) {
      out.sum.verts.push_back(v);
      if (want_choice) {
        std::vector<int32_t> per_summand(k);
        for (size_t s = 0; s < k; ++s) per_summand[s] = t[class_of[s]];
        out.choice.push_back(std::move(per_summand));
      }
    }
  };

  auto cell_vertex = [&](const std::vector<int32_t>& t) {
    IntVec redsum(r, 0);
    for (size_t c = 0; c < nc; ++c) {
      const IntVec& v = classes[c].verts[t[c]];
      for (size_t i = 0; i < r; ++i) redsum[i] += classes[c].mult * v[i];
    }
    return add(origin, lat.lift(redsum));
  };

  if (r == 0) {
    std::vector<std::pair<IntVec, std::vector<int32_t>>> cells;
    cells.emplace_back(origin, std::vector<int32_t>(nc, 0));
    assemble(cells);
    return out;
  }

  if (r == 1) {
    std::vector<int32_t> lo(nc), hi(nc);
    for (size_t c = 0; c < nc; ++c) {
      for (size_t j = 1; j < classes[c].verts.size(); ++j) {
        if (classes[c].verts[j][0] < classes[c].verts[lo[c]][0]) lo[c] = (int32_t)j;
        if (classes[c].verts[j][0] > classes[c].verts[hi[c]][0]) hi[c] = (int32_t)j;
      }
    }
    std::vector<std::pair<IntVec, std::vector<int32_t>>> cells;
    cells.emplace_back(cell_vertex(lo), lo);
    cells.emplace_back(cell_vertex(hi), hi);
    assemble(cells);
    return out;
  }

  if (r == 2 && !want_choice) {
    // Dilation folds multiplicity: the sum of m copies of A is mA.
    std::vector<VertexPolytope> red_polys;
    for (const auto& c : classes) {
      VertexPolytope p;
      p.dim = 2;
      for (const auto& v : c.verts)
        p.verts.push_back(IntVec{v[0] * c.mult, v[1] * c.mult});
      std::sort(p.verts.begin(), p.verts.end());
      red_polys.push_back(std::move(p));
    }
    VertexPolytope red_sum = polygon_sum(red_polys);
    for (const auto& x : red_sum.verts) out.sum.verts.push_back(add(origin, lat.lift(x)));
    std::sort(out.sum.verts.begin(), out.sum.verts.end());
    return out;
  }

  // Cell BFS over the common refinement. A cell is one vertex choice per
  // class; its cone is cut out by the per-vertex cone facet rows. Crossing a
  // facet row moves exactly the classes owning a parallel cone facet to their
  // edge-adjacent vertex.
  for (auto& c : classes) {
    VertexPolytope rep;
    rep.dim = (int)r;
    rep.verts = c.verts;
    c.cones = vertex_cone_facets(rep);
    for (auto& f : c.cones)
      std::sort(f.begin(), f.end(),
                [](const ConeFacet& a, const ConeFacet& b) { return a.dir < b.dir; });
  }

  std::vector<int32_t> start(nc);
  for (size_t c = 0; c < nc; ++c) start[c] = lex_max_index(classes[c].verts);

  std::unordered_set<std::vector<int32_t>, I32VecHash> seen;
  std::deque<std::vector<int32_t>> queue;
  seen.insert(start);
  queue.push_back(start);
  std::vector<std::pair<IntVec, std::vector<int32_t>>> cells;

  while (!queue.empty()) {
    std::vector<int32_t> t = queue.front();
    queue.pop_front();
    cells.emplace_back(cell_vertex(t), t);

    std::unordered_set<IntVec, IntVecHash> rowset;
    for (size_t c = 0; c < nc; ++c)
      for (const auto& f : classes[c].cones[t[c]]) rowset.insert(f.dir);
    std::vector<IntVec> rows(rowset.begin(), rowset.end());
    std::sort(rows.begin(), rows.end());

    for (size_t ai = 0; ai < rows.size(); ++ai) {
      std::vector<IntVec> G;
      IntVec h;
      G.reserve(rows.size());
      G.push_back(neg(rows[ai]));
      h.push_back(1);
      for (size_t b = 0; b < rows.size(); ++b) {
        if (b == ai) continue;
        G.push_back(rows[b]);
        h.push_back(0);
      }
      if (!lp_feasible(G, h, r).feasible) continue;  // not a facet of this cell
      std::vector<int32_t> nxt(nc);
      for (size_t c = 0; c < nc; ++c)
        nxt[c] = cone_neighbor(classes[c].cones[t[c]], rows[ai], t[c]);
      if (seen.insert(nxt).second) queue.push_back(std::move(nxt));
    }
  }

  assemble(cells);
  return out;
}

}  // namespace inferfan
