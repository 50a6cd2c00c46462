#include "counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "rng.hpp"

namespace inferfan {

namespace {

void run_partitioned(uint64_t total, int jobs, const std::function<void(uint64_t, uint64_t)>& work) {
  if (jobs < 1) jobs = 1;
  if (jobs > 16) jobs = 16;
  if (jobs == 1 || total < 64) {
    work(0, total);
    return;
  }
  std::vector<std::thread> pool;
  const uint64_t chunk = (total + jobs - 1) / jobs;
  for (int t = 0; t < jobs; ++t) {
    const uint64_t lo = std::min(total, chunk * t);
    const uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(work, lo, hi);
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::string CountReport::record() const {
  std::ostringstream os;
  os << "model=" << model << " observations=" << observations << " used=" << used
     << " distinct=" << distinct << " count=" << int_str(count) << " " << bound.line();
  return os.str();
}

CountReport count_inference_functions(const FactorModel& m, uint64_t cap, int jobs) {
  const uint64_t space = m.observation_space();
  if (space > cap)
    throw CapExceeded("observation space " + std::to_string(space) + " exceeds cap " +
                      std::to_string(cap));

  std::vector<std::optional<VertexPolytope>> slots(space);
  run_partitioned(space, jobs, [&](uint64_t lo, uint64_t hi) {
    for (uint64_t i = lo; i < hi; ++i) {
      try {
        slots[i] = observation_polytope(m, nth_observation(m, i)).poly;
      } catch (const Unexplainable&) {
      }
    }
  });

  CountReport r;
  r.model = m.name;
  r.d = m.d;
  r.observations = space;

  std::set<std::vector<IntVec>> seen;
  std::vector<VertexPolytope> distinct;
  for (const auto& s : slots) {
    if (!s) continue;
    ++r.used;
    if (seen.insert(s->verts).second) distinct.push_back(*s);
  }
  r.distinct = distinct.size();

  std::set<IntVec> classes;
  for (const auto& p : distinct)
    for (const auto& e : edge_directions(p)) classes.insert(e);

  if (distinct.empty()) {
    r.sum.dim = static_cast<int>(m.d);
    r.sum.verts = {IntVec(m.d, 0)};
  } else {
    r.sum = minkowski_sum_many(static_cast<int>(m.d), distinct, false).sum;
  }
  r.count = Int(static_cast<unsigned long>(r.sum.verts.size()));
  r.bound = bounds(static_cast<long long>(classes.size()), complexity_M(m), m.d);
  if (r.bound.gs && r.count > *r.bound.gs)
    throw std::logic_error("vertex count exceeds the edge-class bound");
  if (r.bound.fif && r.count > *r.bound.fif)
    throw std::logic_error("vertex count exceeds the complexity bound");
  return r;
}

std::string SampleReport::record() const {
  std::ostringstream os;
  os << "model=" << model << " samples=" << samples << " seed=" << seed
     << " distinct=" << distinct;
  return os.str();
}

SampleReport sample_inference_functions(const FactorModel& m, uint64_t samples,
                                        uint64_t seed, uint64_t cap,
                                        const std::vector<std::vector<int32_t>>* observations) {
  std::vector<std::vector<int32_t>> all;
  if (!observations) {
    const uint64_t space = m.observation_space();
    if (space > cap)
      throw CapExceeded("observation space " + std::to_string(space) + " exceeds cap " +
                        std::to_string(cap));
    all.reserve(space);
    for (uint64_t i = 0; i < space; ++i) all.push_back(nth_observation(m, i));
    observations = &all;
  }

  std::vector<std::optional<VertexPolytope>> polys(observations->size());
  for (size_t i = 0; i < observations->size(); ++i) {
    try {
      polys[i] = observation_polytope(m, (*observations)[i]).poly;
    } catch (const Unexplainable&) {
    }
  }

  const long long B = 1000000;
  std::unordered_set<std::vector<int32_t>, I32VecHash> tables;
  for (uint64_t k = 0; k < samples; ++k) {
    Rng rng(seed, k);
    std::vector<int32_t> table(polys.size(), -1);
    bool ok = false;
    for (int attempt = 0; attempt < 512 && !ok; ++attempt) {
      IntVec w(m.d);
      bool zero = true;
      for (auto& c : w) {
        c = rng.range(-B, B);
        if (c != 0) zero = false;
      }
      if (zero) continue;
      ok = true;
      for (size_t i = 0; i < polys.size() && ok; ++i) {
        if (!polys[i]) {
          table[i] = -1;
          continue;
        }
        const auto& vs = polys[i]->verts;
        size_t best = 0;
        __int128 bv = dot128(w, vs[0]);
        bool tie = false;
        for (size_t j = 1; j < vs.size(); ++j) {
          __int128 v = dot128(w, vs[j]);
          if (v > bv) {
            bv = v;
            best = j;
            tie = false;
          } else if (v == bv) {
            tie = true;
          }
        }
        if (tie)
          ok = false;
        else
          table[i] = static_cast<int32_t>(best);
      }
    }
    if (!ok) throw std::logic_error("could not find a generic direction");
    tables.insert(std::move(table));
  }

  SampleReport r;
  r.model = m.name;
  r.samples = samples;
  r.seed = seed;
  r.distinct = tables.size();
  return r;
}

namespace {

std::vector<IntVec> arrangement_normals(long long d, long long n) {
  std::vector<IntVec> out;
  IntVec a(d, 1);
  std::function<void(long long, long long)> rec = [&](long long pos, long long left) {
    if (pos == d) {
      if (content(a) == 1) out.push_back(a);
      return;
    }
    for (long long v = 1; v <= left - (d - pos - 1); ++v) {
      a[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (n - 1 >= d) rec(0, n - 1);
  return out;
}

std::vector<VertexPolytope> normal_segments(long long d, const std::vector<IntVec>& normals) {
  std::vector<VertexPolytope> segs;
  for (const auto& a : normals) {
    VertexPolytope s;
    s.dim = static_cast<int>(d);
    s.verts = {IntVec(d, 0), a};
    std::sort(s.verts.begin(), s.verts.end());
    segs.push_back(std::move(s));
  }
  return segs;
}

IntVec cross3(const IntVec& a, const IntVec& b) {
  return IntVec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]};
}

}  // namespace

std::string ArrangementReport::record() const {
  std::ostringstream os;
  os << "d=" << d << " n=" << n << " normals=" << normals
     << " chambers=" << int_str(chambers);
  return os.str();
}

ArrangementReport arrangement_chambers(long long d, long long n) {
  if (d < 2) throw BadInput("arrangement needs d >= 2");
  if (n < 3) throw BadInput("arrangement needs n >= 3");
  ArrangementReport r;
  r.d = d;
  r.n = n;
  if (d == 2) {
    if (n > 10000) throw CapExceeded("d=2 arrangements support n <= 10000");
    // gcd(a1, a2) = gcd(a1, s) for s = a1 + a2, so the primitive pairs with
    // sum s are counted by Euler's totient.
    std::vector<long long> phi(n);
    for (long long i = 0; i < n; ++i) phi[i] = i;
    for (long long i = 2; i < n; ++i)
      if (phi[i] == i)
        for (long long j = i; j < n; j += i) phi[j] -= phi[j] / i;
    long long N = 0;
    for (long long s = 2; s < n; ++s) N += phi[s];
    r.normals = static_cast<uint64_t>(N);
    r.chambers = Int(2) * Int(static_cast<long>(N));
    if (N <= 4096) {
      auto normals = arrangement_normals(2, n);
      if (static_cast<long long>(normals.size()) != N)
        throw std::logic_error("totient census disagrees with enumeration");
      const auto zon = polygon_sum_vertex_count(normal_segments(2, normals));
      if (Int(static_cast<unsigned long>(zon)) != r.chambers)
        throw std::logic_error("zonotope route disagrees with line count");
    }
    return r;
  }
  if (d == 3) {
    if (n > 8) throw CapExceeded("d=3 arrangements support n <= 8");
    auto normals = arrangement_normals(3, n);
    r.normals = normals.size();
    const size_t N = normals.size();
    if (N == 0) {
      r.chambers = 1;
      return r;
    }
    if (N == 1) {
      r.chambers = 2;
      return r;
    }
    // Spherical cell count: the planes cut the unit sphere into great
    // circles; V, E, F come from the antipodal point pairs where circles
    // cross, the arcs between them, and Euler's formula.
    std::set<IntVec> lines;
    for (size_t i = 0; i < N; ++i)
      for (size_t j = i + 1; j < N; ++j)
        lines.insert(lex_positive(primitive(cross3(normals[i], normals[j]))));
    long long V = 2 * static_cast<long long>(lines.size());
    long long E = 0;
    for (const auto& a : normals) {
      long long on = 0;
      for (const auto& l : lines)
        if (a[0] * l[0] + a[1] * l[1] + a[2] * l[2] == 0) ++on;
      if (on == 0) throw std::logic_error("isolated great circle");
      E += 2 * on;
    }
    r.chambers = Int(static_cast<long>(E - V + 2));
    if (n <= 6) {
      const auto ms = minkowski_sum_many(3, normal_segments(3, normals), false);
      if (Int(static_cast<unsigned long>(ms.sum.verts.size())) != r.chambers)
        throw std::logic_error("zonotope route disagrees with sphere count");
    }
    return r;
  }
  throw CapExceeded("arrangements support d <= 3");
}

int extreme_rays_check(long long d, long long n) {
  if (d < 2) throw BadInput("arrangement needs d >= 2");
  if (n < 3) throw BadInput("arrangement needs n >= 3");
  if (d == 2) {
    if (n > 10000) throw CapExceeded("d=2 arrangements support n <= 10000");
    return 2;
  }
  if (d != 3) throw CapExceeded("extreme ray scan supports d <= 3");
  if (n > 6) throw CapExceeded("d=3 extreme ray scan supports n <= 6");
  auto normals = arrangement_normals(3, n);
  const size_t N = normals.size();
  if (N < 2) return 0;

  std::set<IntVec> cand;
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j) {
      IntVec c = primitive(cross3(normals[i], normals[j]));
      cand.insert(c);
      cand.insert(neg(c));
    }

  const auto ms = minkowski_sum_many(3, normal_segments(3, normals), true);
  std::vector<int> used(cand.size(), 0);
  int best = 0;
  for (const auto& cell : ms.choice) {
    int rays = 0;
    size_t ci = 0;
    for (const auto& rdir : cand) {
      bool ok = true;
      for (size_t i = 0; i < N && ok; ++i) {
        long long s = normals[i][0] * rdir[0] + normals[i][1] * rdir[1] +
                      normals[i][2] * rdir[2];
        if (cell[i] == 1 ? s < 0 : s > 0) ok = false;
      }
      if (ok) {
        ++rays;
        used[ci] = 1;
      }
      ++ci;
    }
    best = std::max(best, rays);
  }
  for (int u : used)
    if (!u) throw std::logic_error("candidate ray lies in no chamber");
  return best;
}

std::string PrimProbReport::record() const {
  std::ostringstream os;
  os << "d=" << d << " m=" << m << " box=" << box << " samples=" << samples
     << " seed=" << seed << " hits=" << hits << " phat=" << rat_str(p_hat);
  return os.str();
}

namespace {

Int det_int(std::vector<std::vector<Int>> a) {
  const size_t n = a.size();
  if (n == 1) return a[0][0];
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

PrimProbReport primitive_probability(long long d, long long m, long long box,
                                     uint64_t samples, uint64_t seed) {
  if (m < 1 || m >= d) throw BadInput("need 1 <= m < d (zeta(1) diverges)");
  if (box < 1) throw BadInput("box must be positive");
  if (samples < 1) throw BadInput("need at least one sample");

  PrimProbReport r;
  r.d = d;
  r.m = m;
  r.box = box;
  r.samples = samples;
  r.seed = seed;

  std::vector<long long> cols(m);
  for (uint64_t s = 0; s < samples; ++s) {
    Rng rng(seed, s);
    std::vector<std::vector<long long>> mat(m, std::vector<long long>(d));
    for (long long i = 0; i < m; ++i)
      for (long long j = 0; j < d; ++j) mat[i][j] = rng.range(0, box);

    Int g = 0;
    std::iota(cols.begin(), cols.end(), 0);
    bool done = false;
    while (!done) {
      std::vector<std::vector<Int>> sub(m, std::vector<Int>(m));
      for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < m; ++j) sub[i][j] = static_cast<long>(mat[i][cols[j]]);
      Int dt = det_int(std::move(sub));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), dt.get_mpz_t());
      if (g == 1) break;
      long long i = m - 1;
      while (i >= 0 && cols[i] == d - m + i) --i;
      if (i < 0) {
        done = true;
      } else {
        ++cols[i];
        for (long long j = i + 1; j < m; ++j) cols[j] = cols[j - 1] + 1;
      }
    }
    if (g == 1) ++r.hits;
  }
  r.p_hat = Rat(Int(static_cast<unsigned long>(r.hits))) /
            Rat(Int(static_cast<unsigned long>(samples)));
  return r;
}

std::pair<Rat, Rat> zeta_reference(long long d, long long m) {
  if (m < 1 || m >= d) throw BadInput("need 1 <= m < d (zeta(1) diverges)");
  const long long N = 4000;
  Int D = 1;
  for (int i = 0; i < 18; ++i) D *= 10;

  Rat lo(1), hi(1);
  for (long long j = d - m + 1; j <= d; ++j) {
    Int slo = 0;
    for (long long i = 1; i <= N; ++i) {
      Int p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(i),
                    static_cast<unsigned long>(j));
      if (p > D) break;
      slo += D / p;
    }
    Int pn, pn1;
    mpz_ui_pow_ui(pn.get_mpz_t(), static_cast<unsigned long>(N),
                  static_cast<unsigned long>(j - 1));
    mpz_ui_pow_ui(pn1.get_mpz_t(), static_cast<unsigned long>(N + 1),
                  static_cast<unsigned long>(j - 1));
    // sum_{i>N} i^-j lies between the integrals of x^-j over [N+1,inf) shifted
    // by one term; the crude bracket below is plenty at this width.
    Rat zlo = Rat(slo) / Rat(D) + Rat(1) / Rat(Int(static_cast<long>(j - 1)) * pn1);
    Rat zhi = Rat(slo + Int(static_cast<long>(N))) / Rat(D) + Rat(1) / Rat(Int(static_cast<long>(j - 1)) * pn);
    lo *= Rat(1) / zhi;
    hi *= Rat(1) / zlo;
  }
  if (hi - lo > Rat(1, 1000000)) throw std::logic_error("zeta bracket too wide");
  return {lo, hi};
}

}  // namespace inferfan
