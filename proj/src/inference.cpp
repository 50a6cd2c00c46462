#include "inference.hpp"

#include <algorithm>

namespace inferfan {

namespace {

constexpr uint64_t kHiddenScanCap = uint64_t(1) << 20;

// Per-observation chain tables: exponent of the unary factors at (position,
// state) and of the transition factors at (position, state pair); nullopt
// marks a structural zero.
struct ChainTables {
  int q = 0, l = 0;
  std::vector<std::vector<std::optional<IntVec>>> em;
  std::vector<std::vector<std::optional<IntVec>>> tr;

  const std::optional<IntVec>& E(int i, int32_t s) const {
    return em[static_cast<size_t>(i)][static_cast<size_t>(s)];
  }
  const std::optional<IntVec>& T(int i, int32_t a, int32_t b) const {
    return tr[static_cast<size_t>(i)][static_cast<size_t>(a * l + b)];
  }
};

std::optional<ChainTables> chain_tables(const FactorModel& m,
                                        const std::vector<int32_t>& tau) {
  const auto cv = chain_view(m);
  if (!cv) return std::nullopt;
  ChainTables ct;
  ct.q = m.hidden_count;
  ct.l = m.l();
  ct.em.assign(static_cast<size_t>(ct.q),
               std::vector<std::optional<IntVec>>(static_cast<size_t>(ct.l)));
  if (ct.q > 1)
    ct.tr.assign(static_cast<size_t>(ct.q - 1),
                 std::vector<std::optional<IntVec>>(static_cast<size_t>(ct.l * ct.l)));
  for (int i = 0; i < ct.q; ++i) {
    for (int32_t s = 0; s < ct.l; ++s) {
      IntVec exp(static_cast<size_t>(m.d), 0);
      bool ok = true;
      for (const Factor* f : cv->unary[static_cast<size_t>(i)]) {
        std::vector<int32_t> key = {s};
        for (int32_t j : f->scope_observed) key.push_back(tau[static_cast<size_t>(j)]);
        auto it = f->table.find(key);
        if (it == f->table.end()) {
          ok = false;
          break;
        }
        exp = add(exp, it->second);
      }
      if (ok) ct.em[static_cast<size_t>(i)][static_cast<size_t>(s)] = std::move(exp);
    }
  }
  for (int i = 0; i + 1 < ct.q; ++i) {
    for (int32_t a = 0; a < ct.l; ++a) {
      for (int32_t b = 0; b < ct.l; ++b) {
        IntVec exp(static_cast<size_t>(m.d), 0);
        bool ok = true;
        for (const Factor* f : cv->edge[static_cast<size_t>(i)]) {
          auto it = f->table.find({a, b});
          if (it == f->table.end()) {
            ok = false;
            break;
          }
          exp = add(exp, it->second);
        }
        if (ok) ct.tr[static_cast<size_t>(i)][static_cast<size_t>(a * ct.l + b)] = std::move(exp);
      }
    }
  }
  return ct;
}

Explanation viterbi_chain(const FactorModel& m, const ChainTables& ct,
                          const std::vector<int32_t>& tau, const RatVec& v) {
  const int q = ct.q, l = ct.l;
  std::vector<std::vector<std::optional<Rat>>> suffix(
      static_cast<size_t>(q), std::vector<std::optional<Rat>>(static_cast<size_t>(l)));
  for (int32_t s = 0; s < l; ++s)
    if (ct.E(q - 1, s)) suffix.back()[static_cast<size_t>(s)] = dotq(v, *ct.E(q - 1, s));
  for (int i = q - 2; i >= 0; --i) {
    for (int32_t a = 0; a < l; ++a) {
      if (!ct.E(i, a)) continue;
      std::optional<Rat> best;
      for (int32_t b = 0; b < l; ++b) {
        if (!ct.T(i, a, b) || !suffix[static_cast<size_t>(i + 1)][static_cast<size_t>(b)])
          continue;
        Rat cand = dotq(v, *ct.T(i, a, b)) +
                   *suffix[static_cast<size_t>(i + 1)][static_cast<size_t>(b)];
        if (!best || cand > *best) best = std::move(cand);
      }
      if (best)
        suffix[static_cast<size_t>(i)][static_cast<size_t>(a)] =
            dotq(v, *ct.E(i, a)) + *best;
    }
  }

  Explanation out;
  std::optional<Rat> total;
  int32_t pick = -1;
  for (int32_t s = 0; s < l; ++s) {
    const auto& c = suffix[0][static_cast<size_t>(s)];
    if (c && (!total || *c > *total)) {
      total = *c;
      pick = s;
    }
  }
  if (!total)
    throw Unexplainable("unexplainable observation: " + m.observation_string(tau));
  out.score = *total;
  out.exponent.assign(static_cast<size_t>(m.d), 0);
  out.h.push_back(pick);
  out.exponent = add(out.exponent, *ct.E(0, pick));
  Rat rest = *total - dotq(v, *ct.E(0, pick));
  for (int i = 0; i + 1 < q; ++i) {
    const int32_t a = out.h.back();
    for (int32_t b = 0; b < l; ++b) {
      const auto& tr = ct.T(i, a, b);
      const auto& sfx = suffix[static_cast<size_t>(i + 1)][static_cast<size_t>(b)];
      if (!tr || !sfx) continue;
      if (dotq(v, *tr) + *sfx == rest) {
        out.h.push_back(b);
        out.exponent = add(out.exponent, *tr);
        out.exponent = add(out.exponent, *ct.E(i + 1, b));
        rest = *sfx - dotq(v, *ct.E(i + 1, b));
        break;
      }
    }
  }
  return out;
}

// Pair-model alignment columns. Indices follow the hidden alphabet
// ["-0","-1","0-","00","01","1-","10","11"], so the dash-first column order
// is exactly index order, and insert < delete < diagonal at every grid node.
int32_t col_insert(int32_t t) { return t; }
int32_t col_delete(int32_t s) { return (s + 1) * 3 - 1; }
int32_t col_diag(int32_t s, int32_t t) { return 3 * s + t + 3; }

IntVec col_exponent(int32_t s_or_minus1, int32_t t_or_minus1) {
  if (s_or_minus1 < 0 || t_or_minus1 < 0) return {0, 1, 0};
  if (s_or_minus1 == t_or_minus1) return {0, 0, 1};
  return {1, 0, 0};
}

Explanation viterbi_pair(const FactorModel& m, const std::vector<int32_t>& tau,
                         const RatVec& v) {
  const int n1 = m.n1, n2 = m.n2;
  const auto s1 = [&](int i) { return tau[static_cast<size_t>(i)]; };
  const auto s2 = [&](int j) { return tau[static_cast<size_t>(n1 + j)]; };
  std::vector<std::vector<Rat>> sfx(static_cast<size_t>(n1 + 1),
                                    std::vector<Rat>(static_cast<size_t>(n2 + 1)));
  for (int i = n1; i >= 0; --i) {
    for (int j = n2; j >= 0; --j) {
      if (i == n1 && j == n2) continue;
      std::optional<Rat> best;
      if (j < n2) best = v[1] + sfx[static_cast<size_t>(i)][static_cast<size_t>(j + 1)];
      if (i < n1) {
        Rat cand = v[1] + sfx[static_cast<size_t>(i + 1)][static_cast<size_t>(j)];
        if (!best || cand > *best) best = std::move(cand);
      }
      if (i < n1 && j < n2) {
        Rat cand = v[s1(i) == s2(j) ? 2 : 0] +
                   sfx[static_cast<size_t>(i + 1)][static_cast<size_t>(j + 1)];
        if (!best || cand > *best) best = std::move(cand);
      }
      sfx[static_cast<size_t>(i)][static_cast<size_t>(j)] = *best;
    }
  }

  Explanation out;
  out.score = sfx[0][0];
  out.exponent = {0, 0, 0};
  int i = 0, j = 0;
  while (i < n1 || j < n2) {
    const Rat& here = sfx[static_cast<size_t>(i)][static_cast<size_t>(j)];
    if (j < n2 && v[1] + sfx[static_cast<size_t>(i)][static_cast<size_t>(j + 1)] == here) {
      out.h.push_back(col_insert(s2(j)));
      out.exponent[1] += 1;
      ++j;
      continue;
    }
    if (i < n1 && v[1] + sfx[static_cast<size_t>(i + 1)][static_cast<size_t>(j)] == here) {
      out.h.push_back(col_delete(s1(i)));
      out.exponent[1] += 1;
      ++i;
      continue;
    }
    out.h.push_back(col_diag(s1(i), s2(j)));
    out.exponent[s1(i) == s2(j) ? 2 : 0] += 1;
    ++i;
    ++j;
  }
  return out;
}

Explanation viterbi_exhaustive(const FactorModel& m, const std::vector<int32_t>& tau,
                               const RatVec& v) {
  const int q = m.hidden_count, l = m.l();
  uint64_t total = 1;
  for (int i = 0; i < q; ++i) {
    total *= static_cast<uint64_t>(l);
    if (total > kHiddenScanCap)
      throw CapExceeded("hidden space too large for exhaustive inference");
  }
  std::optional<Explanation> best;
  std::vector<int32_t> h(static_cast<size_t>(q), 0);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t t = idx;
    for (int i = q - 1; i >= 0; --i) {
      h[static_cast<size_t>(i)] = static_cast<int32_t>(t % static_cast<uint64_t>(l));
      t /= static_cast<uint64_t>(l);
    }
    auto exp = monomial_of(m, h, tau);
    if (!exp) continue;
    Rat score = dotq(v, *exp);
    if (!best || score > best->score) best = Explanation{h, std::move(*exp), std::move(score)};
  }
  if (!best)
    throw Unexplainable("unexplainable observation: " + m.observation_string(tau));
  return *best;
}

NewtonPolytope np_chain(const FactorModel& m, const ChainTables& ct) {
  const int q = ct.q, l = ct.l;
  std::vector<NewtonPolytope> layer(static_cast<size_t>(l));
  for (int32_t s = 0; s < l; ++s)
    if (ct.E(0, s)) layer[static_cast<size_t>(s)] = np_point(m.d, *ct.E(0, s), {s});
  for (int i = 0; i + 1 < q; ++i) {
    std::vector<NewtonPolytope> next(static_cast<size_t>(l));
    for (int32_t b = 0; b < l; ++b) {
      if (!ct.E(i + 1, b)) continue;
      NewtonPolytope acc;
      for (int32_t a = 0; a < l; ++a) {
        if (!ct.T(i, a, b) || layer[static_cast<size_t>(a)].poly.verts.empty()) continue;
        NewtonPolytope step =
            np_point(m.d, add(*ct.T(i, a, b), *ct.E(i + 1, b)), {b});
        acc = np_add(acc, np_mul(layer[static_cast<size_t>(a)], step));
      }
      next[static_cast<size_t>(b)] = std::move(acc);
    }
    layer = std::move(next);
  }
  NewtonPolytope out;
  for (const auto& np : layer) out = np_add(out, np);
  return out;
}

NewtonPolytope np_pair(const FactorModel& m, const std::vector<int32_t>& tau) {
  const int n1 = m.n1, n2 = m.n2;
  const auto s1 = [&](int i) { return tau[static_cast<size_t>(i)]; };
  const auto s2 = [&](int j) { return tau[static_cast<size_t>(n1 + j)]; };
  std::vector<std::vector<NewtonPolytope>> np(
      static_cast<size_t>(n1 + 1), std::vector<NewtonPolytope>(static_cast<size_t>(n2 + 1)));
  np[0][0] = np_point(3, {0, 0, 0}, {});
  for (int i = 0; i <= n1; ++i) {
    for (int j = 0; j <= n2; ++j) {
      if (i == 0 && j == 0) continue;
      NewtonPolytope acc;
      if (j > 0)
        acc = np_add(acc, np_mul(np[static_cast<size_t>(i)][static_cast<size_t>(j - 1)],
                                 np_point(3, col_exponent(-1, s2(j - 1)),
                                          {col_insert(s2(j - 1))})));
      if (i > 0)
        acc = np_add(acc, np_mul(np[static_cast<size_t>(i - 1)][static_cast<size_t>(j)],
                                 np_point(3, col_exponent(s1(i - 1), -1),
                                          {col_delete(s1(i - 1))})));
      if (i > 0 && j > 0)
        acc = np_add(acc, np_mul(np[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)],
                                 np_point(3, col_exponent(s1(i - 1), s2(j - 1)),
                                          {col_diag(s1(i - 1), s2(j - 1))})));
      np[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(acc);
    }
  }
  return np[static_cast<size_t>(n1)][static_cast<size_t>(n2)];
}

NewtonPolytope np_exhaustive(const FactorModel& m, const std::vector<int32_t>& tau) {
  const int q = m.hidden_count, l = m.l();
  uint64_t total = 1;
  for (int i = 0; i < q; ++i) {
    total *= static_cast<uint64_t>(l);
    if (total > kHiddenScanCap)
      throw CapExceeded("hidden space too large for exhaustive polytope");
  }
  std::map<IntVec, Witness> pts;
  std::vector<int32_t> h(static_cast<size_t>(q), 0);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t t = idx;
    for (int i = q - 1; i >= 0; --i) {
      h[static_cast<size_t>(i)] = static_cast<int32_t>(t % static_cast<uint64_t>(l));
      t /= static_cast<uint64_t>(l);
    }
    auto exp = monomial_of(m, h, tau);
    if (!exp) continue;
    auto [it, fresh] = pts.try_emplace(std::move(*exp), h);
    (void)it;
    (void)fresh;  // first hit is lex-least: odometer order is lex order
  }
  if (pts.empty())
    throw Unexplainable("unexplainable observation: " + m.observation_string(tau));
  std::vector<IntVec> points;
  points.reserve(pts.size());
  for (const auto& [p, w] : pts) points.push_back(p);
  NewtonPolytope out;
  out.poly = hull_reduce(m.d, std::move(points));
  for (const auto& vtx : out.poly.verts) out.wit.push_back(pts.at(vtx));
  return out;
}

void check_observation(const FactorModel& m, const std::vector<int32_t>& tau) {
  if (static_cast<int>(tau.size()) != m.observed_count)
    throw BadInput("observation has wrong length");
  for (int32_t t : tau)
    if (t < 0 || t >= m.lp()) throw BadInput("observation symbol out of range");
}

}  // namespace

Explanation viterbi(const FactorModel& m, const std::vector<int32_t>& tau, const RatVec& v) {
  check_observation(m, tau);
  if (static_cast<int>(v.size()) != m.d) throw BadInput("log-parameter vector length != d");
  if (m.kind == FactorModel::Kind::PairAlignment) return viterbi_pair(m, tau, v);
  if (auto ct = chain_tables(m, tau)) return viterbi_chain(m, *ct, tau, v);
  return viterbi_exhaustive(m, tau, v);
}

NewtonPolytope observation_polytope(const FactorModel& m, const std::vector<int32_t>& tau) {
  check_observation(m, tau);
  NewtonPolytope out;
  if (m.kind == FactorModel::Kind::PairAlignment) {
    out = np_pair(m, tau);
  } else if (auto ct = chain_tables(m, tau)) {
    out = np_chain(m, *ct);
  } else {
    return np_exhaustive(m, tau);
  }
  if (out.poly.verts.empty())
    throw Unexplainable("unexplainable observation: " + m.observation_string(tau));
  return out;
}

std::vector<int32_t> nth_observation(const FactorModel& m, uint64_t index) {
  std::vector<int32_t> tau(static_cast<size_t>(m.observed_count), 0);
  const uint64_t base = static_cast<uint64_t>(m.lp());
  for (int i = m.observed_count - 1; i >= 0; --i) {
    tau[static_cast<size_t>(i)] = static_cast<int32_t>(index % base);
    index /= base;
  }
  return tau;
}

InferenceFunction inference_function(const FactorModel& m, const RatVec& v, uint64_t cap) {
  const uint64_t space = m.observation_space();
  if (space > cap) throw CapExceeded("observation space exceeds cap");
  InferenceFunction fn;
  fn.table.reserve(space);
  for (uint64_t idx = 0; idx < space; ++idx) {
    const auto tau = nth_observation(m, idx);
    try {
      fn.table.push_back(viterbi(m, tau, v).h);
    } catch (const Unexplainable&) {
      fn.table.emplace_back();
    }
  }
  return fn;
}

}  // namespace inferfan
