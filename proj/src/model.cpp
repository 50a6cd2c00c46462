#include "model.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include <json.hpp>

namespace inferfan {

namespace {

using nlohmann::json;

std::string join_symbols(const std::vector<std::string>& alphabet,
                         const std::vector<int32_t>& idx) {
  std::string out;
  for (int32_t i : idx) out += alphabet.at(static_cast<size_t>(i));
  return out;
}

// Splits a concatenated symbol key back into indices. Symbols may be several
// characters long, so the split backtracks; the key must parse uniquely.
void split_key_rec(const std::string& key, size_t pos,
                   const std::vector<const std::vector<std::string>*>& alphas,
                   size_t slot, std::vector<int32_t>& cur,
                   std::vector<std::vector<int32_t>>& out) {
  if (out.size() > 1) return;
  if (slot == alphas.size()) {
    if (pos == key.size()) out.push_back(cur);
    return;
  }
  const auto& alpha = *alphas[slot];
  for (size_t i = 0; i < alpha.size(); ++i) {
    const std::string& sym = alpha[i];
    if (key.compare(pos, sym.size(), sym) == 0) {
      cur.push_back(static_cast<int32_t>(i));
      split_key_rec(key, pos + sym.size(), alphas, slot + 1, cur, out);
      cur.pop_back();
    }
  }
}

std::vector<int32_t> split_key(const std::string& key,
                               const std::vector<const std::vector<std::string>*>& alphas) {
  std::vector<std::vector<int32_t>> parses;
  std::vector<int32_t> cur;
  split_key_rec(key, 0, alphas, 0, cur, parses);
  if (parses.empty()) throw BadInput("table key does not parse: " + key);
  if (parses.size() > 1) throw BadInput("ambiguous table key: " + key);
  return parses[0];
}

int32_t find_symbol(const std::vector<std::string>& alphabet, const std::string& sym,
                    const char* what) {
  auto it = std::find(alphabet.begin(), alphabet.end(), sym);
  if (it == alphabet.end()) throw BadInput(std::string(what) + " symbol unknown: " + sym);
  return static_cast<int32_t>(it - alphabet.begin());
}

IntVec unit_vec(int d, int i) {
  IntVec e(static_cast<size_t>(d), 0);
  e[static_cast<size_t>(i)] = 1;
  return e;
}

const std::vector<std::string>& pair_alphabet() {
  static const std::vector<std::string> cols = {"-0", "-1", "0-", "00",
                                                "01", "1-", "10", "11"};
  return cols;
}

}  // namespace

int32_t FactorModel::hidden_index(const std::string& sym) const {
  return find_symbol(hidden_alphabet, sym, "hidden");
}

int32_t FactorModel::observed_index(const std::string& sym) const {
  return find_symbol(observed_alphabet, sym, "observed");
}

std::vector<int32_t> FactorModel::parse_observation(const std::string& s) const {
  bool single = true;
  for (const auto& sym : observed_alphabet) single = single && sym.size() == 1;
  std::string body;
  for (char c : s)
    if (c != '|') body += c;
  std::vector<int32_t> obs;
  if (single) {
    for (char c : body) obs.push_back(observed_index(std::string(1, c)));
  } else {
    std::vector<const std::vector<std::string>*> alphas(
        static_cast<size_t>(observed_count), &observed_alphabet);
    obs = split_key(body, alphas);
  }
  if (static_cast<int>(obs.size()) != observed_count)
    throw BadInput("observation has wrong length");
  return obs;
}

std::string FactorModel::observation_string(const std::vector<int32_t>& obs) const {
  if (kind == Kind::PairAlignment) {
    std::string out;
    for (size_t i = 0; i < obs.size(); ++i) {
      if (static_cast<int>(i) == n1) out += '|';
      out += observed_alphabet.at(static_cast<size_t>(obs[i]));
    }
    return out;
  }
  return join_symbols(observed_alphabet, obs);
}

std::string FactorModel::hidden_string(const std::vector<int32_t>& h) const {
  return join_symbols(hidden_alphabet, h);
}

uint64_t FactorModel::observation_space() const {
  uint64_t total = 1;
  const uint64_t base = static_cast<uint64_t>(lp());
  for (int i = 0; i < observed_count; ++i) {
    if (total > (uint64_t(1) << 62) / base) return uint64_t(1) << 62;
    total *= base;
  }
  return total;
}

void FactorModel::validate() const {
  if (d < 1) throw BadInput("model needs d >= 1");
  if (static_cast<int>(params.size()) != d) throw BadInput("params length != d");
  if (hidden_alphabet.empty() || observed_alphabet.empty())
    throw BadInput("empty alphabet");
  if (hidden_count < 1 || observed_count < 1) throw BadInput("counts must be >= 1");
  for (const auto& a : {hidden_alphabet, observed_alphabet}) {
    for (const auto& sym : a)
      if (sym.empty()) throw BadInput("empty alphabet symbol");
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw BadInput("duplicate alphabet symbol");
  }
  if (kind == Kind::PairAlignment) {
    if (n1 < 1 || n2 < 1) throw BadInput("pair model needs n1, n2 >= 1");
    if (observed_count != n1 + n2) throw BadInput("pair model observed count mismatch");
    if (d != 3) throw BadInput("pair model needs d = 3");
    if (hidden_alphabet != pair_alphabet()) throw BadInput("pair model alphabet mismatch");
    if (!factors.empty()) throw BadInput("pair model carries no factors");
    return;
  }
  for (const auto& f : factors) {
    for (int32_t i : f.scope_hidden)
      if (i < 0 || i >= hidden_count) throw BadInput("hidden scope out of range");
    for (int32_t j : f.scope_observed)
      if (j < 0 || j >= observed_count) throw BadInput("observed scope out of range");
    for (const auto& [key, exp] : f.table) {
      if (key.size() != f.scope_hidden.size() + f.scope_observed.size())
        throw BadInput("table key arity mismatch");
      for (size_t k = 0; k < key.size(); ++k) {
        const int bound = k < f.scope_hidden.size() ? l() : lp();
        if (key[k] < 0 || key[k] >= bound) throw BadInput("table key symbol out of range");
      }
      if (static_cast<int>(exp.size()) != d) throw BadInput("exponent length != d");
      for (Coord c : exp)
        if (c < 0) throw BadInput("negative exponent");
    }
  }
}

FactorModel build_homogeneous_hmm(int n, int l, int lp,
                                  const std::vector<std::vector<IntVec>>& trans,
                                  const std::vector<std::vector<IntVec>>& emit,
                                  int d) {
  if (n < 1 || l < 1 || lp < 1) throw BadInput("hmm needs n, l, lp >= 1");
  if (static_cast<int>(trans.size()) != l || static_cast<int>(emit.size()) != l)
    throw BadInput("table shape mismatch");
  for (const auto& row : trans)
    if (static_cast<int>(row.size()) != l) throw BadInput("transition table shape mismatch");
  for (const auto& row : emit)
    if (static_cast<int>(row.size()) != lp) throw BadInput("emission table shape mismatch");

  FactorModel m;
  m.name = (l == 2 && lp == 2) ? "hmm" + std::to_string(n)
                               : "hmm" + std::to_string(n) + "_l" + std::to_string(l) +
                                     "_o" + std::to_string(lp);
  m.d = d;
  m.params.reserve(static_cast<size_t>(d));
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      m.params.push_back("t" + std::to_string(a) + "_" + std::to_string(b));
  for (int h = 0; h < l; ++h)
    for (int o = 0; o < lp; ++o)
      m.params.push_back("s" + std::to_string(h) + "_" + std::to_string(o));
  while (static_cast<int>(m.params.size()) < d)
    m.params.push_back("p" + std::to_string(m.params.size()));
  if (static_cast<int>(m.params.size()) != d) throw BadInput("d smaller than table entries");

  for (int s = 0; s < l; ++s) m.hidden_alphabet.push_back(std::to_string(s));
  for (int o = 0; o < lp; ++o) m.observed_alphabet.push_back(std::to_string(o));
  m.hidden_count = n;
  m.observed_count = n;
  m.edges = 2 * n - 1;

  for (int i = 0; i < n; ++i) {
    Factor f;
    f.scope_hidden = {i};
    f.scope_observed = {i};
    for (int32_t h = 0; h < l; ++h)
      for (int32_t o = 0; o < lp; ++o)
        f.table[{h, o}] = emit[static_cast<size_t>(h)][static_cast<size_t>(o)];
    m.factors.push_back(std::move(f));
  }
  for (int i = 0; i + 1 < n; ++i) {
    Factor f;
    f.scope_hidden = {i, i + 1};
    for (int32_t a = 0; a < l; ++a)
      for (int32_t b = 0; b < l; ++b)
        f.table[{a, b}] = trans[static_cast<size_t>(a)][static_cast<size_t>(b)];
    m.factors.push_back(std::move(f));
  }
  m.validate();
  return m;
}

FactorModel build_homogeneous_hmm(int n, int l, int lp) {
  const int d = l * l + l * lp;
  std::vector<std::vector<IntVec>> trans(static_cast<size_t>(l)),
      emit(static_cast<size_t>(l));
  for (int a = 0; a < l; ++a)
    for (int b = 0; b < l; ++b)
      trans[static_cast<size_t>(a)].push_back(unit_vec(d, a * l + b));
  for (int h = 0; h < l; ++h)
    for (int o = 0; o < lp; ++o)
      emit[static_cast<size_t>(h)].push_back(unit_vec(d, l * l + h * lp + o));
  return build_homogeneous_hmm(n, l, lp, trans, emit, d);
}

FactorModel build_lowerbound_hmm(int d, int n) {
  if (d < 1) throw BadInput("lowerbound model needs d >= 1");
  if (n < d + 2) throw BadInput("lowerbound model needs n >= d + 2");

  FactorModel m;
  m.name = "lb" + std::to_string(d) + "n" + std::to_string(n);
  m.d = d;
  for (int i = 1; i <= d; ++i) m.params.push_back("theta" + std::to_string(i));

  const int k = d + 1;
  const auto S = [&](int i) { return i - 1; };           // s_1 .. s_{d+1}
  const auto C = [&](int i) { return k + i - 1; };       // c_1 .. c_{d+1}
  const auto Sp = [&](int i) { return 2 * k + i - 1; };  // s'_1 .. s'_{d+1}
  const auto Cp = [&](int i) { return 3 * k + i - 1; };  // c'_1 .. c'_{d+1}
  for (int i = 1; i <= k; ++i) m.hidden_alphabet.push_back("s" + std::to_string(i));
  for (int i = 1; i <= k; ++i) m.hidden_alphabet.push_back("c" + std::to_string(i));
  for (int i = 1; i <= k; ++i) m.hidden_alphabet.push_back("s'" + std::to_string(i));
  for (int i = 1; i <= k; ++i) m.hidden_alphabet.push_back("c'" + std::to_string(i));
  m.observed_alphabet = {"S", "C"};
  m.hidden_count = n;
  m.observed_count = n;
  m.edges = 2 * n - 1;

  const IntVec zero(static_cast<size_t>(d), 0);
  for (int pos = 0; pos < n; ++pos) {
    Factor f;
    f.scope_hidden = {pos};
    f.scope_observed = {pos};
    for (int i = 1; i <= k; ++i) {
      f.table[{S(i), 0}] = zero;
      f.table[{Sp(i), 0}] = zero;
      f.table[{C(i), 1}] = zero;
      f.table[{Cp(i), 1}] = zero;
    }
    m.factors.push_back(std::move(f));
  }
  for (int pos = 0; pos + 1 < n; ++pos) {
    Factor f;
    f.scope_hidden = {pos, pos + 1};
    for (int i = 1; i <= d; ++i) {
      const IntVec theta = unit_vec(d, i - 1);
      f.table[{S(i), C(i)}] = theta;
      f.table[{C(i), C(i)}] = theta;
      f.table[{C(i), S(i + 1)}] = theta;
      f.table[{Sp(i), Cp(i)}] = zero;
      f.table[{Cp(i), Cp(i)}] = zero;
      f.table[{Cp(i), Sp(i + 1)}] = zero;
    }
    f.table[{S(k), C(k)}] = zero;
    f.table[{C(k), C(k)}] = zero;
    f.table[{Sp(k), Cp(k)}] = zero;
    f.table[{Cp(k), Cp(k)}] = zero;
    m.factors.push_back(std::move(f));
  }
  m.validate();
  return m;
}

FactorModel build_alignment_model(int n1, int n2) {
  if (n1 < 1 || n2 < 1) throw BadInput("alignment model needs n1, n2 >= 1");
  FactorModel m;
  m.kind = FactorModel::Kind::PairAlignment;
  m.name = "align" + std::to_string(n1) + "x" + std::to_string(n2);
  m.d = 3;
  m.params = {"x", "y", "z"};
  m.hidden_alphabet = pair_alphabet();
  m.hidden_count = n1 + n2;
  m.observed_alphabet = {"0", "1"};
  m.observed_count = n1 + n2;
  m.n1 = n1;
  m.n2 = n2;
  m.validate();
  return m;
}

std::string model_to_json(const FactorModel& m) {
  json j;
  j["name"] = m.name;
  j["kind"] = m.kind == FactorModel::Kind::PairAlignment ? "pair_alignment" : "factors";
  j["d"] = m.d;
  j["params"] = m.params;
  j["hidden"] = {{"alphabet", m.hidden_alphabet}, {"count", m.hidden_count}};
  j["observed"] = {{"alphabet", m.observed_alphabet}, {"count", m.observed_count}};
  json factors = json::array();
  for (const auto& f : m.factors) {
    json jf;
    jf["scope_hidden"] = f.scope_hidden;
    jf["scope_observed"] = f.scope_observed;
    json table = json::object();
    for (const auto& [key, exp] : f.table) {
      std::string ks;
      for (size_t i = 0; i < f.scope_hidden.size(); ++i)
        ks += m.hidden_alphabet.at(static_cast<size_t>(key[i]));
      for (size_t i = 0; i < f.scope_observed.size(); ++i)
        ks += m.observed_alphabet.at(
            static_cast<size_t>(key[f.scope_hidden.size() + i]));
      table[ks] = exp;
    }
    jf["table"] = std::move(table);
    factors.push_back(std::move(jf));
  }
  j["factors"] = std::move(factors);
  if (m.edges) j["edges"] = *m.edges;
  if (m.kind == FactorModel::Kind::PairAlignment) {
    j["n1"] = m.n1;
    j["n2"] = m.n2;
  }
  return j.dump(1) + "\n";
}

FactorModel model_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw BadInput(std::string("bad model JSON: ") + e.what());
  }
  try {
    FactorModel m;
    m.name = j.value("name", std::string("model"));
    const std::string kind = j.value("kind", std::string("factors"));
    if (kind == "pair_alignment")
      m.kind = FactorModel::Kind::PairAlignment;
    else if (kind != "factors")
      throw BadInput("unknown model kind: " + kind);
    m.d = j.at("d").get<int>();
    m.params = j.at("params").get<std::vector<std::string>>();
    m.hidden_alphabet = j.at("hidden").at("alphabet").get<std::vector<std::string>>();
    m.hidden_count = j.at("hidden").at("count").get<int>();
    m.observed_alphabet = j.at("observed").at("alphabet").get<std::vector<std::string>>();
    m.observed_count = j.at("observed").at("count").get<int>();
    if (j.contains("edges")) m.edges = j.at("edges").get<int>();
    if (j.contains("n1")) m.n1 = j.at("n1").get<int>();
    if (j.contains("n2")) m.n2 = j.at("n2").get<int>();
    for (const auto& jf : j.value("factors", json::array())) {
      Factor f;
      f.scope_hidden = jf.at("scope_hidden").get<std::vector<int32_t>>();
      f.scope_observed = jf.at("scope_observed").get<std::vector<int32_t>>();
      std::vector<const std::vector<std::string>*> alphas;
      for (size_t i = 0; i < f.scope_hidden.size(); ++i)
        alphas.push_back(&m.hidden_alphabet);
      for (size_t i = 0; i < f.scope_observed.size(); ++i)
        alphas.push_back(&m.observed_alphabet);
      for (const auto& [ks, jexp] : jf.at("table").items()) {
        IntVec exp = jexp.get<IntVec>();
        f.table[split_key(ks, alphas)] = std::move(exp);
      }
      m.factors.push_back(std::move(f));
    }
    m.validate();
    return m;
  } catch (const json::exception& e) {
    throw BadInput(std::string("bad model JSON: ") + e.what());
  }
}

std::optional<IntVec> monomial_of(const FactorModel& m, const std::vector<int32_t>& h,
                                  const std::vector<int32_t>& tau) {
  if (static_cast<int>(tau.size()) != m.observed_count)
    throw BadInput("observation has wrong length");
  for (int32_t t : tau)
    if (t < 0 || t >= m.lp()) throw BadInput("observation symbol out of range");

  if (m.kind == FactorModel::Kind::PairAlignment) {
    IntVec exp(3, 0);
    int i = 0, j = 0;
    for (int32_t col : h) {
      if (col < 0 || col >= 8) throw BadInput("hidden symbol out of range");
      const int code = static_cast<int>(col) + 1;  // skip the all-dash column
      const int r1 = code / 3, r2 = code % 3;
      if (r1 > 0) {
        if (i >= m.n1 || tau[static_cast<size_t>(i)] != r1 - 1) return std::nullopt;
        ++i;
      }
      if (r2 > 0) {
        if (j >= m.n2 || tau[static_cast<size_t>(m.n1 + j)] != r2 - 1) return std::nullopt;
        ++j;
      }
      if (r1 == 0 || r2 == 0)
        exp[1] += 1;  // space
      else if (r1 == r2)
        exp[2] += 1;  // match
      else
        exp[0] += 1;  // mismatch
    }
    if (i != m.n1 || j != m.n2) return std::nullopt;
    return exp;
  }

  if (static_cast<int>(h.size()) != m.hidden_count)
    throw BadInput("hidden assignment has wrong length");
  for (int32_t s : h)
    if (s < 0 || s >= m.l()) throw BadInput("hidden symbol out of range");
  IntVec exp(static_cast<size_t>(m.d), 0);
  std::vector<int32_t> key;
  for (const auto& f : m.factors) {
    key.clear();
    for (int32_t i : f.scope_hidden) key.push_back(h[static_cast<size_t>(i)]);
    for (int32_t j : f.scope_observed) key.push_back(tau[static_cast<size_t>(j)]);
    auto it = f.table.find(key);
    if (it == f.table.end()) return std::nullopt;
    exp = add(exp, it->second);
  }
  return exp;
}

std::optional<ChainView> chain_view(const FactorModel& m) {
  if (m.kind != FactorModel::Kind::Factors) return std::nullopt;
  ChainView cv;
  cv.unary.resize(static_cast<size_t>(m.hidden_count));
  if (m.hidden_count > 1) cv.edge.resize(static_cast<size_t>(m.hidden_count - 1));
  std::vector<int> obs_refs(static_cast<size_t>(m.observed_count), 0);
  for (const auto& f : m.factors) {
    if (f.scope_hidden.size() == 1 && f.scope_observed.size() <= 1) {
      for (int32_t j : f.scope_observed)
        if (++obs_refs[static_cast<size_t>(j)] > 1) return std::nullopt;
      cv.unary[static_cast<size_t>(f.scope_hidden[0])].push_back(&f);
    } else if (f.scope_hidden.size() == 2 && f.scope_observed.empty() &&
               f.scope_hidden[1] == f.scope_hidden[0] + 1) {
      cv.edge[static_cast<size_t>(f.scope_hidden[0])].push_back(&f);
    } else {
      return std::nullopt;
    }
  }
  return cv;
}

long long complexity_M(const FactorModel& m) {
  if (m.kind == FactorModel::Kind::PairAlignment) return m.n1 + m.n2;

  const auto deg = [](const IntVec& e) {
    long long s = 0;
    for (Coord c : e) s += c;
    return s;
  };
  const auto cv = chain_view(m);
  if (cv) {
    const int q = m.hidden_count, l = m.l();
    // Per state, each unary factor contributes its best entry over the
    // observed symbol; distinct factors never share an observed variable.
    const auto unary_best = [&](int pos, int32_t s) -> std::optional<long long> {
      long long total = 0;
      for (const Factor* f : cv->unary[static_cast<size_t>(pos)]) {
        std::optional<long long> best;
        if (f->scope_observed.empty()) {
          auto it = f->table.find({s});
          if (it != f->table.end()) best = deg(it->second);
        } else {
          for (int32_t o = 0; o < m.lp(); ++o) {
            auto it = f->table.find({s, o});
            if (it != f->table.end()) best = std::max(best.value_or(LLONG_MIN), deg(it->second));
          }
        }
        if (!best) return std::nullopt;
        total += *best;
      }
      return total;
    };
    std::vector<std::optional<long long>> cur(static_cast<size_t>(l));
    for (int32_t s = 0; s < l; ++s) cur[static_cast<size_t>(s)] = unary_best(0, s);
    for (int pos = 0; pos + 1 < q; ++pos) {
      std::vector<std::optional<long long>> nxt(static_cast<size_t>(l));
      for (int32_t b = 0; b < l; ++b) {
        auto eb = unary_best(pos + 1, b);
        if (!eb) continue;
        for (int32_t a = 0; a < l; ++a) {
          if (!cur[static_cast<size_t>(a)]) continue;
          long long t = *cur[static_cast<size_t>(a)] + *eb;
          bool ok = true;
          for (const Factor* f : cv->edge[static_cast<size_t>(pos)]) {
            auto it = f->table.find({a, b});
            if (it == f->table.end()) {
              ok = false;
              break;
            }
            t += deg(it->second);
          }
          if (!ok) continue;
          if (!nxt[static_cast<size_t>(b)] || t > *nxt[static_cast<size_t>(b)])
            nxt[static_cast<size_t>(b)] = t;
        }
      }
      cur = std::move(nxt);
    }
    std::optional<long long> best;
    for (const auto& v : cur)
      if (v) best = std::max(best.value_or(LLONG_MIN), *v);
    if (!best) throw BadInput("model admits no positive-probability assignment");
    return *best;
  }

  const uint64_t hs = [&] {
    uint64_t t = 1;
    for (int i = 0; i < m.hidden_count; ++i) {
      t *= static_cast<uint64_t>(m.l());
      if (t > (uint64_t(1) << 22)) throw BadInput("model too large for exhaustive complexity");
    }
    return t;
  }();
  const uint64_t os = m.observation_space();
  if (os > (uint64_t(1) << 22) / std::max<uint64_t>(hs, 1))
    throw BadInput("model too large for exhaustive complexity");
  long long best = -1;
  std::vector<int32_t> h(static_cast<size_t>(m.hidden_count), 0),
      tau(static_cast<size_t>(m.observed_count), 0);
  for (uint64_t hi = 0; hi < hs; ++hi) {
    uint64_t t = hi;
    for (int i = m.hidden_count - 1; i >= 0; --i) {
      h[static_cast<size_t>(i)] = static_cast<int32_t>(t % static_cast<uint64_t>(m.l()));
      t /= static_cast<uint64_t>(m.l());
    }
    for (uint64_t oi = 0; oi < os; ++oi) {
      uint64_t u = oi;
      for (int i = m.observed_count - 1; i >= 0; --i) {
        tau[static_cast<size_t>(i)] = static_cast<int32_t>(u % static_cast<uint64_t>(m.lp()));
        u /= static_cast<uint64_t>(m.lp());
      }
      auto e = monomial_of(m, h, tau);
      if (e) best = std::max(best, deg(*e));
    }
  }
  if (best < 0) throw BadInput("model admits no positive-probability assignment");
  return best;
}

std::vector<int32_t> block_observation(int d, int n, const std::vector<long long>& a) {
  if (static_cast<int>(a.size()) != d) throw BadInput("block vector has wrong length");
  long long sum = 0;
  for (long long ai : a) {
    if (ai < 2) throw BadInput("block entries must be >= 2");
    sum += ai;
  }
  if (sum >= n) throw BadInput("block vector too long for n");
  std::vector<int32_t> obs;
  for (int i = 0; i < d; ++i) {
    obs.push_back(0);
    for (long long c = 0; c + 1 < a[static_cast<size_t>(i)]; ++c) obs.push_back(1);
  }
  obs.push_back(0);
  while (static_cast<int>(obs.size()) < n) obs.push_back(1);
  return obs;
}

std::vector<std::vector<long long>> block_vectors(int d, int n) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> a(static_cast<size_t>(d), 2);
  const std::function<void(int, long long)> rec = [&](int i, long long used) {
    if (i == d) {
      out.push_back(a);
      return;
    }
    for (long long v = 2; used + v + 2LL * (d - 1 - i) < n; ++v) {
      a[static_cast<size_t>(i)] = v;
      rec(i + 1, used + v);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace inferfan
