#include "../include/inferfan.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "align.hpp"
#include "counting.hpp"

using namespace inferfan;

struct ifn_model {
  FactorModel m;
};

namespace {

thread_local std::string g_err;

char* dup_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename F>
int guard(F&& f) {
  g_err.clear();
  try {
    f();
    return IFN_OK;
  } catch (const CapExceeded& e) {
    g_err = e.what();
    return IFN_CAP_EXCEEDED;
  } catch (const BadInput& e) {
    g_err = e.what();
    return IFN_BAD_INPUT;
  } catch (const std::exception& e) {
    g_err = e.what();
    return IFN_ERROR;
  }
}

int require(bool ok, const char* what) {
  if (ok) return IFN_OK;
  g_err = what;
  return IFN_BAD_INPUT;
}

RatVec parse_ratvec(const std::string& text) {
  RatVec v;
  std::string tok;
  for (char c : text + " ") {
    if (c == ' ' || c == '\t' || c == ',' || c == '\n') {
      if (!tok.empty()) {
        v.push_back(rat_parse(tok));
        tok.clear();
      }
    } else {
      tok += c;
    }
  }
  return v;
}

std::string np_text(const FactorModel& m, const NewtonPolytope& np) {
  std::ostringstream os;
  os << polytope_text(np.poly);
  for (const auto& w : np.wit) os << "w " << m.hidden_string(w) << "\n";
  return os.str();
}

int check_range(long long v, long long lo, long long hi, const char* what) {
  if (v >= lo && v <= hi) return IFN_OK;
  g_err = std::string(what) + " out of range";
  return IFN_BAD_INPUT;
}

}  // namespace

extern "C" {

const char* ifn_last_error(void) { return g_err.c_str(); }

void ifn_string_free(char* s) { std::free(s); }

void ifn_model_free(ifn_model* m) { delete m; }

int ifn_model_hmm(long long n, long long l, long long lp, ifn_model** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  if (int rc = check_range(n, 1, 1 << 20, "n")) return rc;
  if (int rc = check_range(l, 1, 1 << 10, "l")) return rc;
  if (int rc = check_range(lp, 1, 1 << 10, "lp")) return rc;
  return guard([&] {
    *out = new ifn_model{build_homogeneous_hmm(static_cast<int>(n), static_cast<int>(l),
                                               static_cast<int>(lp))};
  });
}

int ifn_model_lowerbound(long long d, long long n, ifn_model** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  if (int rc = check_range(d, 1, 1 << 10, "d")) return rc;
  if (int rc = check_range(n, 1, 1 << 20, "n")) return rc;
  return guard([&] {
    *out = new ifn_model{build_lowerbound_hmm(static_cast<int>(d), static_cast<int>(n))};
  });
}

int ifn_model_alignment(long long n1, long long n2, ifn_model** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  if (int rc = check_range(n1, 1, 1 << 16, "n1")) return rc;
  if (int rc = check_range(n2, 1, 1 << 16, "n2")) return rc;
  return guard([&] {
    *out = new ifn_model{build_alignment_model(static_cast<int>(n1), static_cast<int>(n2))};
  });
}

int ifn_model_from_json(const char* json, ifn_model** out) {
  if (int rc = require(json && out, "null argument")) return rc;
  return guard([&] { *out = new ifn_model{model_from_json(json)}; });
}

int ifn_model_to_json(const ifn_model* m, char** out) {
  if (int rc = require(m && out, "null argument")) return rc;
  return guard([&] { *out = dup_out(model_to_json(m->m)); });
}

int ifn_model_info(const ifn_model* m, char** out) {
  if (int rc = require(m && out, "null argument")) return rc;
  return guard([&] {
    std::ostringstream os;
    os << "name=" << m->m.name << " kind="
       << (m->m.kind == FactorModel::Kind::PairAlignment ? "pair_alignment" : "factors")
       << " d=" << m->m.d << " hidden_symbols=" << m->m.l()
       << " observed_symbols=" << m->m.lp() << " hidden_vars=" << m->m.hidden_count
       << " observed_vars=" << m->m.observed_count
       << " observations=" << m->m.observation_space();
    *out = dup_out(os.str());
  });
}

int ifn_viterbi(const ifn_model* m, const char* tau, const char* v, char** out) {
  if (int rc = require(m && tau && v && out, "null argument")) return rc;
  return guard([&] {
    const RatVec dir = parse_ratvec(v);
    if (static_cast<int>(dir.size()) != m->m.d)
      throw BadInput("expected " + std::to_string(m->m.d) + " rationals");
    const auto ex = viterbi(m->m, m->m.parse_observation(tau), dir);
    std::ostringstream os;
    os << "h=" << m->m.hidden_string(ex.h) << " exponent=";
    for (size_t i = 0; i < ex.exponent.size(); ++i)
      os << (i ? "," : "") << ex.exponent[i];
    os << " score=" << rat_str(ex.score);
    *out = dup_out(os.str());
  });
}

int ifn_polytope(const ifn_model* m, const char* tau, char** out) {
  if (int rc = require(m && tau && out, "null argument")) return rc;
  return guard([&] {
    *out = dup_out(np_text(m->m, observation_polytope(m->m, m->m.parse_observation(tau))));
  });
}

int ifn_count(const ifn_model* m, uint64_t cap, int jobs, char** out) {
  if (int rc = require(m && out, "null argument")) return rc;
  return guard([&] { *out = dup_out(count_inference_functions(m->m, cap, jobs).record()); });
}

int ifn_sample(const ifn_model* m, uint64_t samples, uint64_t seed, uint64_t cap,
               char** out) {
  if (int rc = require(m && out, "null argument")) return rc;
  return guard(
      [&] { *out = dup_out(sample_inference_functions(m->m, samples, seed, cap).record()); });
}

int ifn_bound(long long m, long long M, long long d, char** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  return guard([&] {
    std::optional<long long> om, oM;
    if (m >= 0) om = m;
    if (M >= 0) oM = M;
    *out = dup_out(bounds(om, oM, d).line());
  });
}

int ifn_arrangement(long long d, long long n, int want_rays, char** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  return guard([&] {
    std::string line = arrangement_chambers(d, n).record();
    if (want_rays)
      line += " max_rays=" + std::to_string(extreme_rays_check(d, n));
    *out = dup_out(line);
  });
}

int ifn_primitive_probability(long long d, long long m, long long box,
                              uint64_t samples, uint64_t seed, char** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  return guard(
      [&] { *out = dup_out(primitive_probability(d, m, box, samples, seed).record()); });
}

int ifn_zeta_reference(long long d, long long m, char** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  return guard([&] {
    const auto [lo, hi] = zeta_reference(d, m);
    *out = dup_out("lo=" + rat_str(lo) + " hi=" + rat_str(hi));
  });
}

int ifn_align_polygon(const char* s1, const char* s2, char** out) {
  if (int rc = require(s1 && s2 && out, "null argument")) return rc;
  return guard([&] { *out = dup_out(polytope_text(alignment_polygon(s1, s2).poly)); });
}

int ifn_align_polygon_svg(const char* s1, const char* s2, char** out) {
  if (int rc = require(s1 && s2 && out, "null argument")) return rc;
  return guard([&] { *out = dup_out(polygon_svg(alignment_polygon(s1, s2).poly)); });
}

int ifn_align_best(const char* s1, const char* s2, const char* alpha, const char* beta,
                   char** out) {
  if (int rc = require(s1 && s2 && alpha && beta && out, "null argument")) return rc;
  return guard([&] {
    const auto a = optimal_alignment(s1, s2, rat_parse(alpha), rat_parse(beta));
    std::ostringstream os;
    os << "row1=" << a.row1 << " row2=" << a.row2 << " exponent=" << a.exponent[0]
       << ',' << a.exponent[1] << ',' << a.exponent[2] << " score=" << rat_str(a.score);
    *out = dup_out(os.str());
  });
}

int ifn_align_count(long long n, char** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  return guard([&] { *out = dup_out(count_alignment_report(n).record()); });
}

int ifn_align_meaningful(long long n, int alpha_le_beta, char** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  return guard([&] {
    std::ostringstream os;
    os << "n=" << n << " alpha_le_beta=" << (alpha_le_beta ? 1 : 0)
       << " meaningful=" << meaningful_cone_count(n, alpha_le_beta != 0);
    *out = dup_out(os.str());
  });
}

int ifn_align_slopes(long long n, char** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  return guard([&] {
    const auto fams = slope_families(n);
    std::ostringstream os;
    os << "n=" << n << " families=" << fams.size();
    for (size_t i = 0; i < fams.size(); ++i)
      os << (i ? "," : " list=") << fams[i].first << '/' << fams[i].second;
    *out = dup_out(os.str());
  });
}

int ifn_slope_family(long long u, long long v, long long n, char** out) {
  if (int rc = require(out != nullptr, "null output pointer")) return rc;
  return guard([&] {
    const auto f = slope_family(u, v, n);
    std::ostringstream os;
    os << "u=" << f.u << " v=" << f.v << " n=" << f.n << " a=" << f.a << " b=" << f.b
       << " s1=" << f.s1 << " s2=" << f.s2;
    *out = dup_out(os.str());
  });
}

}  // extern "C"
