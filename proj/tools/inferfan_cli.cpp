#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "inferfan.h"

namespace {

struct StringOut {
  char* p = nullptr;
  ~StringOut() { ifn_string_free(p); }
};

struct ModelHandle {
  ifn_model* m = nullptr;
  ~ModelHandle() { ifn_model_free(m); }
};

// Flags shared by every subcommand that needs a model.
struct ModelOpts {
  long long hmm_n = 0;
  long long states = 2, symbols = 2;
  std::vector<long long> lower;      // d n
  std::vector<long long> alignpair;  // n1 n2
  std::string in_path;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option_group("model source", "exactly one source");
    g->add_option("--hmm", hmm_n, "homogeneous HMM with this many positions");
    g->add_option("--lower", lower, "two-chain model: d n")->expected(2);
    g->add_option("--alignpair", alignpair, "pair model: n1 n2")->expected(2);
    g->add_option("--in", in_path, "model JSON file");
    g->require_option(1);
    cmd->add_option("--states", states, "hidden symbols for --hmm (default 2)");
    cmd->add_option("--symbols", symbols, "observed symbols for --hmm (default 2)");
  }

  int build(ifn_model** out) const {
    if (hmm_n > 0) return ifn_model_hmm(hmm_n, states, symbols, out);
    if (!lower.empty()) return ifn_model_lowerbound(lower[0], lower[1], out);
    if (!alignpair.empty()) return ifn_model_alignment(alignpair[0], alignpair[1], out);
    std::ifstream f(in_path);
    if (!f) {
      std::fprintf(stderr, "error: cannot read %s\n", in_path.c_str());
      return IFN_BAD_INPUT;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ifn_model_from_json(ss.str().c_str(), out);
  }
};

int report(int rc) {
  if (rc != IFN_OK) std::fprintf(stderr, "error: %s\n", ifn_last_error());
  return rc;
}

int emit(int rc, const StringOut& s) {
  if (rc == IFN_OK && s.p) {
    std::fputs(s.p, stdout);
    const size_t len = std::strlen(s.p);
    if (len == 0 || s.p[len - 1] != '\n') std::fputc('\n', stdout);
  }
  return report(rc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact census of inference functions of graphical models"};
  app.require_subcommand(1);

  ModelOpts m_model, m_viterbi, m_np, m_count;

  auto* c_model = app.add_subcommand("model", "build a model and print its JSON");
  m_model.attach(c_model);
  std::string out_path;
  c_model->add_option("--out", out_path, "write the JSON here instead of stdout");
  bool info = false;
  c_model->add_flag("--info", info, "print a one-line summary instead of JSON");

  auto* c_vit = app.add_subcommand("viterbi", "best explanation of an observation");
  m_viterbi.attach(c_vit);
  std::string tau, vtext;
  c_vit->add_option("--tau", tau, "observation string")->required();
  c_vit->add_option("--v", vtext, "d log-parameters, rationals like -1/2")->required();

  auto* c_np = app.add_subcommand("np", "observation polytope with witnesses");
  m_np.attach(c_np);
  std::string np_tau;
  c_np->add_option("--tau", np_tau, "observation string")->required();

  auto* c_count = app.add_subcommand("count", "census of inference functions");
  m_count.attach(c_count);
  uint64_t cap = 1u << 20;
  int jobs = 1;
  uint64_t samples = 0, seed = 1;
  c_count->add_option("--cap", cap, "largest observation space to enumerate");
  c_count->add_option("--jobs", jobs, "worker threads");
  c_count->add_option("--sample", samples, "Monte Carlo census with this many directions");
  c_count->add_option("--seed", seed, "seed for --sample (default 1)");

  auto* c_bound = app.add_subcommand("bound", "bound report line");
  long long bm = -1, bM = -1, bd = 0;
  c_bound->add_option("--m", bm, "number of edge classes");
  c_bound->add_option("--M", bM, "model complexity");
  c_bound->add_option("--d", bd, "parameter count")->required();

  auto* c_arr = app.add_subcommand("arrangement", "chamber census of a hyperplane arrangement");
  long long ad = 0, an = 0;
  bool rays = false;
  c_arr->add_option("--d", ad, "ambient dimension")->required();
  c_arr->add_option("--n", an, "coordinate sum bound")->required();
  c_arr->add_flag("--rays", rays, "also report the maximum extreme rays per chamber");

  auto* c_pp = app.add_subcommand("primprob", "primitivity probability by Monte Carlo");
  long long pd = 0, pm = 0, pbox = 1000000;
  uint64_t psamples = 100000, pseed = 1;
  c_pp->add_option("--d", pd, "vector length")->required();
  c_pp->add_option("--m", pm, "number of vectors")->required();
  c_pp->add_option("--box", pbox, "entries drawn from [0, box] (default 10^6)");
  c_pp->add_option("--samples", psamples, "draws (default 10^5)");
  c_pp->add_option("--seed", pseed, "stream seed (default 1)");
  bool zeta = false;
  c_pp->add_flag("--zeta", zeta, "also print the exact reference bracket");

  auto* c_align = app.add_subcommand("align", "two-parameter sequence alignment");
  c_align->require_subcommand(1);

  auto* a_poly = c_align->add_subcommand("polygon", "alignment polygon of a pair");
  std::string s1, s2, svg_path;
  a_poly->add_option("--s1", s1, "first binary sequence")->required();
  a_poly->add_option("--s2", s2, "second binary sequence")->required();
  a_poly->add_option("--svg", svg_path, "also write an SVG drawing here");

  auto* a_best = c_align->add_subcommand("best", "optimal alignment for given penalties");
  std::string bs1, bs2, alpha, beta;
  a_best->add_option("--s1", bs1)->required();
  a_best->add_option("--s2", bs2)->required();
  a_best->add_option("--alpha", alpha, "mismatch penalty, rational")->required();
  a_best->add_option("--beta", beta, "space penalty, rational")->required();

  auto* a_count = c_align->add_subcommand("count", "census over all pairs of one length");
  long long cn = 0;
  a_count->add_option("--n", cn, "sequence length (at most 10)")->required();

  auto* a_mean = c_align->add_subcommand("meaningful", "chambers meeting meaningful penalties");
  long long mn = 0;
  bool le = false;
  a_mean->add_option("--n", mn, "sequence length (at most 10)")->required();
  a_mean->add_flag("--le", le, "restrict to alpha <= beta");

  auto* a_slopes = c_align->add_subcommand("slopes", "slopes realizable at one length");
  long long sn = 0;
  a_slopes->add_option("--n", sn, "sequence length")->required();

  auto* a_fam = c_align->add_subcommand("family", "pair carrying an edge of slope u/v");
  long long fu = 0, fv = 0, fn = 0;
  a_fam->add_option("--u", fu)->required();
  a_fam->add_option("--v", fv)->required();
  a_fam->add_option("--n", fn)->required();

  const auto t0 = std::chrono::steady_clock::now();
  int rc = IFN_OK;
  try {
    app.parse(argc, argv);

    if (*c_model) {
      ModelHandle h;
      rc = m_model.build(&h.m);
      if (rc == IFN_OK) {
        StringOut s;
        rc = info ? ifn_model_info(h.m, &s.p) : ifn_model_to_json(h.m, &s.p);
        if (rc == IFN_OK && !out_path.empty()) {
          std::ofstream f(out_path);
          f << s.p;
          rc = f.good() ? IFN_OK : IFN_ERROR;
          if (rc != IFN_OK) std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
        } else {
          rc = emit(rc, s);
        }
      } else {
        report(rc);
      }
    } else if (*c_vit) {
      ModelHandle h;
      rc = m_viterbi.build(&h.m);
      if (rc == IFN_OK) {
        StringOut s;
        rc = emit(ifn_viterbi(h.m, tau.c_str(), vtext.c_str(), &s.p), s);
      } else {
        report(rc);
      }
    } else if (*c_np) {
      ModelHandle h;
      rc = m_np.build(&h.m);
      if (rc == IFN_OK) {
        StringOut s;
        rc = emit(ifn_polytope(h.m, np_tau.c_str(), &s.p), s);
      } else {
        report(rc);
      }
    } else if (*c_count) {
      ModelHandle h;
      rc = m_count.build(&h.m);
      if (rc == IFN_OK) {
        StringOut s;
        rc = samples > 0 ? ifn_sample(h.m, samples, seed, cap, &s.p)
                         : ifn_count(h.m, cap, jobs, &s.p);
        rc = emit(rc, s);
      } else {
        report(rc);
      }
    } else if (*c_bound) {
      StringOut s;
      rc = emit(ifn_bound(bm, bM, bd, &s.p), s);
    } else if (*c_arr) {
      StringOut s;
      rc = emit(ifn_arrangement(ad, an, rays ? 1 : 0, &s.p), s);
    } else if (*c_pp) {
      StringOut s;
      rc = emit(ifn_primitive_probability(pd, pm, pbox, psamples, pseed, &s.p), s);
      if (rc == IFN_OK && zeta) {
        StringOut z;
        rc = emit(ifn_zeta_reference(pd, pm, &z.p), z);
      }
    } else if (*a_poly) {
      StringOut s;
      rc = emit(ifn_align_polygon(s1.c_str(), s2.c_str(), &s.p), s);
      if (rc == IFN_OK && !svg_path.empty()) {
        StringOut svg;
        rc = ifn_align_polygon_svg(s1.c_str(), s2.c_str(), &svg.p);
        if (rc == IFN_OK) {
          std::ofstream f(svg_path);
          f << svg.p;
          if (!f.good()) {
            std::fprintf(stderr, "error: cannot write %s\n", svg_path.c_str());
            rc = IFN_ERROR;
          }
        } else {
          report(rc);
        }
      }
    } else if (*a_best) {
      StringOut s;
      rc = emit(ifn_align_best(bs1.c_str(), bs2.c_str(), alpha.c_str(), beta.c_str(), &s.p), s);
    } else if (*a_count) {
      StringOut s;
      rc = emit(ifn_align_count(cn, &s.p), s);
    } else if (*a_mean) {
      StringOut s;
      rc = emit(ifn_align_meaningful(mn, le ? 1 : 0, &s.p), s);
    } else if (*a_slopes) {
      StringOut s;
      rc = emit(ifn_align_slopes(sn, &s.p), s);
    } else if (*a_fam) {
      StringOut s;
      rc = emit(ifn_slope_family(fu, fv, fn, &s.p), s);
    }
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    rc = IFN_OK;
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    rc = IFN_BAD_INPUT;
  }

  const auto t1 = std::chrono::steady_clock::now();
  std::fprintf(stderr, "wall_ms=%lld\n",
               static_cast<long long>(
                   std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count()));
  return rc;
}
