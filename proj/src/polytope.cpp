#include "polytope.hpp"

#include <map>
#include <sstream>

#include "minkowski.hpp"

namespace inferfan {

NewtonPolytope np_point(int dim, IntVec pt, Witness w) {
  NewtonPolytope p;
  p.poly.dim = dim;
  p.poly.verts.push_back(std::move(pt));
  p.wit.push_back(std::move(w));
  return p;
}

NewtonPolytope np_add(const NewtonPolytope& a, const NewtonPolytope& b) {
  // The zero polynomial has no polytope and is the additive identity.
  if (a.poly.verts.empty()) return b;
  if (b.poly.verts.empty()) return a;
  if (a.poly.dim != b.poly.dim) throw BadInput("np_add dimension mismatch");

  NewtonPolytope out;
  if (a.tracked() && b.tracked()) {
    std::map<IntVec, Witness> best;
    auto feed = [&](const NewtonPolytope& p) {
      for (size_t i = 0; i < p.poly.verts.size(); ++i) {
        auto it = best.find(p.poly.verts[i]);
        if (it == best.end() || p.wit[i] < it->second) best[p.poly.verts[i]] = p.wit[i];
      }
    };
    feed(a);
    feed(b);
    std::vector<IntVec> pts;
    for (auto& [p, w] : best) pts.push_back(p);
    out.poly = hull_reduce(a.poly.dim, std::move(pts));
    for (const auto& v : out.poly.verts) out.wit.push_back(best.at(v));
  } else {
    std::vector<IntVec> pts = a.poly.verts;
    pts.insert(pts.end(), b.poly.verts.begin(), b.poly.verts.end());
    out.poly = hull_reduce(a.poly.dim, std::move(pts));
  }
  return out;
}

NewtonPolytope np_mul(const NewtonPolytope& a, const NewtonPolytope& b) {
  // The zero polynomial annihilates products.
  NewtonPolytope out;
  if (a.poly.verts.empty() || b.poly.verts.empty()) {
    out.poly.dim = a.poly.verts.empty() ? a.poly.dim : b.poly.dim;
    return out;
  }
  if (a.poly.dim != b.poly.dim) throw BadInput("np_mul dimension mismatch");
  bool track = a.tracked() && b.tracked();

  // Single-point factors are translations.
  if (a.poly.verts.size() == 1 || b.poly.verts.size() == 1) {
    const NewtonPolytope& pt = a.poly.verts.size() == 1 ? a : b;
    const NewtonPolytope& poly = a.poly.verts.size() == 1 ? b : a;
    out.poly.dim = a.poly.dim;
    for (size_t i = 0; i < poly.poly.verts.size(); ++i) {
      out.poly.verts.push_back(add(poly.poly.verts[i], pt.poly.verts[0]));
      if (track) {
        Witness w = a.poly.verts.size() == 1 ? a.wit[0] : a.wit[i];
        const Witness& tail = a.poly.verts.size() == 1 ? b.wit[i] : b.wit[0];
        w.insert(w.end(), tail.begin(), tail.end());
        out.wit.push_back(std::move(w));
      }
    }
    return out;  // translation preserves lex order, so verts stay sorted
  }

  MinkSum ms = minkowski_sum_many(a.poly.dim, {a.poly, b.poly}, track);
  out.poly = std::move(ms.sum);
  if (track) {
    for (const auto& ch : ms.choice) {
      Witness w = a.wit[ch[0]];
      const Witness& tail = b.wit[ch[1]];
      w.insert(w.end(), tail.begin(), tail.end());
      out.wit.push_back(std::move(w));
    }
  }
  return out;
}

BoundReport bounds(std::optional<long long> m, std::optional<long long> M, long long d) {
  if (d < 1) throw BadInput("bounds needs d >= 1");
  BoundReport r;
  r.m = m;
  r.M = M;
  r.d = d;
  auto tail_sum = [&](const Int& n) {
    // 2 * sum_{j<d} binom(n, j)
    Int total = 0, term;
    for (long long j = 0; j < d; ++j) {
      mpz_bin_ui(term.get_mpz_t(), n.get_mpz_t(), (unsigned long)j);
      total += term;
    }
    return Int(2 * total);
  };
  if (m) {
    if (*m < 0) throw BadInput("bounds needs m >= 0");
    r.gs = (*m == 0) ? Int(1) : tail_sum(Int(static_cast<long>(*m - 1)));
  }
  if (M) {
    if (*M < 0) throw BadInput("bounds needs M >= 0");
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)(2 * *M + 1), (unsigned long)d);
    r.fif = tail_sum(pw - 1);
    Int num, fac, mp;
    mpz_ui_pow_ui(num.get_mpz_t(), 2, (unsigned long)(d * d - d + 1));
    mpz_fac_ui(fac.get_mpz_t(), (unsigned long)(d - 1));
    mpz_ui_pow_ui(mp.get_mpz_t(), (unsigned long)*M, (unsigned long)(d * (d - 1)));
    Rat dom(num * mp, fac);
    dom.canonicalize();
    r.dominant = dom;
  }
  return r;
}

std::string BoundReport::line() const {
  std::ostringstream os;
  os << "m=" << (m ? std::to_string(*m) : "-");
  os << " M=" << (M ? std::to_string(*M) : "-");
  os << " d=" << d;
  os << " gs=" << (gs ? int_str(*gs) : "-");
  os << " fif=" << (fif ? int_str(*fif) : "-");
  os << " dominant=" << (dominant ? rat_str(*dominant) : "-");
  return os.str();
}

}  // namespace inferfan
