#include "lp.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

// Feasibility of { w : G w >= h } is decided through the Farkas alternative
//
//   maximize h.y  subject to  G^T y = 0,  1.y <= 1,  y >= 0
//
// which is always feasible (y = 0) and bounded. Its optimum is 0 exactly when
// the original system is feasible; the equality-row duals then give a witness
// w, while a positive optimum hands back y as a Gordan/Farkas certificate.
//
// The tableau carries r zero-fixed artificial columns as the initial basis of
// the equality rows. They may leave the basis but never enter, and the ratio
// test treats any nonzero coefficient in an artificial row as a zero-ratio
// candidate, which keeps every artificial at value 0 throughout. With Bland's
// rule on the remaining columns the run terminates.

namespace inferfan {
namespace {

template <class T>
struct Scalar;

template <>
struct Scalar<Rat> {
  static bool neg(const Rat& x) { return sgn(x) < 0; }
  static bool pos(const Rat& x) { return sgn(x) > 0; }
  static bool nonzero(const Rat& x) { return sgn(x) != 0; }
};

template <>
struct Scalar<double> {
  static constexpr double eps = 1e-9;
  static bool neg(double x) { return x < -eps; }
  static bool pos(double x) { return x > eps; }
  static bool nonzero(double x) { return std::fabs(x) > eps; }
};

template <class T>
struct Simplex {
  size_t r, m, ncols;  // columns: [0,r) artificial, [r,r+m) y, r+m slack t
  std::vector<std::vector<T>> a;  // (r+1) x ncols
  std::vector<T> rhs;             // r+1
  std::vector<T> zrow;            // reduced costs z_j - c_j
  T zval;
  std::vector<int> basis;
  bool blands;  // exact runs use Bland, float runs use Dantzig
  bool ok = true;

  Simplex(const std::vector<IntVec>& G, const IntVec& h, size_t r_, bool blands_)
      : r(r_), m(G.size()), ncols(r_ + G.size() + 1), blands(blands_) {
    a.assign(r + 1, std::vector<T>(ncols, T(0)));
    rhs.assign(r + 1, T(0));
    zrow.assign(ncols, T(0));
    zval = T(0);
    basis.resize(r + 1);
    for (size_t i = 0; i < r; ++i) {
      a[i][i] = T(1);
      basis[i] = (int)i;
    }
    for (size_t j = 0; j < m; ++j) {
      for (size_t i = 0; i < r; ++i) a[i][r + j] = T((long)G[j][i]);
      a[r][r + j] = T(1);
      zrow[r + j] = T(-(long)h[j]);
    }
    a[r][r + m] = T(1);
    rhs[r] = T(1);
    basis[r] = (int)(r + m);
  }

  void pivot(size_t prow, size_t pcol) {
    T piv = a[prow][pcol];
    for (size_t j = 0; j < ncols; ++j) a[prow][j] /= piv;
    rhs[prow] /= piv;
    for (size_t i = 0; i <= r; ++i) {
      if (i == prow) continue;
      T f = a[i][pcol];
      if (!Scalar<T>::nonzero(f)) continue;
      for (size_t j = 0; j < ncols; ++j) a[i][j] -= f * a[prow][j];
      rhs[i] -= f * rhs[prow];
    }
    T zc = zrow[pcol];
    if (Scalar<T>::nonzero(zc)) {
      for (size_t j = 0; j < ncols; ++j) zrow[j] -= zc * a[prow][j];
      zval -= zc * rhs[prow];
    }
    basis[prow] = (int)pcol;
  }

  // Returns false if the iteration cap was hit (only relevant for the float
  // pass; the exact pass throws instead, see run()).
  bool run(size_t itcap) {
    for (size_t it = 0; it < itcap; ++it) {
      size_t e = ncols;
      if (blands) {
        for (size_t j = r; j < ncols; ++j)
          if (Scalar<T>::neg(zrow[j])) {
            e = j;
            break;
          }
      } else {
        T best = T(0);
        for (size_t j = r; j < ncols; ++j)
          if (Scalar<T>::neg(zrow[j]) && zrow[j] < best) {
            best = zrow[j];
            e = j;
          }
      }
      if (e == ncols) return true;  // optimal

      size_t prow = r + 1;
      bool have = false;
      T bestratio = T(0);
      for (size_t i = 0; i <= r; ++i) {
        T coef = a[i][e];
        bool art = basis[i] < (int)r;
        T ratio;
        if (art) {
          if (!Scalar<T>::nonzero(coef)) continue;
          ratio = T(0);
        } else {
          if (!Scalar<T>::pos(coef)) continue;
          ratio = rhs[i] / coef;
        }
        if (!have || ratio < bestratio ||
            (!(bestratio < ratio) && basis[i] < basis[prow])) {
          have = true;
          bestratio = ratio;
          prow = i;
        }
      }
      if (!have) return false;  // unbounded: impossible for this LP shape
      pivot(prow, e);
    }
    return false;
  }
};

// Exact basic solution / duals for a given basis column set. Used to certify
// the float pass. Returns nothing when the basis is singular or fails every
// exact check.
std::optional<LpDecision> certify_basis(const std::vector<IntVec>& G, const IntVec& h,
                                        size_t r, const std::vector<int>& basis) {
  size_t n = r + 1, m = G.size();
  auto colvec = [&](int c) {
    RatVec v(n, Rat(0));
    if (c < (int)r) {
      v[c] = 1;
    } else if (c < (int)(r + m)) {
      size_t j = c - r;
      for (size_t i = 0; i < r; ++i) v[i] = Rat((long)G[j][i]);
      v[r] = 1;
    } else {
      v[r] = 1;
    }
    return v;
  };

  // M x = rhs and M^T pi = c_B by one elimination each; M is (r+1)^2.
  std::vector<RatVec> M(n);
  for (size_t k = 0; k < n; ++k) M[k] = colvec(basis[k]);

  auto solve = [&](bool transpose, const RatVec& b) -> std::optional<RatVec> {
    std::vector<RatVec> A(n, RatVec(n + 1, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = 0; k < n; ++k) A[i][k] = transpose ? M[i][k] : M[k][i];
      A[i][n] = b[i];
    }
    for (size_t col = 0; col < n; ++col) {
      size_t p = col;
      while (p < n && sgn(A[p][col]) == 0) ++p;
      if (p == n) return std::nullopt;
      std::swap(A[col], A[p]);
      for (size_t i = 0; i < n; ++i) {
        if (i == col || sgn(A[i][col]) == 0) continue;
        Rat f = A[i][col] / A[col][col];
        for (size_t k = col; k <= n; ++k) A[i][k] -= f * A[col][k];
      }
    }
    RatVec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = A[i][n] / A[i][i];
    return x;
  };

  RatVec b(n, Rat(0));
  b[r] = 1;
  auto xb = solve(false, b);
  if (!xb) return std::nullopt;

  // Primal candidate: a Farkas certificate if the basic solution is a
  // feasible y with positive objective.
  {
    RatVec y(m, Rat(0));
    bool okprim = true;
    for (size_t k = 0; k < n && okprim; ++k) {
      int c = basis[k];
      if (sgn((*xb)[k]) < 0) okprim = false;
      if (c < (int)r && sgn((*xb)[k]) != 0) okprim = false;
      if (c >= (int)r && c < (int)(r + m)) y[c - r] = (*xb)[k];
    }
    if (okprim) {
      Rat obj(0);
      for (size_t j = 0; j < m; ++j)
        if (sgn(y[j]) != 0) obj += y[j] * Rat((long)h[j]);
      if (sgn(obj) > 0) {
        bool zero = true;
        for (size_t i = 0; i < r && zero; ++i) {
          Rat s(0);
          for (size_t j = 0; j < m; ++j)
            if (sgn(y[j]) != 0) s += y[j] * Rat((long)G[j][i]);
          if (sgn(s) != 0) zero = false;
        }
        if (zero) {
          LpDecision d;
          d.feasible = false;
          d.farkas = std::move(y);
          return d;
        }
      }
    }
  }

  // Dual candidate: equality-row duals as a witness.
  {
    RatVec cb(n, Rat(0));
    for (size_t k = 0; k < n; ++k) {
      int c = basis[k];
      if (c >= (int)r && c < (int)(r + m)) cb[k] = Rat((long)h[c - r]);
    }
    auto pi = solve(true, cb);
    if (pi) {
      RatVec w(pi->begin(), pi->begin() + r);
      bool feas = true;
      for (size_t j = 0; j < m && feas; ++j)
        if (dotq(w, G[j]) < Rat((long)h[j])) feas = false;
      if (feas) {
        LpDecision d;
        d.feasible = true;
        d.witness = std::move(w);
        return d;
      }
    }
  }
  return std::nullopt;
}

LpDecision exact_solve(const std::vector<IntVec>& G, const IntVec& h, size_t r) {
  Simplex<Rat> s(G, h, r, true);
  if (!s.run(200000)) throw std::logic_error("lp: exact simplex did not terminate");
  LpDecision d;
  if (sgn(s.zval) > 0) {
    d.feasible = false;
    d.farkas.assign(G.size(), Rat(0));
    for (size_t i = 0; i <= r; ++i) {
      int c = s.basis[i];
      if (c >= (int)r && c < (int)(r + G.size())) d.farkas[c - r] = s.rhs[i];
    }
  } else {
    d.feasible = true;
    d.witness.assign(s.zrow.begin(), s.zrow.begin() + r);
  }
  if (!lp_check(G, h, d)) throw std::logic_error("lp: extraction failed certification");
  return d;
}

}  // namespace

bool lp_check(const std::vector<IntVec>& G, const IntVec& h, const LpDecision& d) {
  size_t m = G.size();
  if (d.feasible) {
    for (size_t j = 0; j < m; ++j)
      if (dotq(d.witness, G[j]) < Rat((long)h[j])) return false;
    return true;
  }
  if (d.farkas.size() != m) return false;
  Rat obj(0);
  for (size_t j = 0; j < m; ++j) {
    if (sgn(d.farkas[j]) < 0) return false;
    if (sgn(d.farkas[j]) != 0) obj += d.farkas[j] * Rat((long)h[j]);
  }
  if (sgn(obj) <= 0) return false;
  size_t r = m ? G[0].size() : 0;
  for (size_t i = 0; i < r; ++i) {
    Rat s(0);
    for (size_t j = 0; j < m; ++j)
      if (sgn(d.farkas[j]) != 0) s += d.farkas[j] * Rat((long)G[j][i]);
    if (sgn(s) != 0) return false;
  }
  return true;
}

LpDecision lp_feasible(const std::vector<IntVec>& G, const IntVec& h, size_t r) {
  LpDecision d;
  if (G.empty()) {
    d.feasible = true;
    d.witness.assign(r, Rat(0));
    return d;
  }
  for (const auto& row : G)
    if (row.size() != r) throw std::logic_error("lp: row dimension mismatch");

  if (G.size() >= 10) {
    Simplex<double> f(G, h, r, false);
    f.run(20 * (G.size() + r + 2) + 200);
    if (auto cert = certify_basis(G, h, r, f.basis)) return *cert;
  }
  return exact_solve(G, h, r);
}

}  // namespace inferfan
