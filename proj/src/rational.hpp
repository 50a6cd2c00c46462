#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace inferfan {

using Int = mpz_class;
using Rat = mpq_class;
using Coord = long long;

// Integer lattice point or integer direction. Comparisons are lexicographic
// (std::vector's operator<), which is the ordering used everywhere for
// canonical forms and tie-breaking.
using IntVec = std::vector<Coord>;
using RatVec = std::vector<Rat>;

struct BadInput : std::runtime_error {
  explicit BadInput(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration refused because it would exceed a configured budget. Mapped to
// its own process exit code by the CLI.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

inline int sgn(const Rat& q) { return sgn(q.get_num()); }

// Accepts "p", "-p", "p/q" with q > 0 after normalization. Decimal points are
// rejected on purpose: every numeric surface of this library is exact.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw BadInput("empty rational");
  for (char c : s) {
    bool ok = (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/';
    if (!ok) throw BadInput("bad rational '" + s + "' (decimals not accepted)");
  }
  Rat q;
  if (q.set_str(s, 10) != 0) throw BadInput("bad rational '" + s + "'");
  if (q.get_den() == 0) throw BadInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline std::string int_str(const Int& z) { return z.get_str(); }

// All lattice data in this library is small (single coordinates fit well
// within 32 bits), so products fit in __int128 with huge margin.
inline __int128 dot128(const IntVec& a, const IntVec& b) {
  __int128 acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += (__int128)a[i] * b[i];
  return acc;
}

inline Rat dotq(const RatVec& a, const IntVec& b) {
  Rat acc = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) acc += a[i] * Rat((long)b[i]);
  }
  return acc;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IntVec neg(const IntVec& a) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline Coord gcdll(Coord a, Coord b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    Coord t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// gcd of all entries, nonnegative; 0 for the zero vector.
inline Coord content(const IntVec& a) {
  Coord g = 0;
  for (Coord c : a) g = gcdll(g, c);
  return g;
}

// Divides out the content. Zero vector stays zero. The sign is kept, so
// (2,-4) -> (1,-2).
inline IntVec primitive(const IntVec& a) {
  Coord g = content(a);
  if (g == 0) return a;
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

// Canonical representative of {v, -v}: first nonzero entry positive.
inline IntVec lex_positive(IntVec a) {
  for (Coord c : a) {
    if (c > 0) return a;
    if (c < 0) return neg(a);
  }
  return a;
}

inline bool is_zero(const IntVec& a) {
  for (Coord c : a)
    if (c != 0) return false;
  return true;
}

struct IntVecHash {
  size_t operator()(const IntVec& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (Coord c : v) {
      h ^= (size_t)(unsigned long long)c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct I32VecHash {
  size_t operator()(const std::vector<int32_t>& v) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int32_t c : v) {
      h ^= (size_t)(uint32_t)c;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace inferfan
