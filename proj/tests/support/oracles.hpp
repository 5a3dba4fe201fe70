#pragma once

// Brute-force oracles. They use only the raw order relation (leq) and plain
// loops, never the library algorithms they are compared against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "darboux.hpp"

namespace oracle {

using namespace darboux;
using Decimal = boost::multiprecision::cpp_dec_float_100;

inline bool monotone(const Assignment& f, const Poset& s, const Poset& t) {
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      if (s.leq(x, y) && !t.leq(f[x], f[y])) return false;
  return true;
}

/// Every total monotone map extending psi, by counting through all
/// |target|^|source| assignments.
inline std::vector<Assignment> extensions(const PartialMap& psi) {
  const Poset& s = psi.source();
  const Poset& t = psi.target();
  const std::size_t n = s.size(), m = t.size();
  std::vector<Assignment> out;
  if (m == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  Assignment f(n, 0);
  for (;;) {
    bool agrees = true;
    for (Element x = 0; x < n && agrees; ++x)
      if (psi.defined(x) && f[x] != psi(x)) agrees = false;
    if (agrees && monotone(f, s, t)) out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Pointwise least (or greatest) element among the maps, if every coordinate
/// has one.
inline std::optional<Assignment> pointwise_extreme(const std::vector<Assignment>& maps, const Poset& t,
                                                   std::size_t n, bool least) {
  if (maps.empty()) return std::nullopt;
  Assignment out(n);
  for (Element x = 0; x < n; ++x) {
    std::optional<Element> best;
    for (const Assignment& f : maps) {
      bool extreme = true;
      for (const Assignment& g : maps)
        if (least ? !t.leq(f[x], g[x]) : !t.leq(g[x], f[x])) extreme = false;
      if (extreme) {
        best = f[x];
        break;
      }
    }
    if (!best) return std::nullopt;
    out[x] = *best;
  }
  return out;
}

/// Least upper bound of a set of target elements by scanning.
inline std::optional<Element> sup(const Poset& t, const std::vector<Element>& s) {
  for (Element c = 0; c < t.size(); ++c) {
    bool upper = std::all_of(s.begin(), s.end(), [&](Element a) { return t.leq(a, c); });
    if (!upper) continue;
    bool least = true;
    for (Element d = 0; d < t.size(); ++d)
      if (!t.leq(c, d) && std::all_of(s.begin(), s.end(), [&](Element a) { return t.leq(a, d); })) least = false;
    if (least) return c;
  }
  return std::nullopt;
}

inline std::optional<Element> inf(const Poset& t, const std::vector<Element>& s) {
  for (Element c = 0; c < t.size(); ++c) {
    bool lower = std::all_of(s.begin(), s.end(), [&](Element a) { return t.leq(c, a); });
    if (!lower) continue;
    bool greatest = true;
    for (Element d = 0; d < t.size(); ++d)
      if (!t.leq(d, c) && std::all_of(s.begin(), s.end(), [&](Element a) { return t.leq(d, a); }))
        greatest = false;
    if (greatest) return c;
  }
  return std::nullopt;
}

/// Down-sets as bit masks, in increasing mask order.
inline std::vector<std::uint64_t> down_sets(const Poset& o) {
  const std::size_t n = o.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
    bool closed = true;
    for (Element x = 0; x < n && closed; ++x)
      if ((a >> x) & 1u)
        for (Element y = 0; y < n; ++y)
          if (o.leq(y, x) && !((a >> y) & 1u)) closed = false;
    if (closed) out.push_back(a);
  }
  return out;
}

/// Subsets A with A = lower bounds of the upper bounds of A.
inline std::vector<std::uint64_t> cuts(const Poset& o) {
  const std::size_t n = o.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
    std::uint64_t ub = 0, lub = 0;
    for (Element y = 0; y < n; ++y) {
      bool above = true;
      for (Element x = 0; x < n; ++x)
        if (((a >> x) & 1u) && !o.leq(x, y)) above = false;
      if (above) ub |= std::uint64_t(1) << y;
    }
    for (Element z = 0; z < n; ++z) {
      bool below = true;
      for (Element y = 0; y < n; ++y)
        if (((ub >> y) & 1u) && !o.leq(z, y)) below = false;
      if (below) lub |= std::uint64_t(1) << z;
    }
    if (lub == a) out.push_back(a);
  }
  return out;
}

inline std::uint64_t mask_of(const Subset& s) {
  std::uint64_t m = 0;
  for (std::size_t i = s.find_first(); i != Subset::npos; i = s.find_next(i)) m |= std::uint64_t(1) << i;
  return m;
}

/// All automorphisms by trying every permutation.
inline std::vector<Assignment> automorphisms(const Poset& p) {
  Assignment perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Assignment> out;
  do {
    bool ok = true;
    for (Element x = 0; x < p.size() && ok; ++x)
      for (Element y = 0; y < p.size() && ok; ++y)
        if (p.leq(x, y) != p.leq(perm[x], perm[y])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline bool isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) return false;
  Assignment perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Element x = 0; x < p.size() && ok; ++x)
      for (Element y = 0; y < p.size() && ok; ++y)
        if (p.leq(x, y) != q.leq(perm[x], perm[y])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Decimal decimal(const Rational& q) {
  return Decimal(q.get_num().get_str()) / Decimal(q.get_den().get_str());
}

inline bool encloses(const Enclosure& e, const Decimal& v) { return decimal(e.lo) <= v && v <= decimal(e.hi); }

inline Decimal sqrt_of(long n) { return boost::multiprecision::sqrt(Decimal(n)); }

}  // namespace oracle
