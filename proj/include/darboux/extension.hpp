#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "darboux/error.hpp"
#include "darboux/poset.hpp"

namespace darboux {

/// A monotone map defined on a subset of its source.
class PartialMap {
 public:
  PartialMap() = default;

  /// values[x] is the image of x, or nullopt off the domain. Throws
  /// NotMonotone if the assignment does not preserve the induced order.
  PartialMap(Poset source, Poset target, std::vector<std::optional<Element>> values)
      : source_(std::move(source)), target_(std::move(target)), values_(std::move(values)) {
    if (values_.size() != source_.size())
      fail(ErrorCode::invalid_argument, "partial map size does not match its source");
    for (Element x = 0; x < values_.size(); ++x)
      if (values_[x] && *values_[x] >= target_.size())
        fail(ErrorCode::unknown_element, "partial map value out of range");
    for (Element x = 0; x < values_.size(); ++x) {
      if (!values_[x]) continue;
      const Subset& up = source_.up_set(x);
      for (Element y = up.find_first(); y != Subset::npos; y = up.find_next(y))
        if (values_[y] && !target_.leq(*values_[x], *values_[y]))
          fail(ErrorCode::not_monotone, "partial map is not monotone: '" + source_.name(x) +
                                            "' <= '" + source_.name(y) + "' but '" +
                                            target_.name(*values_[x]) + "' </= '" +
                                            target_.name(*values_[y]) + "'");
    }
  }

  static PartialMap empty(Poset source, Poset target) {
    std::vector<std::optional<Element>> v(source.size());
    return PartialMap(std::move(source), std::move(target), std::move(v));
  }

  static PartialMap total(const MonotoneMap& f) {
    std::vector<std::optional<Element>> v(f.assignment.begin(), f.assignment.end());
    return PartialMap(f.source, f.target, std::move(v));
  }

  const Poset& source() const { return source_; }
  const Poset& target() const { return target_; }
  const std::vector<std::optional<Element>>& values() const { return values_; }

  bool defined(Element x) const { return values_[x].has_value(); }
  Element operator()(Element x) const { return *values_[x]; }

  Subset domain() const {
    Subset d(values_.size());
    for (Element x = 0; x < values_.size(); ++x)
      if (values_[x]) d.set(x);
    return d;
  }

  Subset image() const {
    Subset im(target_.size());
    for (const auto& v : values_)
      if (v) im.set(*v);
    return im;
  }

  bool is_total() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.has_value(); });
  }

  PartialMap restrict(const Subset& keep) const {
    auto v = values_;
    for (Element x = 0; x < v.size(); ++x)
      if (!keep.test(x)) v[x].reset();
    return PartialMap(source_, target_, std::move(v));
  }

  friend bool operator==(const PartialMap& a, const PartialMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.values_ == b.values_;
  }

 private:
  Poset source_;
  Poset target_;
  std::vector<std::optional<Element>> values_;
};

/// (psi2 o psi1)(x) = psi2(psi1(x)) wherever both steps are defined.
inline PartialMap compose(const PartialMap& psi2, const PartialMap& psi1) {
  if (!(psi1.target() == psi2.source()))
    fail(ErrorCode::invalid_argument, "partial maps are not composable");
  std::vector<std::optional<Element>> v(psi1.source().size());
  for (Element x = 0; x < v.size(); ++x)
    if (psi1.defined(x) && psi2.defined(psi1(x))) v[x] = psi2(psi1(x));
  return PartialMap(psi1.source(), psi2.target(), std::move(v));
}

/// Post-composition with a total monotone map.
inline PartialMap compose(const MonotoneMap& g, const PartialMap& psi) {
  std::vector<std::optional<Element>> v(psi.source().size());
  for (Element x = 0; x < v.size(); ++x)
    if (psi.defined(x)) v[x] = g(psi(x));
  return PartialMap(psi.source(), g.target, std::move(v));
}

inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  return {f.source, g.target, compose(g.assignment, f.assignment)};
}

struct ExtensionPair {
  MonotoneMap lower;
  MonotoneMap upper;
};

/// x -> sup {psi(y) : y <= x, y in dom}; the sup of the empty set is the
/// bottom of the target. Only the suprema actually needed are required to
/// exist; a missing one raises NotCompleteLattice.
inline MonotoneMap lower_extension(const PartialMap& psi) {
  const Poset& s = psi.source();
  const Poset& t = psi.target();
  Assignment out(s.size());
  for (Element x = 0; x < s.size(); ++x) {
    if (psi.defined(x)) {
      out[x] = psi(x);
      continue;
    }
    Subset bounds = t.all();
    const Subset& below = s.down_set(x);
    for (Element y = below.find_first(); y != Subset::npos; y = below.find_next(y))
      if (psi.defined(y)) bounds &= t.up_set(psi(y));
    auto sup = least_in(t, bounds);
    if (!sup)
      fail(ErrorCode::not_complete_lattice,
           "target has no supremum for the values below '" + s.name(x) + "'");
    out[x] = *sup;
  }
  return {s, t, std::move(out)};
}

/// x -> inf {psi(y) : x <= y, y in dom}; the inf of the empty set is the top.
inline MonotoneMap upper_extension(const PartialMap& psi) {
  const Poset& s = psi.source();
  const Poset& t = psi.target();
  Assignment out(s.size());
  for (Element x = 0; x < s.size(); ++x) {
    if (psi.defined(x)) {
      out[x] = psi(x);
      continue;
    }
    Subset bounds = t.all();
    const Subset& above = s.up_set(x);
    for (Element y = above.find_first(); y != Subset::npos; y = above.find_next(y))
      if (psi.defined(y)) bounds &= t.down_set(psi(y));
    auto inf = greatest_in(t, bounds);
    if (!inf)
      fail(ErrorCode::not_complete_lattice,
           "target has no infimum for the values above '" + s.name(x) + "'");
    out[x] = *inf;
  }
  return {s, t, std::move(out)};
}

inline ExtensionPair extensions(const PartialMap& psi) {
  return {lower_extension(psi), upper_extension(psi)};
}

inline Subset darboux_set(const ExtensionPair& ex) {
  Subset d(ex.lower.assignment.size());
  for (Element x = 0; x < d.size(); ++x)
    if (ex.lower(x) == ex.upper(x)) d.set(x);
  return d;
}

inline Subset darboux_set(const PartialMap& psi) { return darboux_set(extensions(psi)); }

/// The common value of the two extensions on the Darboux set.
inline PartialMap darboux_extension(const PartialMap& psi, const ExtensionPair& ex) {
  std::vector<std::optional<Element>> v(psi.source().size());
  for (Element x = 0; x < v.size(); ++x)
    if (ex.lower(x) == ex.upper(x)) v[x] = ex.lower(x);
  return PartialMap(psi.source(), psi.target(), std::move(v));
}

inline PartialMap darboux_extension(const PartialMap& psi) {
  return darboux_extension(psi, extensions(psi));
}

/// Elements sandwiched between two domain elements.
inline Subset bounded_set(const PartialMap& psi) {
  const Poset& s = psi.source();
  Subset above_dom = s.none();
  Subset below_dom = s.none();
  for (Element y = 0; y < s.size(); ++y) {
    if (!psi.defined(y)) continue;
    above_dom |= s.up_set(y);
    below_dom |= s.down_set(y);
  }
  return above_dom & below_dom;
}

inline bool is_encompassing(const PartialMap& psi) { return bounded_set(psi).all(); }

inline Subset bounded_darboux_set(const PartialMap& psi) {
  return bounded_set(psi) & darboux_set(psi);
}

/// Pointwise comparison of two total maps into the same target.
inline bool pointwise_leq(const Assignment& f, const Assignment& g, const Poset& target) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!target.leq(f[i], g[i])) return false;
  return true;
}

struct EnumerationBudget {
  std::size_t max_results = 1'000'000;
  std::size_t max_nodes = 20'000'000;
};

/// Calls visit(f) for every total monotone extension of psi, in a fixed
/// order. visit may return false to stop early.
template <class Visit>
void for_each_extension(const PartialMap& psi, Visit&& visit, EnumerationBudget budget = {}) {
  const Poset& s = psi.source();
  const Poset& t = psi.target();
  const std::size_t n = s.size();
  std::vector<Element> order = s.linear_extension();

  // Static window per element from the domain: lo = values below, hi =
  // values above.
  std::vector<Subset> window(n, t.all());
  for (Element x = 0; x < n; ++x) {
    if (psi.defined(x)) {
      window[x] = t.none();
      window[x].set(psi(x));
      continue;
    }
    const Subset& below = s.down_set(x);
    for (Element y = below.find_first(); y != Subset::npos; y = below.find_next(y))
      if (psi.defined(y)) window[x] &= t.up_set(psi(y));
    const Subset& above = s.up_set(x);
    for (Element y = above.find_first(); y != Subset::npos; y = above.find_next(y))
      if (psi.defined(y)) window[x] &= t.down_set(psi(y));
  }
  for (Element x = 0; x < n; ++x)
    if (window[x].none()) return;

  // Immediate predecessors in the source, so each step intersects few rows.
  std::vector<std::vector<Element>> preds(n);
  for (auto [a, b] : s.covers()) preds[b].push_back(a);

  Assignment f(n, 0);
  std::size_t results = 0;
  std::size_t nodes = 0;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (++nodes > budget.max_nodes)
      fail(ErrorCode::size_limit_exceeded, "extension enumeration exceeded its node budget");
    if (depth == n) {
      if (++results > budget.max_results)
        fail(ErrorCode::size_limit_exceeded, "extension enumeration exceeded its result budget");
      if (!visit(const_cast<const Assignment&>(f))) stop = true;
      return;
    }
    Element x = order[depth];
    Subset cand = window[x];
    for (Element p : preds[x]) cand &= t.up_set(f[p]);
    for (Element y = cand.find_first(); y != Subset::npos && !stop; y = cand.find_next(y)) {
      f[x] = y;
      self(self, depth + 1);
    }
  };
  rec(rec, 0);
}

inline std::vector<MonotoneMap> enumerate_extensions(const PartialMap& psi,
                                                     EnumerationBudget budget = {}) {
  std::vector<MonotoneMap> out;
  for_each_extension(
      psi,
      [&](const Assignment& f) {
        out.push_back({psi.source(), psi.target(), f});
        return true;
      },
      budget);
  return out;
}

/// All monotone maps from source to target.
inline std::vector<Assignment> enumerate_monotone(const Poset& source, const Poset& target,
                                                  EnumerationBudget budget = {}) {
  std::vector<Assignment> out;
  for_each_extension(
      PartialMap::empty(source, target),
      [&](const Assignment& f) {
        out.push_back(f);
        return true;
      },
      budget);
  return out;
}

enum class Extremizability { extremizable, not_extremizable, no_extension };

inline std::string_view to_string(Extremizability e) {
  switch (e) {
    case Extremizability::extremizable: return "extremizable";
    case Extremizability::not_extremizable: return "not_extremizable";
    default: return "no_extension";
  }
}

struct ExtremizabilityResult {
  Extremizability status = Extremizability::no_extension;
  std::optional<ExtensionPair> pair;
  std::size_t extension_count = 0;
};

/// Decides by exhaustive enumeration whether the set of extensions has a
/// least and a greatest member. Works for any finite target.
inline ExtremizabilityResult check_extremizable_general(const PartialMap& psi,
                                                        EnumerationBudget budget = {}) {
  const Poset& t = psi.target();
  const std::size_t n = psi.source().size();
  std::vector<Subset> seen(n, t.none());
  ExtremizabilityResult result;
  for_each_extension(
      psi,
      [&](const Assignment& f) {
        ++result.extension_count;
        for (Element x = 0; x < n; ++x) seen[x].set(f[x]);
        return true;
      },
      budget);
  if (result.extension_count == 0) return result;
  // The pointwise least values form the least extension exactly when they
  // exist and the resulting map is itself an extension.
  Assignment lo(n), hi(n);
  for (Element x = 0; x < n; ++x) {
    auto l = least_in(t, seen[x]);
    auto h = greatest_in(t, seen[x]);
    if (!l || !h) {
      result.status = Extremizability::not_extremizable;
      return result;
    }
    lo[x] = *l;
    hi[x] = *h;
  }
  // lo and hi take values that some extension takes, so they agree with psi
  // on the domain; only monotonicity needs checking.
  if (!is_monotone(lo, psi.source(), t) || !is_monotone(hi, psi.source(), t)) {
    result.status = Extremizability::not_extremizable;
    return result;
  }
  result.status = Extremizability::extremizable;
  result.pair = ExtensionPair{{psi.source(), t, std::move(lo)}, {psi.source(), t, std::move(hi)}};
  return result;
}

}  // namespace darboux
