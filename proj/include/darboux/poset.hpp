#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "darboux/error.hpp"

namespace darboux {

using Element = std::size_t;
using Subset = boost::dynamic_bitset<>;
using Assignment = std::vector<Element>;

/// A finite partially ordered set. Elements are the indices 0..size()-1,
/// each carrying an opaque string identifier. The order is stored closed, as
/// one up-set and one down-set bit row per element. Values are immutable and
/// share their storage, so copies are cheap.
class Poset {
 public:
  Poset() : data_(std::make_shared<Data>()) {}

  /// Builds a poset from an arbitrary relation given as "row[x] contains y
  /// iff x <= y". The reflexive-transitive closure is taken; throws
  /// CycleError if it is not antisymmetric and DuplicateElement on repeated
  /// identifiers.
  static Poset from_relation(std::vector<std::string> names, std::vector<Subset> rows) {
    const std::size_t n = names.size();
    if (rows.size() != n) fail(ErrorCode::invalid_argument, "relation size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) fail(ErrorCode::invalid_argument, "relation row size mismatch");
      rows[i].set(i);
    }
    // Warshall on bit rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (rows[i].test(k)) rows[i] |= rows[k];
    return from_closed(std::move(names), std::move(rows));
  }

  /// As from_relation, but the rows are trusted to be reflexive and
  /// transitive already. Antisymmetry is still checked.
  static Poset from_closed(std::vector<std::string> names, std::vector<Subset> up) {
    auto data = std::make_shared<Data>();
    const std::size_t n = names.size();
    data->down.assign(n, Subset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = up[i].find_first(); j != Subset::npos; j = up[i].find_next(j))
        data->down[j].set(i);
    for (std::size_t i = 0; i < n; ++i) {
      Subset both = up[i] & data->down[i];
      both.reset(i);
      if (both.any())
        fail(ErrorCode::cycle_error, "order relation is not antisymmetric: '" + names[i] +
                                         "' and '" + names[both.find_first()] + "'");
    }
    data->index.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      if (!data->index.emplace(names[i], i).second)
        fail(ErrorCode::duplicate_element, "duplicate element '" + names[i] + "'");
    data->up_count.resize(n);
    for (std::size_t i = 0; i < n; ++i) data->up_count[i] = up[i].count();
    data->names = std::move(names);
    data->up = std::move(up);
    return Poset(std::move(data));
  }

  std::size_t size() const { return data_->names.size(); }
  bool empty() const { return size() == 0; }

  const std::string& name(Element x) const { return data_->names[x]; }
  const std::vector<std::string>& names() const { return data_->names; }

  std::optional<Element> find(std::string_view id) const {
    auto it = data_->index.find(std::string(id));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }

  Element index_of(std::string_view id) const {
    if (auto x = find(id)) return *x;
    fail(ErrorCode::unknown_element, "unknown element '" + std::string(id) + "'");
  }

  bool leq(Element a, Element b) const { return data_->up[a].test(b); }
  bool less(Element a, Element b) const { return a != b && leq(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  const Subset& up_set(Element x) const { return data_->up[x]; }
  const Subset& down_set(Element x) const { return data_->down[x]; }
  std::size_t up_count(Element x) const { return data_->up_count[x]; }

  Subset none() const { return Subset(size()); }
  Subset all() const {
    Subset s(size());
    s.set();
    return s;
  }

  /// Hasse diagram: pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < size(); ++x) {
      Subset above = up_set(x);
      above.reset(x);
      for (Element y = above.find_first(); y != Subset::npos; y = above.find_next(y)) {
        Subset between = above & down_set(y);
        between.reset(y);
        if (between.none()) out.emplace_back(x, y);
      }
    }
    return out;
  }

  /// Elements listed so that x < y implies x comes before y.
  std::vector<Element> linear_extension() const {
    std::vector<Element> order(size());
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
      return down_set(a).count() < down_set(b).count();
    });
    return order;
  }

  friend bool operator==(const Poset& a, const Poset& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->names == b.data_->names && a.data_->up == b.data_->up;
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, Element> index;
    std::vector<Subset> up;
    std::vector<Subset> down;
    std::vector<std::size_t> up_count;
  };

  explicit Poset(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// A total order preserving map between two posets.
struct MonotoneMap {
  Poset source;
  Poset target;
  Assignment assignment;

  Element operator()(Element x) const { return assignment[x]; }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
};

/// Builds a poset from its element identifiers and covering pairs (a, b),
/// meaning a <= b. Pairs need not be exact covers; the order is their
/// reflexive-transitive closure.
inline Poset make_poset(const std::vector<std::string>& elements,
                        const std::vector<std::pair<std::string, std::string>>& covering_pairs) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < n; ++i)
    if (!index.emplace(elements[i], i).second)
      fail(ErrorCode::duplicate_element, "duplicate element '" + elements[i] + "'");
  std::vector<Subset> rows(n, Subset(n));
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) fail(ErrorCode::unknown_element, "unknown element '" + id + "'");
    return it->second;
  };
  for (const auto& [lo, hi] : covering_pairs) rows[lookup(lo)].set(lookup(hi));
  return Poset::from_relation(elements, std::move(rows));
}

/// Poset on the given identifiers ordered by a predicate leq(i, j), which
/// must already be a partial order.
template <class Leq>
Poset poset_from_order(std::vector<std::string> names, Leq&& leq) {
  const std::size_t n = names.size();
  std::vector<Subset> up(n, Subset(n));
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (i == j || leq(i, j)) up[i].set(j);
  return Poset::from_closed(std::move(names), std::move(up));
}

inline Poset chain(std::size_t n, std::string_view prefix = "c") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return poset_from_order(std::move(names), [](Element a, Element b) { return a <= b; });
}

inline Poset antichain(std::size_t n, std::string_view prefix = "a") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return poset_from_order(std::move(names), [](Element, Element) { return false; });
}

/// The augmentation: base elements keep their indices, bottom = size,
/// top = size + 1.
struct AugmentedPoset {
  Poset poset;
  Element bottom;
  Element top;
};

inline std::string fresh_name(const Poset& p, std::string base) {
  while (p.find(base)) base += "'";
  return base;
}

inline AugmentedPoset augment(const Poset& base) {
  const std::size_t n = base.size();
  std::vector<std::string> names = base.names();
  names.push_back(fresh_name(base, "-inf"));
  names.push_back(fresh_name(base, "+inf"));
  std::vector<Subset> up(n + 2, Subset(n + 2));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y)
      if (base.leq(x, y)) up[x].set(y);
    up[x].set(n + 1);
  }
  up[n].set();
  up[n + 1].set(n + 1);
  return {Poset::from_closed(std::move(names), std::move(up)), n, n + 1};
}

inline Poset opposite(const Poset& p) {
  return poset_from_order(p.names(), [&](Element a, Element b) { return p.leq(b, a); });
}

/// Componentwise order; the pair (i, j) has index i * |q| + j.
inline Poset product(const Poset& p, const Poset& q) {
  std::vector<std::string> names;
  names.reserve(p.size() * q.size());
  for (Element i = 0; i < p.size(); ++i)
    for (Element j = 0; j < q.size(); ++j) names.push_back("(" + p.name(i) + "," + q.name(j) + ")");
  const std::size_t m = q.size();
  return poset_from_order(std::move(names), [&](Element a, Element b) {
    return p.leq(a / m, b / m) && q.leq(a % m, b % m);
  });
}

inline Poset discretize(const Poset& p) {
  return poset_from_order(p.names(), [](Element, Element) { return false; });
}

/// An induced subposet with its inclusion into the parent.
struct SubPoset {
  Poset poset;
  std::vector<Element> to_parent;
};

inline SubPoset induced(const Poset& p, const Subset& members) {
  std::vector<Element> keep;
  for (Element x = members.find_first(); x != Subset::npos; x = members.find_next(x))
    keep.push_back(x);
  std::vector<std::string> names;
  for (Element x : keep) names.push_back(p.name(x));
  Poset sub = poset_from_order(std::move(names),
                               [&](Element a, Element b) { return p.leq(keep[a], keep[b]); });
  return {std::move(sub), std::move(keep)};
}

/// The interval [x, y] = {z : x <= z <= y}.
inline SubPoset interval(const Poset& p, Element x, Element y) {
  if (!p.leq(x, y))
    fail(ErrorCode::not_comparable, "interval endpoints '" + p.name(x) + "' and '" + p.name(y) +
                                        "' are not ordered");
  return induced(p, p.up_set(x) & p.down_set(y));
}

inline bool is_monotone(const Assignment& f, const Poset& p, const Poset& q) {
  if (f.size() != p.size()) return false;
  for (Element x = 0; x < p.size(); ++x) {
    const Subset& up = p.up_set(x);
    for (Element y = up.find_first(); y != Subset::npos; y = up.find_next(y))
      if (!q.leq(f[x], f[y])) return false;
  }
  return true;
}

/// Monotone and order reflecting: f(x) <= f(y) implies x <= y.
inline bool is_embedding(const Assignment& f, const Poset& p, const Poset& q) {
  if (!is_monotone(f, p, q)) return false;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (q.leq(f[x], f[y]) && !p.leq(x, y)) return false;
  return true;
}

inline bool is_monotone(const MonotoneMap& f) { return is_monotone(f.assignment, f.source, f.target); }
inline bool is_embedding(const MonotoneMap& f) {
  return is_embedding(f.assignment, f.source, f.target);
}

/// (f o g)(x) = f(g(x)).
inline Assignment compose(const Assignment& f, const Assignment& g) {
  Assignment out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

inline Assignment inverse(const Assignment& f) {
  Assignment out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[f[i]] = i;
  return out;
}

inline Assignment identity_assignment(std::size_t n) {
  Assignment id(n);
  std::iota(id.begin(), id.end(), Element{0});
  return id;
}

/// Least element of the given subset, if it has one.
inline std::optional<Element> least_in(const Poset& p, const Subset& s) {
  // The least element, if any, has the largest up-set among members.
  Element best = Subset::npos;
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x))
    if (best == Subset::npos || p.up_count(x) > p.up_count(best)) best = x;
  if (best == Subset::npos || !s.is_subset_of(p.up_set(best))) return std::nullopt;
  return best;
}

inline std::optional<Element> greatest_in(const Poset& p, const Subset& s) {
  Element best = Subset::npos;
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x))
    if (best == Subset::npos || p.down_set(x).count() > p.down_set(best).count()) best = x;
  if (best == Subset::npos || !s.is_subset_of(p.down_set(best))) return std::nullopt;
  return best;
}

inline std::optional<Element> least_upper_bound(const Poset& p, const Subset& s) {
  Subset bounds = p.all();
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x)) bounds &= p.up_set(x);
  return least_in(p, bounds);
}

inline std::optional<Element> greatest_lower_bound(const Poset& p, const Subset& s) {
  Subset bounds = p.all();
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x)) bounds &= p.down_set(x);
  return greatest_in(p, bounds);
}

inline std::optional<Element> minimum(const Poset& p) { return least_in(p, p.all()); }
inline std::optional<Element> maximum(const Poset& p) { return greatest_in(p, p.all()); }

/// Every subset has a supremum and an infimum. For finite posets it is
/// enough to have a least element and all binary joins.
inline bool is_complete_lattice(const Poset& p) {
  if (!minimum(p)) return false;
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = a + 1; b < p.size(); ++b)
      if (!least_in(p, p.up_set(a) & p.up_set(b))) return false;
  return true;
}

namespace detail {

// Backtracking search for order isomorphisms p -> q. Calls visit(f) on each
// one found; visit returns false to stop.
template <class Visit>
void search_isomorphisms(const Poset& p, const Poset& q, Visit&& visit) {
  const std::size_t n = p.size();
  if (q.size() != n) return;
  auto signature = [](const Poset& s, Element x) {
    return std::pair(s.up_count(x), s.down_set(x).count());
  };
  std::vector<Element> order = p.linear_extension();
  Assignment f(n, Subset::npos);
  std::vector<bool> used(n, false);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == n) {
      if (!visit(f)) stop = true;
      return;
    }
    Element x = order[depth];
    for (Element y = 0; y < n && !stop; ++y) {
      if (used[y] || signature(p, x) != signature(q, y)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        Element z = order[d];
        ok = p.leq(z, x) == q.leq(f[z], y) && p.leq(x, z) == q.leq(y, f[z]);
      }
      if (!ok) continue;
      f[x] = y;
      used[y] = true;
      self(self, depth + 1);
      used[y] = false;
      f[x] = Subset::npos;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// All automorphisms of p, identity first. Guarded by max_size because the
/// search is exhaustive.
inline std::vector<MonotoneMap> enumerate_automorphisms(const Poset& p, std::size_t max_size = 10) {
  if (p.size() > max_size)
    fail(ErrorCode::size_limit_exceeded, "automorphism search limited to " +
                                             std::to_string(max_size) + " elements");
  std::vector<Assignment> found;
  detail::search_isomorphisms(p, p, [&](const Assignment& f) {
    found.push_back(f);
    return true;
  });
  std::sort(found.begin(), found.end());
  std::vector<MonotoneMap> out;
  for (auto& f : found) out.push_back({p, p, std::move(f)});
  return out;
}

inline std::optional<Assignment> find_isomorphism(const Poset& p, const Poset& q) {
  std::optional<Assignment> result;
  detail::search_isomorphisms(p, q, [&](const Assignment& f) {
    result = f;
    return false;
  });
  return result;
}

}  // namespace darboux
