#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darboux/error.hpp"
#include "darboux/extension.hpp"
#include "darboux/poset.hpp"

namespace darboux {

/// The down-sets of a poset ordered by inclusion, together with the member
/// sets (as subsets of the base) behind each element.
struct DownSetLattice {
  Poset base;
  Poset poset;
  std::vector<Subset> sets;
  std::map<Subset, Element> index;

  Element index_of(const Subset& s) const {
    auto it = index.find(s);
    if (it == index.end()) fail(ErrorCode::unknown_element, "subset is not a member");
    return it->second;
  }
};

inline std::string subset_label(const Poset& p, const Subset& s) {
  std::vector<std::string> names;
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x)) names.push_back(p.name(x));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "," : "") + names[i];
  return out + "}";
}

inline std::vector<std::string> subset_names(const Poset& p, const Subset& s) {
  std::vector<std::string> names;
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x)) names.push_back(p.name(x));
  std::sort(names.begin(), names.end());
  return names;
}

inline bool is_down_set(const Poset& p, const Subset& s) {
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x))
    if (!p.down_set(x).is_subset_of(s)) return false;
  return true;
}

inline DownSetLattice lattice_of_sets(const Poset& base, std::vector<Subset> sets) {
  DownSetLattice out;
  out.base = base;
  std::vector<std::string> names;
  for (Element i = 0; i < sets.size(); ++i) {
    out.index.emplace(sets[i], i);
    names.push_back(subset_label(base, sets[i]));
  }
  out.poset = poset_from_order(std::move(names),
                               [&](Element a, Element b) { return sets[a].is_subset_of(sets[b]); });
  out.sets = std::move(sets);
  return out;
}

/// All down-sets of o, enumerated along a linear extension. Throws
/// SizeLimitExceeded beyond max_size.
inline std::vector<Subset> enumerate_down_sets(const Poset& o, std::size_t max_size = 1u << 16) {
  std::vector<Element> order = o.linear_extension();
  std::vector<Subset> out;
  Subset current = o.none();
  // Elements are decided from the top down: an element may always be
  // included, and excluded only when nothing above it is included.
  std::vector<Element> rev(order.rbegin(), order.rend());
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == rev.size()) {
      if (out.size() >= max_size)
        fail(ErrorCode::size_limit_exceeded,
             "more than " + std::to_string(max_size) + " down-sets");
      out.push_back(current);
      return;
    }
    Element x = rev[depth];
    current.set(x);
    self(self, depth + 1);
    current.reset(x);
    if (!o.up_set(x).intersects(current)) self(self, depth + 1);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

/// The free cocompletion: every down-set of o, ordered by inclusion.
inline DownSetLattice free_cocompletion(const Poset& o, std::size_t max_size = 1u << 16) {
  return lattice_of_sets(o, enumerate_down_sets(o, max_size));
}

/// x -> principal down-set of x.
inline MonotoneMap yoneda(const Poset& o, const DownSetLattice& target) {
  Assignment a(o.size());
  for (Element x = 0; x < o.size(); ++x) a[x] = target.index_of(o.down_set(x));
  return {o, target.poset, std::move(a)};
}

inline Subset upper_bounds(const Poset& p, const Subset& s) {
  Subset b = p.all();
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x)) b &= p.up_set(x);
  return b;
}

inline Subset lower_bounds(const Poset& p, const Subset& s) {
  Subset b = p.all();
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x)) b &= p.down_set(x);
  return b;
}

/// The cuts: down-sets equal to the lower bounds of their upper bounds.
inline DownSetLattice macneille_cuts(const Poset& o, std::size_t max_size = 1u << 16) {
  std::vector<Subset> cuts;
  for (Subset& a : enumerate_down_sets(o, max_size))
    if (lower_bounds(o, upper_bounds(o, a)) == a) cuts.push_back(std::move(a));
  return lattice_of_sets(o, std::move(cuts));
}

enum class CompletionMethod { extension, closure };

struct CompletionResult {
  DownSetLattice cocompletion;
  /// Dar(O) as a sublattice of the cocompletion.
  DownSetLattice dar;
  /// Dar(O) without its global minimum and maximum.
  SubPoset dar_prime;
  MonotoneMap yoneda;
  Element lex_empty = 0;
  Element uex_empty = 0;
  /// Set when a stripped extreme is the image of some element of O.
  bool extremes_are_yoneda = false;
  /// Whether the lower extension of the Yoneda identity is the identity.
  bool lex_is_identity = false;
};

/// Dar(O): the Darboux set of the identity on the Yoneda image inside the
/// free cocompletion. The closure method filters cuts directly instead.
inline CompletionResult darboux_completion(const Poset& o,
                                           CompletionMethod method = CompletionMethod::extension,
                                           std::size_t max_size = 1u << 16) {
  CompletionResult r;
  r.cocompletion = free_cocompletion(o, max_size);
  const Poset& cv = r.cocompletion.poset;
  MonotoneMap y0 = yoneda(o, r.cocompletion);

  std::vector<Subset> members;
  if (method == CompletionMethod::extension) {
    std::vector<std::optional<Element>> v(cv.size());
    for (Element x = 0; x < o.size(); ++x) v[y0(x)] = y0(x);
    PartialMap phi(cv, cv, std::move(v));
    ExtensionPair ex = extensions(phi);
    r.lex_is_identity = ex.lower.assignment == identity_assignment(cv.size());
    Subset d = darboux_set(ex);
    for (Element i = d.find_first(); i != Subset::npos; i = d.find_next(i))
      members.push_back(r.cocompletion.sets[i]);
  } else {
    for (const Subset& a : r.cocompletion.sets)
      if (lower_bounds(o, upper_bounds(o, a)) == a) members.push_back(a);
    r.lex_is_identity = true;
  }
  r.dar = lattice_of_sets(o, std::move(members));
  r.yoneda = yoneda(o, r.dar);

  const Poset& d = r.dar.poset;
  ExtensionPair empty = extensions(PartialMap::empty(d, d));
  r.lex_empty = empty.lower(0);
  r.uex_empty = empty.upper(0);
  Subset keep = d.all();
  keep.reset(r.lex_empty);
  keep.reset(r.uex_empty);
  r.dar_prime = induced(d, keep);
  for (Element x = 0; x < o.size(); ++x)
    if (r.yoneda(x) == r.lex_empty || r.yoneda(x) == r.uex_empty) r.extremes_are_yoneda = true;
  return r;
}

/// The automorphism of Dar(O) induced by an automorphism g of O: the
/// Darboux extension of Y(x) -> Y(g(x)).
inline MonotoneMap lift_automorphism(const CompletionResult& c, const MonotoneMap& g) {
  const Poset& o = c.yoneda.source;
  if (!(g.source == o) || !(g.target == o) || g.assignment.size() != o.size() ||
      !is_embedding(g) ||
      [&] {
        Subset im(o.size());
        for (Element x : g.assignment) im.set(x);
        return !im.all();
      }())
    fail(ErrorCode::not_automorphism, "map is not an automorphism of the base poset");
  const Poset& d = c.dar.poset;
  std::vector<std::optional<Element>> v(d.size());
  for (Element x = 0; x < o.size(); ++x) v[c.yoneda(x)] = c.yoneda(g(x));
  PartialMap psi(d, d, std::move(v));
  ExtensionPair ex = extensions(psi);
  if (ex.lower.assignment != ex.upper.assignment)
    fail(ErrorCode::not_automorphism, "lifted map is not defined on the whole completion");
  return ex.lower;
}

}  // namespace darboux
