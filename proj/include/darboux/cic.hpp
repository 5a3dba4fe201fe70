#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "darboux/audit.hpp"
#include "darboux/error.hpp"
#include "darboux/extension.hpp"
#include "darboux/function_space.hpp"
#include "darboux/poset.hpp"

namespace darboux {

inline bool is_automorphism(const Poset& p, const Assignment& f) {
  if (f.size() != p.size()) return false;
  std::vector<bool> hit(p.size(), false);
  for (Element y : f) {
    if (y >= p.size() || hit[y]) return false;
    hit[y] = true;
  }
  return is_embedding(f, p, p);
}

/// A finite group of automorphisms of a poset, closed under composition and
/// inverses. maps is kept sorted.
class AutomorphismGroup {
 public:
  AutomorphismGroup(Poset carrier, std::vector<Assignment> maps) : carrier_(std::move(carrier)) {
    std::set<Assignment> s(maps.begin(), maps.end());
    for (const Assignment& f : s)
      if (!is_automorphism(carrier_, f))
        fail(ErrorCode::not_automorphism, "group member is not an automorphism");
    if (!s.count(identity_assignment(carrier_.size())))
      fail(ErrorCode::invalid_argument, "group does not contain the identity");
    for (const Assignment& f : s) {
      if (!s.count(inverse(f))) fail(ErrorCode::invalid_argument, "group is not closed under inverses");
      for (const Assignment& g : s)
        if (!s.count(compose(f, g)))
          fail(ErrorCode::invalid_argument, "group is not closed under composition");
    }
    maps_.assign(s.begin(), s.end());
  }

  /// The subgroup generated by the given automorphisms.
  static AutomorphismGroup generated(const Poset& carrier, const std::vector<Assignment>& gens) {
    std::set<Assignment> s{identity_assignment(carrier.size())};
    for (const Assignment& g : gens)
      if (!is_automorphism(carrier, g))
        fail(ErrorCode::not_automorphism, "generator is not an automorphism");
    std::vector<Assignment> frontier(s.begin(), s.end());
    while (!frontier.empty()) {
      std::vector<Assignment> next;
      for (const Assignment& f : frontier)
        for (const Assignment& g : gens) {
          Assignment h = compose(g, f);
          if (s.insert(h).second) next.push_back(h);
        }
      frontier = std::move(next);
    }
    return AutomorphismGroup(carrier, {s.begin(), s.end()});
  }

  static AutomorphismGroup full(const Poset& carrier, std::size_t max_size = 10) {
    std::vector<Assignment> maps;
    for (auto& m : enumerate_automorphisms(carrier, max_size)) maps.push_back(std::move(m.assignment));
    return AutomorphismGroup(carrier, std::move(maps));
  }

  const Poset& carrier() const { return carrier_; }
  const std::vector<Assignment>& maps() const { return maps_; }
  std::size_t order() const { return maps_.size(); }

  bool contains(const Assignment& f) const { return std::binary_search(maps_.begin(), maps_.end(), f); }

  bool is_commutative() const {
    for (const Assignment& f : maps_)
      for (const Assignment& g : maps_)
        if (compose(f, g) != compose(g, f)) return false;
    return true;
  }

 private:
  Poset carrier_;
  std::vector<Assignment> maps_;
};

/// Every subgroup of a finite group, found as the closed subsets of its
/// elements. Exponential in the group order.
inline std::vector<AutomorphismGroup> enumerate_subgroups(const AutomorphismGroup& g,
                                                          std::size_t max_order = 16) {
  const auto& maps = g.maps();
  if (maps.size() > max_order)
    fail(ErrorCode::size_limit_exceeded, "subgroup enumeration limited to groups of order " +
                                             std::to_string(max_order));
  std::set<std::vector<Assignment>> seen;
  std::vector<AutomorphismGroup> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << maps.size()); ++mask) {
    std::vector<Assignment> gens;
    for (std::size_t i = 0; i < maps.size(); ++i)
      if (mask >> i & 1) gens.push_back(maps[i]);
    AutomorphismGroup h = AutomorphismGroup::generated(g.carrier(), gens);
    if (seen.insert(h.maps()).second) out.push_back(std::move(h));
  }
  return out;
}

inline std::size_t element_order(const Assignment& a) {
  Assignment id = identity_assignment(a.size());
  Assignment p = a;
  std::size_t n = 1;
  while (p != id) {
    p = compose(a, p);
    ++n;
  }
  return n;
}

/// a^n <= a' for every n implies a <= id. Powers of a cycle, so n up to the
/// order of a suffices.
inline bool is_completely_integrally_closed(const AutomorphismGroup& g) {
  const Poset& p = g.carrier();
  Assignment id = identity_assignment(p.size());
  for (const Assignment& a : g.maps()) {
    if (pointwise_leq(a, id, p)) continue;
    std::size_t n = element_order(a);
    for (const Assignment& b : g.maps()) {
      Assignment power = a;
      bool all_below = true;
      for (std::size_t k = 1; k <= n && all_below; ++k) {
        all_below = pointwise_leq(power, b, p);
        power = compose(a, power);
      }
      if (all_below) return false;
    }
  }
  return true;
}

struct GroupBdarReport {
  /// Members of BDar(id_A), as maps of the carrier.
  std::vector<Assignment> members;
  bool contains_group = false;
  bool all_automorphisms = false;
  bool closed_under_composition = false;
  bool closed_under_inverses = false;
  bool group_commutative = false;
  /// Only meaningful when the group is commutative.
  std::optional<bool> commutative;
  bool equals_group = false;

  bool is_subgroup() const {
    return contains_group && all_automorphisms && closed_under_composition && closed_under_inverses;
  }
};

/// BDar(id_A) inside OP(carrier), computed with the extension engine over the
/// materialized function space.
inline GroupBdarReport bdar_of_group(const AutomorphismGroup& g, std::size_t max_size = 4096) {
  FunctionSpace space(g.carrier(), g.carrier(), max_size);
  const Poset& op = space.poset();
  std::vector<std::optional<Element>> v(op.size());
  for (const Assignment& a : g.maps()) {
    Element i = space.index_of(a);
    v[i] = i;
  }
  PartialMap id_a(op, op, std::move(v));
  Subset bdar = bounded_darboux_set(id_a);

  GroupBdarReport r;
  for (Element i = bdar.find_first(); i != Subset::npos; i = bdar.find_next(i))
    r.members.push_back(space.map(i));
  std::sort(r.members.begin(), r.members.end());
  std::set<Assignment> s(r.members.begin(), r.members.end());
  const Poset& p = g.carrier();
  r.contains_group = std::all_of(g.maps().begin(), g.maps().end(),
                                 [&](const Assignment& a) { return s.count(a) > 0; });
  r.all_automorphisms = std::all_of(r.members.begin(), r.members.end(),
                                    [&](const Assignment& f) { return is_automorphism(p, f); });
  r.closed_under_composition = true;
  r.closed_under_inverses = true;
  for (const Assignment& f : r.members) {
    if (r.all_automorphisms && !s.count(inverse(f))) r.closed_under_inverses = false;
    for (const Assignment& h : r.members)
      if (!s.count(compose(f, h))) r.closed_under_composition = false;
  }
  if (!r.all_automorphisms) r.closed_under_inverses = false;
  r.group_commutative = g.is_commutative();
  if (r.group_commutative) {
    bool comm = true;
    for (const Assignment& f : r.members)
      for (const Assignment& h : r.members)
        if (compose(f, h) != compose(h, f)) comm = false;
    r.commutative = comm;
  }
  r.equals_group = r.members == g.maps();
  return r;
}

/// For psi : O -> OP(L) and psi2 : O' -> OP(L) with values among the
/// automorphisms of L, checks on O x O' that composing the extensions
/// pointwise gives the extensions of the composed partial map, for both
/// the lower and the upper extension.
inline AuditReport audit_composition_law(const PartialMap& psi, const PartialMap& psi2,
                                         const FunctionSpace& space) {
  const Poset& op = space.poset();
  if (!(psi.target() == op) || !(psi2.target() == op))
    fail(ErrorCode::invalid_argument, "partial maps must take values in the function space");
  const Poset& carrier = space.domain();
  for (const PartialMap* m : {&psi, &psi2})
    for (Element x = 0; x < m->source().size(); ++x)
      if (m->defined(x) && !is_automorphism(carrier, space.map((*m)(x))))
        fail(ErrorCode::hypothesis_violated, "partial map takes a value outside the automorphisms");

  const Poset& o1 = psi.source();
  const Poset& o2 = psi2.source();
  Poset prod = product(o1, o2);
  const std::size_t m = o2.size();
  auto mu = [&](Element f, Element h) { return space.index_of(compose(space.map(f), space.map(h))); };
  std::vector<std::optional<Element>> v(prod.size());
  for (Element x = 0; x < o1.size(); ++x)
    for (Element y = 0; y < o2.size(); ++y)
      if (psi.defined(x) && psi2.defined(y)) v[x * m + y] = mu(psi(x), psi2(y));
  PartialMap joint(prod, op, std::move(v));

  ExtensionPair e1 = extensions(psi);
  ExtensionPair e2 = extensions(psi2);
  ExtensionPair ej = extensions(joint);
  AuditReport report{"composition-law", 0, {}};
  for (Element x = 0; x < o1.size(); ++x)
    for (Element y = 0; y < o2.size(); ++y) {
      Element k = x * m + y;
      Element lo = mu(e1.lower(x), e2.lower(y));
      Element hi = mu(e1.upper(x), e2.upper(y));
      report.expect(lo == ej.lower(k), "mu.(lex x lex) = lex(mu.(psi x psi'))", prod.name(k),
                    op.name(lo), op.name(ej.lower(k)));
      report.expect(hi == ej.upper(k), "mu.(uex x uex) = uex(mu.(psi x psi'))", prod.name(k),
                    op.name(hi), op.name(ej.upper(k)));
    }
  return report;
}

}  // namespace darboux
