#pragma once

// Admissible random instances for the composition, product, evaluation and
// composition-law audits, and the constant-on-S partial maps.

#include <cstdint>
#include <optional>
#include <vector>

#include "darboux.hpp"
#include "support/generators.hpp"

namespace testgen {

inline const std::vector<Poset>& lattices_up_to_5() {
  static const std::vector<Poset> all = small_lattices(5);
  return all;
}

inline const Poset& random_lattice(Rng& rng, std::size_t max_size = 5) {
  const auto& all = lattices_up_to_5();
  for (;;) {
    const Poset& p = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    if (p.size() <= max_size) return p;
  }
}

/// The same partial map with its domain cut down to keep.
inline PartialMap restricted(const PartialMap& psi, const Subset& keep) {
  std::vector<std::optional<Element>> v(psi.source().size());
  for (Element x = 0; x < v.size(); ++x)
    if (keep.test(x) && psi.defined(x)) v[x] = psi(x);
  return PartialMap(psi.source(), psi.target(), std::move(v));
}

struct CompositionInstance {
  PartialMap first;
  PartialMap second;
};

/// psi1 : O1 -> L2 and psi2 : L2 -> L3 with dom(psi2) inside im(psi1).
inline CompositionInstance random_composition(Rng& rng) {
  Poset o1 = random_poset(rng, uniform_size(rng, 1, 5), 0.4, "u");
  Poset l2 = random_lattice(rng);
  Poset l3 = random_lattice(rng);
  PartialMap psi1 = random_partial_map(rng, o1, l2, 0.6);
  PartialMap psi2 = random_partial_map(rng, l2, l3, 0.8);
  return {psi1, restricted(psi2, psi1.image())};
}

struct ProductInstance {
  PartialMap psi;
  Poset p1;
  Poset p2;
};

inline ProductInstance random_product(Rng& rng) {
  Poset o = random_poset(rng, uniform_size(rng, 1, 5), 0.4, "u");
  Poset p1 = random_lattice(rng, 4);
  Poset p2 = random_lattice(rng, 4);
  return {random_partial_map(rng, o, product(p1, p2), 0.5), p1, p2};
}

struct EvaluationInstance {
  PartialMap psi;
  FunctionSpace space;
};

inline EvaluationInstance random_evaluation(Rng& rng) {
  Poset p = random_poset(rng, uniform_size(rng, 1, 2), 0.5, "p");
  Poset q = random_lattice(rng, 3);
  FunctionSpace space(p, q);
  Poset o = random_poset(rng, uniform_size(rng, 1, 5), 0.4, "u");
  return {random_partial_map(rng, o, space.poset(), 0.5), std::move(space)};
}

/// psi_S : OP(O, P) -> augment(P), defined on the maps constant on the
/// points of S (a bit mask over O) with value that constant.
inline PartialMap constant_on(const FunctionSpace& space, std::uint64_t s) {
  AugmentedPoset hat = augment(space.codomain());
  std::vector<std::optional<Element>> v(space.size());
  for (Element f = 0; f < space.size(); ++f) {
    std::optional<Element> val;
    bool constant = true;
    for (Element x = 0; x < space.domain().size(); ++x)
      if ((s >> x) & 1u) {
        if (val && *val != space.map(f)[x]) constant = false;
        val = space.map(f)[x];
      }
    if (constant && val) v[f] = *val;
  }
  return PartialMap(space.poset(), hat.poset, std::move(v));
}

/// psi and psi2 into OP(L) with values among the automorphisms of L.
struct CompositionLawInstance {
  PartialMap psi;
  PartialMap psi2;
};

inline PartialMap random_automorphism_valued(Rng& rng, const Poset& o, const FunctionSpace& space,
                                             const std::vector<Element>& auts, double keep) {
  std::bernoulli_distribution coin(keep);
  std::uniform_int_distribution<std::size_t> pick(0, auts.size() - 1);
  // Distinct automorphisms of a finite poset are incomparable, so
  // comparable points must share a value.
  std::vector<std::optional<Element>> v(o.size());
  for (Element x : o.linear_extension()) {
    if (!coin(rng)) continue;
    std::optional<Element> forced;
    bool clash = false;
    for (Element y = 0; y < o.size(); ++y)
      if (v[y] && o.comparable(x, y)) {
        if (forced && *forced != *v[y]) clash = true;
        forced = v[y];
      }
    if (clash) continue;
    v[x] = forced ? *forced : auts[pick(rng)];
  }
  return PartialMap(o, space.poset(), std::move(v));
}

}  // namespace testgen
