#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "darboux.hpp"
#include "support/check.hpp"
#include "support/generators.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

using namespace darboux;

namespace {

Poset diamond() { return augment(antichain(2)).poset; }

}  // namespace

TEST_CASE("automorphism groups validate their axioms") {
  Poset d = diamond();
  REQUIRE(is_automorphism(d, {1, 0, 2, 3}));
  REQUIRE_FALSE(is_automorphism(d, {0, 0, 2, 3}));
  REQUIRE_FALSE(is_automorphism(d, {2, 1, 0, 3}));
  REQUIRE(testcheck::code_of([&] { AutomorphismGroup(d, {{1, 0, 2, 3}}); }) == ErrorCode::invalid_argument);
  REQUIRE(testcheck::code_of([&] { AutomorphismGroup(d, {{0, 1, 2, 3}, {0, 0, 2, 3}}); }) ==
          ErrorCode::not_automorphism);
  AutomorphismGroup g = AutomorphismGroup::generated(d, {{1, 0, 2, 3}});
  REQUIRE(g.order() == 2);
  REQUIRE(g.is_commutative());
  REQUIRE(element_order({1, 0, 2, 3}) == 2);
}

TEST_CASE("complete integral closure examples") {
  Poset d = diamond();
  REQUIRE(is_completely_integrally_closed(AutomorphismGroup::generated(d, {})));
  REQUIRE(is_completely_integrally_closed(AutomorphismGroup::full(d)));
  Poset m3 = augment(antichain(3)).poset;
  AutomorphismGroup s3 = AutomorphismGroup::full(m3);
  REQUIRE(s3.order() == 6);
  REQUIRE_FALSE(s3.is_commutative());
  REQUIRE(enumerate_subgroups(s3).size() == 6);
  REQUIRE(is_completely_integrally_closed(s3));
}

TEST_CASE("bounded Darboux set of small groups") {
  Poset d = diamond();
  GroupBdarReport trivial = bdar_of_group(AutomorphismGroup::generated(d, {}));
  REQUIRE(trivial.members == std::vector<Assignment>{identity_assignment(4)});
  REQUIRE(trivial.is_subgroup());
  GroupBdarReport full = bdar_of_group(AutomorphismGroup::full(d));
  REQUIRE(full.equals_group);
  REQUIRE(full.is_subgroup());
  REQUIRE(full.commutative == std::optional<bool>(true));
}

TEST_CASE("property: every group on a lattice of at most five elements") {
  // Finite automorphism groups are completely integrally closed, and the
  // bounded Darboux set of the identity on the group is a subgroup.
  std::size_t groups = 0;
  for (const Poset& l : testgen::small_lattices(5)) {
    if (l.size() < 2) continue;
    auto full = AutomorphismGroup::full(l);
    std::set<Assignment> naive;
    for (const auto& f : oracle::automorphisms(l)) naive.insert(f);
    REQUIRE(std::set<Assignment>(full.maps().begin(), full.maps().end()) == naive);
    for (const AutomorphismGroup& g : enumerate_subgroups(full)) {
      ++groups;
      REQUIRE(is_completely_integrally_closed(g));
      GroupBdarReport r = bdar_of_group(g);
      REQUIRE(r.contains_group);
      REQUIRE(r.is_subgroup());
      if (g.is_commutative()) REQUIRE(r.commutative == std::optional<bool>(true));
      // Sandwich check by hand: f in BDar means a <= f <= b for group
      // elements a, b, and then the extensions agree.
      for (const Assignment& f : r.members) {
        bool below = false, above = false;
        for (const Assignment& a : g.maps()) {
          below = below || pointwise_leq(a, f, l);
          above = above || pointwise_leq(f, a, l);
        }
        REQUIRE((below && above));
      }
    }
  }
  REQUIRE(groups > 0);
}

TEST_CASE("composition law for automorphism-valued maps") {
  testgen::Rng rng(51);
  std::size_t audited = 0;
  for (int i = 0; i < 300; ++i) {
    const Poset& l = testgen::random_lattice(rng);
    FunctionSpace space(l, l);
    std::vector<Element> auts;
    for (const auto& f : enumerate_automorphisms(l)) auts.push_back(space.index_of(f.assignment));
    Poset o1 = testgen::random_poset(rng, testgen::uniform_size(rng, 1, 3), 0.4, "u");
    Poset o2 = testgen::random_poset(rng, testgen::uniform_size(rng, 1, 3), 0.4, "v");
    PartialMap psi = testgen::random_automorphism_valued(rng, o1, space, auts, 0.6);
    PartialMap psi2 = testgen::random_automorphism_valued(rng, o2, space, auts, 0.6);
    AuditReport r = audit_composition_law(psi, psi2, space);
    REQUIRE(r.passed());
    REQUIRE(r.checks == 2 * o1.size() * o2.size());
    ++audited;
  }
  REQUIRE(audited == 300);

  Poset c = chain(3);
  FunctionSpace space(c, c);
  Element constant = space.index_of({0, 0, 0});
  PartialMap bad(chain(1), space.poset(), {constant});
  REQUIRE(testcheck::code_of([&] { audit_composition_law(bad, bad, space); }) == ErrorCode::hypothesis_violated);
}
