#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "darboux.hpp"
#include "support/check.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace darboux;

namespace {

Poset diamond() { return make_poset({"bot", "a", "b", "top"}, {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}}); }

bool same_order(const Poset& p, const Poset& q) {
  if (p.names() != q.names()) return false;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(x, y)) return false;
  return true;
}

}  // namespace

TEST_CASE("make_poset builds the closure of the covering pairs") {
  Poset one = make_poset({"a"}, {});
  REQUIRE(one.size() == 1);
  REQUIRE(one.leq(0, 0));

  Poset c = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  REQUIRE(c.leq(c.index_of("a"), c.index_of("c")));
  REQUIRE_FALSE(c.leq(c.index_of("c"), c.index_of("a")));
  REQUIRE(c.covers().size() == 2);

  REQUIRE(testcheck::code_of([] { make_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::cycle_error);
  REQUIRE(testcheck::code_of([] { make_poset({"a"}, {{"a", "z"}}); }) == ErrorCode::unknown_element);
  REQUIRE(testcheck::code_of([] { make_poset({"a", "a"}, {}); }) == ErrorCode::duplicate_element);
}

TEST_CASE("augment adds a fresh bottom and top") {
  AugmentedPoset e = augment(Poset());
  REQUIRE(e.poset.size() == 2);
  REQUIRE(e.poset.less(e.bottom, e.top));

  AugmentedPoset c = augment(chain(2));
  REQUIRE(c.poset.size() == 4);
  REQUIRE(oracle::isomorphic(c.poset, chain(4)));

  AugmentedPoset d = augment(antichain(2));
  REQUIRE(oracle::isomorphic(d.poset, diamond()));
  REQUIRE_FALSE(d.poset.comparable(0, 1));

  // Names that collide with the defaults get primes.
  AugmentedPoset twice = augment(c.poset);
  REQUIRE(twice.poset.size() == 6);
  REQUIRE(twice.poset.name(twice.bottom) == "-inf'");
  REQUIRE(twice.poset.name(twice.top) == "+inf'");
}

TEST_CASE("opposite, product, interval and discretize") {
  Poset c = make_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Poset op = opposite(c);
  REQUIRE(op.leq(op.index_of("c"), op.index_of("a")));
  REQUIRE(same_order(opposite(op), c));

  Poset sq = product(chain(2), chain(2));
  REQUIRE(oracle::isomorphic(sq, diamond()));
  REQUIRE_FALSE(sq.comparable(1, 2));

  AugmentedPoset four = augment(chain(2));
  SubPoset iv = interval(four.poset, 0, four.top);
  REQUIRE(iv.poset.size() == 3);
  REQUIRE(oracle::isomorphic(iv.poset, chain(3)));
  REQUIRE(testcheck::code_of([&] { interval(four.poset, 1, 0); }) == ErrorCode::not_comparable);

  Poset d = discretize(c);
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) REQUIRE(d.leq(x, y) == (x == y));
}

TEST_CASE("monotone maps and embeddings") {
  Poset c = chain(2);
  Poset a = antichain(2);
  Poset pt = chain(1);
  REQUIRE(is_monotone(identity_assignment(2), c, c));
  REQUIRE(is_embedding(identity_assignment(2), c, c));
  REQUIRE(is_monotone(Assignment{0, 0}, a, pt));
  REQUIRE_FALSE(is_embedding(Assignment{0, 0}, a, pt));
  REQUIRE_FALSE(is_monotone(Assignment{1, 0}, c, c));
}

TEST_CASE("automorphisms of small posets") {
  for (std::size_t n = 1; n <= 6; ++n) REQUIRE(enumerate_automorphisms(chain(n)).size() == 1);
  auto swap = enumerate_automorphisms(antichain(2));
  REQUIRE(swap.size() == 2);
  REQUIRE(swap[0].assignment == identity_assignment(2));
  auto dia = enumerate_automorphisms(augment(antichain(2)).poset);
  REQUIRE(dia.size() == 2);
  for (const auto& f : dia) {
    REQUIRE(f(2) == 2);
    REQUIRE(f(3) == 3);
  }
  REQUIRE(testcheck::code_of([] { enumerate_automorphisms(antichain(11)); }) == ErrorCode::size_limit_exceeded);
}

TEST_CASE("naturally labelled poset counts match the known sequence") {
  const std::size_t expected[] = {1, 1, 2, 7, 40, 357, 4824};
  for (std::size_t n = 0; n <= 6; ++n) REQUIRE(testgen::natural_down_masks(n).size() == expected[n]);
}

TEST_CASE("property: closure is idempotent and opposite is an involution") {
  testgen::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    Poset p = testgen::random_poset(rng, testgen::uniform_size(rng, 0, 8));
    std::vector<Subset> rows;
    for (Element x = 0; x < p.size(); ++x) rows.push_back(p.up_set(x));
    REQUIRE(same_order(Poset::from_relation(p.names(), rows), p));
    REQUIRE(same_order(opposite(opposite(p)), p));
    for (Element x = 0; x < p.size(); ++x) {
      REQUIRE(p.leq(x, x));
      for (Element y = 0; y < p.size(); ++y) {
        if (x != y) REQUIRE_FALSE((p.leq(x, y) && p.leq(y, x)));
        for (Element z = 0; z < p.size(); ++z)
          if (p.leq(x, y) && p.leq(y, z)) REQUIRE(p.leq(x, z));
      }
    }
  }
}

TEST_CASE("property: covers regenerate the order") {
  testgen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    Poset p = testgen::random_poset(rng, testgen::uniform_size(rng, 1, 8));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (auto [a, b] : p.covers()) pairs.emplace_back(p.name(a), p.name(b));
    REQUIRE(same_order(make_poset(p.names(), pairs), p));
    auto lin = p.linear_extension();
    for (std::size_t i1 = 0; i1 < lin.size(); ++i1)
      for (std::size_t i2 = i1 + 1; i2 < lin.size(); ++i2) REQUIRE_FALSE(p.less(lin[i2], lin[i1]));
  }
}

TEST_CASE("property: augmentation has a unique minimum and maximum and embeds the base") {
  testgen::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Poset p = testgen::random_poset(rng, testgen::uniform_size(rng, 0, 7));
    AugmentedPoset a = augment(p);
    REQUIRE(minimum(a.poset) == a.bottom);
    REQUIRE(maximum(a.poset) == a.top);
    for (Element x = 0; x < p.size(); ++x)
      for (Element y = 0; y < p.size(); ++y) REQUIRE(a.poset.leq(x, y) == p.leq(x, y));
  }
}

TEST_CASE("property: automorphisms match permutation search and form a group") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const Poset& p : testgen::naturally_labelled_posets(n)) {
      auto found = enumerate_automorphisms(p);
      auto naive = oracle::automorphisms(p);
      std::set<Assignment> a, b(naive.begin(), naive.end());
      for (const auto& f : found) a.insert(f.assignment);
      REQUIRE(a == b);
      REQUIRE(found.front().assignment == identity_assignment(n));
      for (const auto& f : found) {
        REQUIRE(a.count(inverse(f.assignment)));
        for (const auto& g : found) REQUIRE(a.count(compose(f.assignment, g.assignment)));
      }
    }
  }
}

TEST_CASE("property: product is componentwise and complete lattices are recognised") {
  testgen::Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    Poset p = testgen::random_poset(rng, testgen::uniform_size(rng, 1, 4));
    Poset q = testgen::random_poset(rng, testgen::uniform_size(rng, 1, 4));
    Poset pq = product(p, q);
    for (Element a = 0; a < pq.size(); ++a)
      for (Element b = 0; b < pq.size(); ++b)
        REQUIRE(pq.leq(a, b) == (p.leq(a / q.size(), b / q.size()) && q.leq(a % q.size(), b % q.size())));
  }
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Poset& p : testgen::naturally_labelled_posets(n))
      REQUIRE(is_complete_lattice(p) == testgen::naive_is_lattice(p));
}
