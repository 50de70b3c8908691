#include <doctest.h>

#include <map>

#include "support/brute.hpp"
#include "surfgen/catalog.hpp"
#include "surfgen/classes.hpp"

using namespace surfgen;

TEST_CASE("class partition matches brute-force conjugation orbits")
{
  for (auto [name, field_size] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"PSL2", 7}, {"PSL2", 8}, {"PSL2", 11}, {"Alt7", 0}}) {
    GroupHandle grp = construct_group(name, field_size);
    auto elems = brute::closure(grp.generators(), grp.degree());
    brute::Classes ref = brute::conjugacy_classes(elems);
    std::vector<ConjugacyClass> classes = all_classes(grp);
    REQUIRE(classes.size() == ref.members.size());

    BigInt total = 0;
    std::map<std::size_t, std::size_t> matched;
    for (ConjugacyClass const &C : classes) {
      std::size_t k = ref.id.at(C.representative);
      CHECK(C.size == ref.members[k].size());
      CHECK(C.size * C.centralizer_order == grp.order());
      CHECK(++matched[k] == 1);
      for (Permutation const &x : ref.members[k]) {
        REQUIRE(C.contains(x));
        auto w = C.witness_for(x);
        REQUIRE(w.has_value());
        CHECK(conjugate(C.representative, *w) == x);
      }
      total += C.size;
    }
    CHECK(total == grp.order());
  }
}

TEST_CASE("fingerprint mode gives the same class sizes")
{
  GroupHandle grp = construct_group("M11", 0);
  RandomSource rng(1, 0);
  for (std::uint64_t m : {2u, 4u, 5u, 11u}) {
    Permutation x = element_of_order(grp, m, rng);
    CHECK(x.order() == m);
    ConjugacyClass full = class_of(grp, x, true);
    ConjugacyClass light = class_of(grp, x, false);
    CHECK(full.size == light.size);
    CHECK_FALSE(light.materialized());
    CHECK_THROWS_AS(light.contains(x), Error);
  }
}

TEST_CASE("class cap is enforced with a clear error")
{
  GroupHandle grp = construct_group("Alt7", 0);
  Permutation x = parse_cycles("(1,2,3,4,5,6,7)", 7);
  CHECK_THROWS_WITH_AS(class_of(grp, x, true, 100), doctest::Contains("non-materialized"), Error);
  // A7 splits the 7-cycles into two classes of 360.
  CHECK(class_of(grp, x, true, 1000).size == 360);
}

TEST_CASE("representative action")
{
  GroupHandle grp = construct_group("PSL2", 13);
  RandomSource rng(2, 0);
  ClassCache cache(grp);
  for (int trial = 0; trial < 20; ++trial) {
    Permutation a = grp.uniform_element(rng);
    Permutation g = grp.uniform_element(rng);
    Permutation b = conjugate(a, g);
    auto h = representative_action(grp, a, b);
    REQUIRE(h.has_value());
    CHECK(conjugate(a, *h) == b);
    auto h2 = cache.representative_action(a, b);
    REQUIRE(h2.has_value());
    CHECK(conjugate(a, *h2) == b);
    CHECK(cache.conjugate(a, b));
  }
  // Elements of different orders are never conjugate.
  Permutation x3 = element_of_order(grp, 3, rng), x6 = element_of_order(grp, 6, rng);
  CHECK_FALSE(representative_action(grp, x3, x6).has_value());
}

TEST_CASE("classes of a given order")
{
  RandomSource rng(3, 0);
  GroupHandle grp = construct_group("PSL2", 8);
  CHECK(classes_of_order(grp, 7, rng).size() == 3);
  CHECK(classes_of_order(grp, 9, rng).size() == 3);
  CHECK(classes_of_order(grp, 2, rng).size() == 1);
  CHECK(classes_of_order(grp, 5, rng).empty());

  GroupHandle H = construct_group("PSL2", 9);
  CHECK(classes_of_order(H, 5, rng).size() == 2);

  // A sampled group: PSU4(3) has one class of elements of order 5.
  GroupHandle U = construct_group("PSU4", 3);
  auto fives = classes_of_order(U, 5, rng);
  REQUIRE(fives.size() == 1);
  CHECK(fives[0].centralizer_order == 5);
}

TEST_CASE("element_of_order fails loudly when no such element exists")
{
  GroupHandle grp = construct_group("PSL2", 7);
  RandomSource rng(4, 0);
  CHECK_THROWS_AS(element_of_order(grp, 5, rng, 500), Error);
  CHECK(element_of_order(grp, 1, rng).is_identity());
}
