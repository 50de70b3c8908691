#include <doctest.h>

#include "support/brute.hpp"
#include "surfgen/catalog.hpp"
#include "surfgen/structconst.hpp"

using namespace surfgen;

namespace
{

/// sum of coeffs[k] q^k, written as an explicit power sum.
BigInt power_sum(BigInt const &field_size, std::vector<std::pair<int, long long>> const &terms)
{
  BigInt total = 0;
  for (auto [k, c] : terms) {
    BigInt p = 1;
    for (int i = 0; i < k; ++i)
      p *= field_size;
    total += c * p;
  }
  return total;
}

std::vector<ConjugacyClass> order_classes(GroupHandle const &grp, std::uint64_t m)
{
  RandomSource rng(0, m);
  return classes_of_order(grp, m, rng);
}

} // namespace

TEST_CASE("count_dijl agrees with brute-force products on small groups")
{
  for (auto [name, field_size] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"PSL2", 7}, {"PSL2", 8}, {"PSL2", 11}}) {
    GroupHandle grp = construct_group(name, field_size);
    brute::Classes ref = brute::conjugacy_classes(brute::closure(grp.generators(), grp.degree()));
    std::vector<ConjugacyClass> classes = all_classes(grp);
    std::vector<std::size_t> ref_of;
    for (ConjugacyClass const &C : classes)
      ref_of.push_back(ref.id.at(C.representative));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        auto landing = brute::product_landing(ref, ref_of[i], ref_of[j]);
        for (std::size_t l = 0; l < classes.size(); ++l) {
          // pairs landing in Cl, divided by |Cl|, is d_ijl.
          std::uint64_t per = landing[ref_of[l]] / ref.members[ref_of[l]].size();
          CHECK(landing[ref_of[l]] % ref.members[ref_of[l]].size() == 0);
          CHECK(count_dijl(classes[i], classes[j], classes[l]) == per);
        }
      }
    }
  }
}

TEST_CASE("class equation: sum over l of d_ijl |Cl| is |Ci| |Cj|")
{
  GroupHandle grp = construct_group("PSL2", 13);
  std::vector<ConjugacyClass> classes = all_classes(grp);
  for (std::size_t i = 0; i < classes.size(); i += 2) {
    for (std::size_t j = 1; j < classes.size(); j += 3) {
      BigInt total = 0;
      for (ConjugacyClass const &cls_l : classes)
        total += count_dijl(classes[i], classes[j], cls_l, 2) * cls_l.size;
      CHECK(total == classes[i].size * classes[j].size);
    }
  }
}

TEST_CASE("parallel and serial counts agree")
{
  GroupHandle grp = construct_group("PSL2", 19);
  auto fives = order_classes(grp, 5), nines = order_classes(grp, 9);
  REQUIRE(!fives.empty());
  REQUIRE(!nines.empty());
  CHECK(count_dijl(fives[0], nines[0], fives[0], 1) == count_dijl(fives[0], nines[0], fives[0], 4));
}

TEST_CASE("desk-scale structure constants")
{
  SUBCASE("PSL2(9): involutions and either class of order 5")
  {
    GroupHandle grp = construct_group("PSL2", 9);
    auto twos = order_classes(grp, 2), fives = order_classes(grp, 5);
    REQUIRE(twos.size() == 1);
    REQUIRE(fives.size() == 2);
    for (ConjugacyClass const &cls_b : fives) {
      CHECK(count_dijl(twos[0], cls_b, twos[0]) == 8);
      CHECK(count_dijl(cls_b, twos[0], cls_b) == 10);
    }
  }
  SUBCASE("PSL2(11): two elements of order 6 with product of order 3")
  {
    GroupHandle grp = construct_group("PSL2", 11);
    auto sixes = order_classes(grp, 6), threes = order_classes(grp, 3);
    REQUIRE(sixes.size() == 1);
    REQUIRE(threes.size() == 1);
    CHECK(count_dijl(sixes[0], sixes[0], threes[0]) == 13);
  }
  SUBCASE("PSL2(19): orders 5 and 9")
  {
    GroupHandle grp = construct_group("PSL2", 19);
    auto fives = order_classes(grp, 5), nines = order_classes(grp, 9);
    CHECK(count_dijl(nines[0], fives[0], nines[0]) == 36);
    CHECK(count_dijl(fives[0], nines[0], fives[0]) == 40);
  }
  SUBCASE("PSp4(3): orders 5 and 9")
  {
    GroupHandle grp = construct_group("PSp4", 3);
    auto fives = order_classes(grp, 5), nines = order_classes(grp, 9);
    REQUIRE(!fives.empty());
    REQUIRE(!nines.empty());
    CHECK(count_dijl(fives[0], nines[0], fives[0], 4) == 585);
    CHECK(count_dijl(nines[0], fives[0], nines[0], 4) == 567);
  }
}

TEST_CASE("Suzuki polynomials against a direct evaluation")
{
  for (std::uint64_t field_size : {8u, 32u, 128u, 512u}) {
    auto params = GenericFamilyParams::make(Family::Suzuki, field_size);
    BigInt field = field_size, t = 2 * params.root;
    CHECK(params.alpha * params.beta * params.gamma == (field - 1) * (field * field + 1));
    CHECK(suzuki_d(params, "123") == field * field * field + field * field * (t + 1) + field + t + 1);
    CHECK(suzuki_d(params, "121") == field * field * field + (1 + t) * field * field + field + (1 + t));
    CHECK(suzuki_d(params, "212") == field * field * field + (1 + t) * field * field - field - (1 + t));
    CHECK(suzuki_d(params, "232") == field * field * field + (1 - t) * field * field - field - (1 - t));
    CHECK(suzuki_d(params, "323") == field * field * field + (1 - t) * field * field + field + (1 - t));
    CHECK(suzuki_d(params, "131") == field * field * field - field * field + (2 * t - 1) * field + 1);
    CHECK(suzuki_d(params, "313") == field * field * field - field * field - (2 * t + 1) * field + 1);
  }
  auto P8 = GenericFamilyParams::make(Family::Suzuki, 8);
  CHECK(suzuki_d(P8, "123") == 845);
  CHECK(suzuki_d(P8, "313") == 377);
}

TEST_CASE("3D4 and 2G2 polynomials term by term")
{
  for (std::uint64_t field_size : {2u, 3u, 4u, 5u, 7u}) {
    auto params = GenericFamilyParams::make(Family::D4, field_size);
    BigInt field = field_size;
    std::vector<std::pair<int, long long>> common = {
        {20, 1}, {19, -2}, {18, 1}, {17, 2}, {16, -4}, {15, 2}, {14, 1}, {13, -2}, {12, 1},
        {8, 1},  {7, -2},  {6, 1},  {5, 2},  {4, -4},  {3, 2},  {2, 1},  {1, -2},  {0, 1}};
    auto d121 = common, d212 = common;
    d121.insert(d121.end(), {{11, 4}, {10, -8}, {9, 4}});
    d212.insert(d212.end(), {{11, -8}, {10, 16}, {9, -8}});
    CHECK(d4_d(params, "121") == power_sum(field, d121));
    CHECK(d4_d(params, "212") == power_sum(field, d212));
    CHECK(params.alpha == field * field * field * field - field * field + 1);
    CHECK(params.beta == field * field + field + 1);
  }
  for (std::uint64_t field_size : {27u, 243u, 2187u}) {
    auto params = GenericFamilyParams::make(Family::G2, field_size);
    BigInt field = field_size, root = params.root;
    CHECK(3 * root * root == field);
    BigInt u = 2 - 3 * root, v = 1 - 3 * root;
    BigInt q2 = field * field, q3 = q2 * field, q4 = q3 * field, q5 = q4 * field;
    CHECK(g2_d(params, "121") == q5 + u * q4 + v * q3 + q2 + u * field + v);
    CHECK(g2_d(params, "212") == q5 + u * q4 + v * q3 - q2 - u * field - v);
    CHECK(g2_d(params, "121") > 0);
    CHECK(g2_d(params, "212") > 0);
  }
}

TEST_CASE("family parameters reject values outside their domain")
{
  CHECK_THROWS_AS(GenericFamilyParams::make(Family::Suzuki, 16), Error);
  CHECK_THROWS_AS(GenericFamilyParams::make(Family::Suzuki, 2), Error);
  CHECK_THROWS_AS(GenericFamilyParams::make(Family::G2, 3), Error);
  CHECK_THROWS_AS(GenericFamilyParams::make(Family::G2, 81), Error);
  CHECK_THROWS_AS(GenericFamilyParams::make(Family::D4, 6), Error);
  CHECK_THROWS_AS(GenericFamilyParams::make(Family::PSL2, 8), Error);
  auto params = GenericFamilyParams::make(Family::PSL2, 19);
  CHECK(params.epsilon == -1);
  CHECK(params.alpha == 5);
  CHECK(params.beta == 10);
  CHECK(params.gamma == 9);
  CHECK(is_prime_power(49));
  CHECK_FALSE(is_prime_power(12));
  CHECK_THROWS_AS(suzuki_d(params, "123"), Error);
}
