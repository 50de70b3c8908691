#include <doctest.h>

#include "support/brute.hpp"
#include "surfgen/catalog.hpp"
#include "surfgen/groupfile.hpp"
#include "surfgen/group.hpp"
#include "surfgen/matrix.hpp"

using namespace surfgen;

namespace
{

std::vector<Permutation> gens_of(std::vector<std::string> const &cycles, std::size_t n)
{
  std::vector<Permutation> out;
  for (std::string const &c : cycles)
    out.push_back(parse_cycles(c, n));
  return out;
}

} // namespace

TEST_CASE("random sources are reproducible and split independently")
{
  RandomSource a(7, 3), b(7, 3), c(7, 4);
  std::vector<std::uint64_t> xa, xb, xc;
  for (int i = 0; i < 8; ++i) {
    xa.push_back(a.next());
    xb.push_back(b.next());
    xc.push_back(c.next());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  RandomSource d(7, 3);
  for (int i = 0; i < 1000; ++i)
    CHECK(d.below(13) < 13);
  CHECK(RandomSource(1, 0).split(5).next() == RandomSource(1, 0).split(5).next());
  CHECK(RandomSource(1, 0).split(5).next() != RandomSource(1, 0).split(6).next());
}

TEST_CASE("chain order matches the closure on small groups")
{
  std::vector<std::pair<std::vector<std::string>, std::size_t>> cases = {
      {{"(1,2)", "(1,2,3,4,5,6)"}, 6},
      {{"(1,2,3)", "(1,2,3,4,5,6,7)"}, 7},
      {{"(1,2,3,4)", "(1,3)"}, 4},
      {{"(1,2)(3,4)", "(5,6,7)"}, 7},
      {{"(1,5,2,4)(3,6)", "(2,3)(4,6)"}, 6},
      {{"()"}, 3},
  };
  for (auto const &[cycles, n] : cases) {
    auto gens = gens_of(cycles, n);
    GroupHandle grp = build_group(gens, n);
    CHECK(grp.order() == brute::closure(gens, n).size());
  }
}

TEST_CASE("random subgroups of Sym(7): order, membership, sampling")
{
  RandomSource rng(11, 0);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 4 + rng.below(4);
    std::vector<Permutation> gens;
    std::size_t k = 1 + rng.below(3);
    for (std::size_t i = 0; i < k; ++i) {
      Permutation p = brute::random_permutation(n, rng);
      // Bias towards proper subgroups by taking powers.
      gens.push_back(p.pow(static_cast<long long>(rng.below(3) + 1)));
    }
    GroupHandle grp = build_group(gens, n);
    auto elems = brute::closure(gens, n);
    REQUIRE(grp.order() == elems.size());

    std::unordered_set<Permutation, PermutationHash> members(elems.begin(), elems.end());
    for (Permutation const &e : elems)
      CHECK(grp.contains(e));
    for (int probe = 0; probe < 40; ++probe) {
      Permutation p = brute::random_permutation(n, rng);
      CHECK(grp.contains(p) == members.contains(p));
    }
    for (int draw = 0; draw < 10; ++draw) {
      CHECK(members.contains(grp.uniform_element(rng)));
      CHECK(members.contains(random_element(grp, rng)));
    }

    std::size_t visited = 0;
    grp.for_each_element([&](Permutation const &p) {
      CHECK(members.contains(p));
      ++visited;
      return true;
    });
    CHECK(visited == elems.size());
  }
}

TEST_CASE("uniform elements hit every element of a small group")
{
  GroupHandle grp = build_group(gens_of({"(1,2)", "(1,2,3,4)"}, 4));
  RandomSource rng(12, 0);
  std::unordered_set<Permutation, PermutationHash> hit;
  for (int i = 0; i < 2000; ++i)
    hit.insert(grp.uniform_element(rng));
  CHECK(hit.size() == 24);
}

TEST_CASE("product replacement stays in the group and is seeded")
{
  GroupHandle grp = construct_group("PSL2", 13);
  ProductReplacement a(grp, RandomSource(3, 1)), b(grp, RandomSource(3, 1));
  for (int i = 0; i < 50; ++i) {
    Permutation x = a.next();
    CHECK(grp.contains(x));
    CHECK(x == b.next());
  }
}

TEST_CASE("generation test")
{
  GroupHandle S5 = build_group(gens_of({"(1,2)", "(1,2,3,4,5)"}, 5));
  CHECK(generates_whole(S5, gens_of({"(1,2)", "(1,2,3,4,5)"}, 5)));
  CHECK_FALSE(generates_whole(S5, gens_of({"(1,2,3)", "(1,2,3,4,5)"}, 5)));
  CHECK_FALSE(generates_whole(S5, gens_of({"(1,2)(3,4)", "(1,3)(2,4)"}, 5)));
}

TEST_CASE("finite fields use the smallest irreducible modulus")
{
  GaloisField F9(3, 2), F8(2, 3);
  CHECK(F9.modulus() == std::vector<std::uint32_t>{1, 0});    // x^2 + 1
  CHECK(F8.modulus() == std::vector<std::uint32_t>{1, 1, 0}); // x^3 + x + 1

  for (auto [p, f] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {3, 2}, {5, 2}, {7, 1}, {2, 4}}) {
    GaloisField F(p, f);
    std::uint32_t field_size = F.size();
    for (std::uint32_t a = 0; a < field_size; ++a) {
      FieldElement x = F.element(a);
      CHECK(F.add(x, F.neg(x)) == F.zero());
      if (a != 0)
        CHECK(F.mul(x, F.inv(x)) == F.one());
      for (std::uint32_t b = 0; b < field_size; b += 3) {
        FieldElement y = F.element(b);
        for (std::uint32_t c = 0; c < field_size; c += 5) {
          FieldElement z = F.element(c);
          CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
          CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
        }
      }
    }
    // The primitive element has multiplicative order q - 1.
    FieldElement g = F.primitive();
    std::uint32_t order = 1;
    for (FieldElement x = g; x != F.one(); x = F.mul(x, g))
      ++order;
    CHECK(order == field_size - 1);
  }
}

TEST_CASE("projective line action of SL2")
{
  for (std::uint32_t field_size : {5u, 9u, 16u}) {
    GroupHandle grp = construct_psl2(field_size);
    CHECK(grp.degree() == field_size + 1);
    CHECK(grp.order() == expected_order("PSL2", field_size));
  }
}

TEST_CASE("matrix helpers")
{
  auto F = std::make_shared<GaloisField const>(5, 1);
  Matrix m(F, 2, {F->element(1), F->element(2), F->element(3), F->element(4)});
  Matrix id = Matrix::identity(F, 2);
  CHECK(m * id == m);
  CHECK(m.determinant() == F->element((4 + 5 * 5 - 6) % 5));
  FieldVector v = normalize_projective(*F, {F->element(0), F->element(3)});
  CHECK(v[0] == F->zero());
  CHECK(v[1] == F->one());
}

TEST_CASE("group files round trip and gate the declared order")
{
  std::string text = "perm 5\nname S5\n# comment\norder 120\ngen (1,2)\ngen (1,2,3,4,5)\n";
  GroupHandle grp = build_from_definition(parse_group_definition(text));
  CHECK(grp.order() == 120);
  CHECK(grp.name() == "S5");
  GroupHandle H = build_from_definition(
      parse_group_definition(format_perm_group("S5", grp.generators(), grp.order())));
  CHECK(H.order() == 120);

  CHECK_THROWS_AS(build_from_definition(parse_group_definition("perm 5\norder 60\ngen (1,2)\n"
                                                               "gen (1,2,3,4,5)\n")),
                  Error);
  CHECK_THROWS_AS(parse_group_definition("perm 5\nbogus 1\n"), Error);
  CHECK_THROWS_AS(parse_group_definition("perm 5\ngen (1,6)\n"), Error);

  std::string matrix = "matrix 2 1 2\ngen 1 1 0 1\ngen 0 1 1 0\norder 6\n";
  CHECK(build_from_definition(parse_group_definition(matrix)).order() == 6);
}
