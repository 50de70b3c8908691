#include <doctest.h>

#include <filesystem>

#include "surfgen/catalog.hpp"
#include "surfgen/genvec.hpp"
#include "surfgen/tuplefile.hpp"

using namespace surfgen;

namespace
{

TableLine line_named(std::string const &display)
{
  for (TableLine const &l : catalog_lines()) {
    if (l.display_id() == display)
      return l;
  }
  throw Error("no line " + display);
}

GeneratingTuple fixture(std::string const &id, GroupHandle const &grp)
{
  return load_tuple_file(data_dir() / "tuples" / (id + ".tup"), grp.degree()).tuple;
}

std::size_t entry_of_order(GeneratingTuple const &t, std::uint64_t m)
{
  for (std::size_t i = 0; i < t.branch.size(); ++i) {
    if (t.declared_orders[i] == m)
      return i;
  }
  throw Error("no entry of that order");
}

} // namespace

TEST_CASE("every bundled fixture is accepted for its line")
{
  std::size_t seen = 0;
  for (TableLine const &line : catalog_lines()) {
    auto path = data_dir() / "tuples" / (line.id + ".tup");
    if (line.entry->series || !std::filesystem::exists(path))
      continue;
    INFO(line.id);
    GroupHandle grp = construct_group(line.entry->group, line.field_size);
    TupleFile tf = load_tuple_file(path, grp.degree());
    HurwitzDatum datum = minimal_cogenus_datum(line);
    Verdict v = test_tuple(grp, datum, tf.tuple);
    CHECK(v.cond_a);
    CHECK(v.cond_b);
    CHECK(v.cond_c);
    ++seen;
  }
  CHECK(seen == 20);
}

TEST_CASE("each criterion can fail on its own")
{
  GroupHandle grp = construct_group("PSL2", 7);
  TableLine line = line_named("2e");
  HurwitzDatum datum = minimal_cogenus_datum(line);
  GeneratingTuple good = fixture("2e", grp);
  REQUIRE(test_tuple(grp, datum, good).accepted());

  GeneratingTuple wrong_order = good;
  wrong_order.declared_orders[0] = 4;
  Verdict v1 = test_tuple(grp, datum, wrong_order);
  CHECK_FALSE(v1.cond_a);
  CHECK(v1.cond_b);

  GeneratingTuple wrong_product = good;
  wrong_product.branch[0] = conjugate(good.branch[0], good.branch[1]);
  Verdict v2 = test_tuple(grp, datum, wrong_product);
  CHECK(v2.cond_a);
  CHECK_FALSE(v2.cond_b);

  // x, x^-1 and the identity pad: relations hold, generation fails.
  Permutation x = good.branch[2];
  GeneratingTuple cyclic;
  cyclic.branch = {x, ~x};
  cyclic.declared_orders = {7, 7};
  HurwitzDatum dc{grp.order(), 0, 0, {{7, 2}}};
  Verdict v3 = test_tuple(grp, dc, cyclic);
  CHECK(v3.cond_a);
  CHECK(v3.cond_b);
  CHECK_FALSE(v3.cond_c);

  HurwitzDatum other = datum;
  other.cogenus = 1;
  CHECK_FALSE(test_tuple(grp, other, good).cond_a);

  GeneratingTuple foreign = good;
  foreign.branch[0] = parse_cycles("(1,2)", grp.degree());
  CHECK_THROWS_AS(test_tuple(grp, datum, foreign), Error);
}

TEST_CASE("splitting an entry keeps the relations")
{
  GroupHandle grp = construct_group("PSL2", 8);
  GeneratingTuple base = fixture("3f", grp);
  std::size_t k7 = entry_of_order(base, 7);
  GeneratingTuple t = split_entry(base, k7, 2, 6);
  CHECK(t.branch.size() == base.branch.size() + 1);
  CHECK(tuple_product(t, grp.degree()).is_identity());
  CHECK(t.branch[k7] == base.branch[k7].pow(2));
  CHECK(t.branch[k7 + 1] == base.branch[k7].pow(6));

  CHECK_THROWS_AS(split_entry(base, k7, 2, 5), Error);
  CHECK_THROWS_AS(split_entry(base, k7, 7, 1), Error);
  CHECK_THROWS_AS(split_entry(base, 10, 1, 0), Error);

  TableLine l3g = line_named("3g");
  CHECK(test_tuple(grp, minimal_cogenus_datum(l3g), t).accepted());
}

TEST_CASE("lifting the cogenus pads with trivial handles")
{
  GroupHandle grp = construct_group("PSL2", 7);
  GeneratingTuple base = fixture("2e", grp);
  GeneratingTuple t = lift_cogenus(base, 2, grp.degree());
  CHECK(t.cogenus() == 2);
  CHECK(tuple_product(t, grp.degree()).is_identity());
  HurwitzDatum datum{grp.order(), 0, 2, {{2, 1}, {3, 1}, {7, 1}}};
  datum.genus = *genus_from(datum.group_order, 2, datum.branches).genus;
  CHECK(test_tuple(grp, datum, t).accepted());
}

TEST_CASE("commutator solving")
{
  GroupHandle grp = construct_group("M11", 0);
  SearchBudget budget;
  budget.rng = RandomSource(21, 0);
  ClassCache cache(grp);
  for (std::uint64_t m : {5u, 11u, 2u}) {
    Permutation z = element_of_order(grp, m, budget.rng);
    auto [a, b] = commutator_solve(grp, z, budget, cache);
    CHECK(commutator(a, b) == z);
  }
  Permutation x = element_of_order(grp, 5, budget.rng);
  CommutatorOptions co;
  co.a_order = 11;
  co.generate_with = {x};
  auto [a, b] = commutator_solve(grp, x, budget, cache, co);
  CHECK(commutator(a, b) == x);
  CHECK(a.order() == 11);
  CHECK(generates_whole(grp, {a, x}));
}

TEST_CASE("constructions from two classes with nonzero mixed coefficients")
{
  GroupHandle grp = construct_group("PSL2", 19);
  RandomSource rng(5, 0);
  auto fives = classes_of_order(grp, 5, rng), nines = classes_of_order(grp, 9, rng);
  ConjugacyClass const &cls_a = fives.at(0), &cls_b = nines.at(0);

  struct Case
  {
    MaxVariant variant;
    std::uint64_t cogenus;
    std::vector<Branch> branches;
  };
  std::vector<Case> cases = {
      {MaxVariant::one_c, 1, {{9, 1}}},
      {MaxVariant::two_c, 1, {{5, 1}, {9, 1}}},
      {MaxVariant::split_21, 0, {{5, 2}, {9, 1}}},
      {MaxVariant::split_12, 0, {{5, 1}, {9, 2}}},
  };
  for (Case const &c : cases) {
    GeneratingTuple t = two_class_build(grp, cls_a, cls_b, c.variant);
    HurwitzDatum datum{grp.order(), 0, c.cogenus, c.branches};
    datum.genus = *genus_from(datum.group_order, c.cogenus, c.branches).genus;
    Verdict v = test_relations(grp, datum, t);
    CHECK(v.cond_a);
    CHECK(v.cond_b);
    // No maximal subgroup of PSL2(19) has order divisible by 45.
    CHECK(test_tuple(grp, datum, t).accepted());
  }
}

TEST_CASE("find_tuple is deterministic and returns accepted tuples")
{
  TableLine line = line_named("5a@13");
  GroupHandle grp = construct_group(line.entry->group, line.field_size);
  HurwitzDatum datum = minimal_cogenus_datum(line);
  SearchBudget b;
  b.rng = RandomSource(0, 1);
  b.seconds = 60;
  FindResult r1 = find_tuple(grp, datum, b), r2 = find_tuple(grp, datum, b);
  REQUIRE(r1.tuple.has_value());
  REQUIRE(r2.tuple.has_value());
  CHECK(r1.attempts == r2.attempts);
  CHECK(r1.tuple->entries() == r2.tuple->entries());
  CHECK(test_tuple(grp, datum, *r1.tuple).accepted());
}

TEST_CASE("equal orders come from distinct classes when several exist")
{
  TableLine line = line_named("3c");
  GroupHandle grp = construct_group(line.entry->group, line.field_size);
  HurwitzDatum datum = minimal_cogenus_datum(line);
  SearchBudget b;
  b.rng = RandomSource(3, 3);
  FindResult r = find_tuple(grp, datum, b);
  REQUIRE(r.tuple.has_value());
  CHECK(test_tuple(grp, datum, *r.tuple).accepted());
  std::vector<Permutation> sevens;
  for (std::size_t i = 0; i < r.tuple->branch.size(); ++i) {
    if (r.tuple->declared_orders[i] == 7)
      sevens.push_back(r.tuple->branch[i]);
  }
  REQUIRE(sevens.size() == 2);
  ClassCache cache(grp);
  CHECK_FALSE(cache.conjugate(sevens[0], sevens[1]));
}

TEST_CASE("search reports failure within its budget")
{
  // PSL2(7) has no element of order 5.
  GroupHandle grp = construct_group("PSL2", 7);
  HurwitzDatum datum{grp.order(), 0, 1, {{5, 1}}};
  SearchBudget b;
  b.max_attempts = 50;
  b.seconds = 5;
  FindResult r = find_tuple(grp, datum, b);
  CHECK_FALSE(r.tuple.has_value());
  CHECK_FALSE(r.failure.empty());
}

TEST_CASE("split_entry and lift_cogenus preserve acceptance over the fixtures")
{
  RandomSource rng(17, 0);
  for (TableLine const &line : catalog_lines()) {
    auto path = data_dir() / "tuples" / (line.id + ".tup");
    if (line.entry->series || !std::filesystem::exists(path))
      continue;
    INFO(line.id);
    GroupHandle grp = construct_group(line.entry->group, line.field_size);
    GeneratingTuple t = load_tuple_file(path, grp.degree()).tuple;
    HurwitzDatum datum = minimal_cogenus_datum(line);
    REQUIRE(test_tuple(grp, datum, t).accepted());

    GeneratingTuple lifted = lift_cogenus(t, t.cogenus() + 1, grp.degree());
    HurwitzDatum dl = datum;
    dl.cogenus += 1;
    dl.genus = *genus_from(dl.group_order, dl.cogenus, dl.branches).genus;
    CHECK(test_tuple(grp, dl, lifted).accepted());

    std::size_t k = rng.below(t.branch.size());
    long long m = static_cast<long long>(t.declared_orders[k]);
    std::vector<long long> us;
    for (long long u = 1; u < m; ++u) {
      if (std::gcd(u, m) == 1 && std::gcd(((1 - u) % m + m) % m, m) == 1)
        us.push_back(u);
    }
    if (us.empty())
      continue; // m even: u and 1 - u cannot both be odd
    long long u = us[rng.below(us.size())];
    GeneratingTuple split = split_entry(t, k, u, 1 - u);
    HurwitzDatum ds = datum;
    ds.branches.push_back({static_cast<std::uint64_t>(m), 1});
    GenusResult gr = genus_from(ds.group_order, ds.cogenus, ds.branches);
    REQUIRE(gr.genus.has_value());
    ds.genus = *gr.genus;
    CHECK(test_tuple(grp, ds, split).accepted());
  }
}
