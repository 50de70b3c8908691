#include <doctest.h>

#include "support/brute.hpp"
#include "surfgen/catalog.hpp"
#include "surfgen/hurwitz.hpp"

using namespace surfgen;

namespace
{

std::vector<std::pair<std::uint64_t, std::uint64_t>> plain(std::vector<Branch> const &bs)
{
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (Branch const &b : bs)
    out.emplace_back(b.order, b.count);
  return out;
}

} // namespace

TEST_CASE("spot genus values")
{
  auto g = [](std::uint64_t order, std::uint64_t g0, std::vector<Branch> bs) {
    GenusResult r = genus_from(order, g0, bs);
    REQUIRE(r.genus.has_value());
    return *r.genus;
  };
  CHECK(g(2520, 1, {{5, 1}}) == 1009);
  CHECK(g(2520, 1, {{5, 1}, {7, 1}}) == 2089);
  CHECK(g(504, 0, {{2, 1}, {7, 2}, {9, 2}}) == 503);
  CHECK(g(7920, 1, {{5, 1}}) == 3169);
  CHECK(brute::genus(2520, 1, {{5, 1}}) == 1009);
  CHECK(brute::genus(504, 0, {{2, 1}, {7, 2}, {9, 2}}) == 503);
}

TEST_CASE("non-integral genus is reported")
{
  GenusResult r = genus_from(10, 0, {{3, 1}});
  CHECK_FALSE(r.genus.has_value());
  CHECK(brute::genus(10, 0, {{3, 1}}) == -1);
}

TEST_CASE("genus agrees with an independent fraction computation")
{
  RandomSource rng(9, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uint64_t order = 1 + rng.below(100000);
    std::uint64_t g0 = rng.below(4);
    std::vector<Branch> bs;
    std::size_t k = rng.below(5);
    for (std::size_t i = 0; i < k; ++i)
      bs.push_back({2 + rng.below(30), 1 + rng.below(3)});
    GenusResult r = genus_from(order, g0, bs);
    brute::Int ref = brute::genus(order, g0, plain(bs));
    if (ref == -1) {
      CHECK_FALSE(r.genus.has_value());
    } else {
      REQUIRE(r.genus.has_value());
      CHECK(*r.genus == ref);
    }
  }
}

TEST_CASE("branch parsing and formatting")
{
  CHECK(parse_branch("7:2") == Branch{7, 2});
  CHECK_THROWS_AS(parse_branch("7"), Error);
  CHECK_THROWS_AS(parse_branch("x:1"), Error);
  CHECK(format_branches(sorted_branches({{9, 2}, {2, 1}, {7, 1}})) == "2:1 7:1 9:2");
  CHECK(branch_point_count({{9, 2}, {2, 1}}) == 3);
}

TEST_CASE("cogenus floor rule and overrides")
{
  CHECK(cogenus_floor({{5, 1}}) == 1);
  CHECK(cogenus_floor({{5, 1}, {7, 1}}) == 1);
  CHECK(cogenus_floor({{2, 1}, {7, 2}}) == 0);
  CHECK(cogenus_floor({{2, 1}}, "2a") == 2);
  CHECK(cogenus_floor({{2, 1}}, "3a") == 2);
  CHECK(cogenus_floor({{2, 1}, {3, 2}}, "2c") == 1);
}

TEST_CASE("datum validation")
{
  HurwitzDatum datum{2520, 1009, 1, {{5, 1}}};
  CHECK(validate_datum(datum).accepted());
  HurwitzDatum wrong = datum;
  wrong.genus = 1008;
  CHECK_FALSE(validate_datum(wrong).formula_holds);
  HurwitzDatum low{168, 0, 1, {{2, 1}}};
  low.genus = *genus_from(168, 1, {{2, 1}}).genus;
  CHECK_FALSE(validate_datum(low, "2a").cogenus_admissible);
  HurwitzDatum bad{168, 0, 1, {{1, 1}}};
  CHECK_FALSE(validate_datum(bad).branches_valid);
}

TEST_CASE("every catalog line has an integral minimal genus of at least 2")
{
  for (TableLine const &line : catalog_lines()) {
    INFO(line.display_id());
    HurwitzDatum datum = minimal_cogenus_datum(line);
    CHECK(datum.genus >= 2);
    CHECK(datum.cogenus >= line.cogenus_floor);
    CHECK(validate_datum(datum, line.id).accepted());
    CHECK(brute::genus(datum.group_order, datum.cogenus, plain(datum.branches)) == datum.genus);
    if (datum.cogenus > line.cogenus_floor) {
      GenusResult lower = genus_from(datum.group_order, datum.cogenus - 1, datum.branches);
      CHECK((!lower.genus || *lower.genus < 2));
    }
  }
}
