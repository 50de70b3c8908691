#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "surfgen/group.hpp"

namespace surfgen
{

using Rational = boost::multiprecision::cpp_rational;

/// One branching: n orbits whose point stabilizers have order m.
struct Branch
{
  std::uint64_t order = 2;  // m
  std::uint64_t count = 1;  // n

  friend bool operator==(Branch const &, Branch const &) = default;
  friend auto operator<=>(Branch const &, Branch const &) = default;
};

struct HurwitzDatum
{
  BigInt group_order = 1;
  BigInt genus = 0;
  std::uint64_t cogenus = 0;
  std::vector<Branch> branches;
};

/// Branches sorted by (m, n); data compare equal when these agree.
std::vector<Branch> sorted_branches(std::vector<Branch> const &branches);

/// Parses "m:n".
Branch parse_branch(std::string_view text);

std::string format_branches(std::vector<Branch> const &branches);

/// Total number of branch points, the sum of the n.
std::uint64_t branch_point_count(std::vector<Branch> const &branches);

struct GenusResult
{
  Rational twice_genus_minus_two; // 2(g - 1)
  std::optional<BigInt> genus;    // empty when 2(g-1) is not an even integer
};

/// Solves 2(g-1) = |G| (2(g0-1) + sum n (1 - 1/m)) for g exactly.
GenusResult genus_from(BigInt const &group_order, std::uint64_t cogenus,
                       std::vector<Branch> const &branches);

/// Smallest admissible cogenus: 0 with at least three branch points,
/// otherwise 1, unless a known line tag raises it (2a, 3a: 2; 2c: 1).
std::uint64_t cogenus_floor(std::vector<Branch> const &branches,
                            std::optional<std::string_view> line_tag = std::nullopt);

struct DatumVerdict
{
  bool formula_holds = false;
  bool genus_at_least_two = false;
  bool cogenus_admissible = false;
  bool branches_valid = false;
  std::vector<std::string> failures;

  bool accepted() const
  {
    return formula_holds && genus_at_least_two && cogenus_admissible && branches_valid;
  }
};

DatumVerdict validate_datum(HurwitzDatum const &datum,
                            std::optional<std::string_view> line_tag = std::nullopt);

/// The datum with the smallest admissible cogenus whose genus is at least 2.
/// Throws when the genus is not integral.
HurwitzDatum minimal_cogenus_datum(BigInt const &group_order, std::vector<Branch> const &branches,
                                   std::uint64_t floor);

} // namespace surfgen
