#include <algorithm>
#include <sstream>

#include "surfgen/hurwitz.hpp"

namespace surfgen
{

std::vector<Branch> sorted_branches(std::vector<Branch> const &branches)
{
  std::vector<Branch> out = branches;
  std::sort(out.begin(), out.end());
  return out;
}

Branch parse_branch(std::string_view text)
{
  std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error("branch '" + std::string(text) + "' is not of the form m:n");
  auto number = [&](std::string_view s) {
    std::string str(s);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(str, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (str.empty() || used != str.size() || str.front() == '-')
      throw Error("branch '" + std::string(text) + "' is not of the form m:n");
    return static_cast<std::uint64_t>(v);
  };
  Branch b{number(text.substr(0, colon)), number(text.substr(colon + 1))};
  if (b.order < 2 || b.count < 1)
    throw Error("branch '" + std::string(text) + "' needs m >= 2 and n >= 1");
  return b;
}

std::string format_branches(std::vector<Branch> const &branches)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < branches.size(); ++i)
    out << (i ? " " : "") << branches[i].order << ":" << branches[i].count;
  return out.str();
}

std::uint64_t branch_point_count(std::vector<Branch> const &branches)
{
  std::uint64_t total = 0;
  for (Branch const &b : branches)
    total += b.count;
  return total;
}

GenusResult genus_from(BigInt const &group_order, std::uint64_t cogenus,
                       std::vector<Branch> const &branches)
{
  Rational bracket = Rational(2) * (Rational(BigInt(cogenus)) - 1);
  for (Branch const &b : branches)
    bracket += Rational(BigInt(b.count)) * (Rational(1) - Rational(BigInt(1), BigInt(b.order)));

  GenusResult r;
  r.twice_genus_minus_two = Rational(group_order) * bracket;
  if (denominator(r.twice_genus_minus_two) == 1) {
    BigInt t = numerator(r.twice_genus_minus_two);
    if (t % 2 == 0)
      r.genus = t / 2 + 1;
  }
  return r;
}

std::uint64_t cogenus_floor(std::vector<Branch> const &branches,
                            std::optional<std::string_view> line_tag)
{
  if (line_tag) {
    if (*line_tag == "2a" || *line_tag == "3a")
      return 2;
    if (*line_tag == "2c")
      return 1;
  }
  return branch_point_count(branches) >= 3 ? 0 : 1;
}

DatumVerdict validate_datum(HurwitzDatum const &datum, std::optional<std::string_view> line_tag)
{
  DatumVerdict v;

  v.branches_valid = datum.group_order >= 1;
  for (Branch const &b : datum.branches) {
    if (b.order < 2 || b.count < 1)
      v.branches_valid = false;
  }
  if (!v.branches_valid) {
    v.failures.push_back("branch orders must be at least 2 with positive counts");
    return v;
  }

  GenusResult r = genus_from(datum.group_order, datum.cogenus, datum.branches);
  v.formula_holds = r.genus && *r.genus == datum.genus;
  if (!v.formula_holds) {
    std::ostringstream msg;
    msg << "formula violated: 2(g-1) = " << 2 * (datum.genus - 1) << " but the right side is "
        << r.twice_genus_minus_two;
    v.failures.push_back(msg.str());
  }

  v.genus_at_least_two = datum.genus >= 2;
  if (!v.genus_at_least_two)
    v.failures.push_back("genus must be at least 2");

  std::uint64_t floor = cogenus_floor(datum.branches, line_tag);
  v.cogenus_admissible = datum.cogenus >= floor;
  if (!v.cogenus_admissible) {
    std::string where = line_tag ? "line " + std::string(*line_tag) : std::string("this datum");
    v.failures.push_back(where + " requires g0 >= " + std::to_string(floor));
  }
  return v;
}

HurwitzDatum minimal_cogenus_datum(BigInt const &group_order, std::vector<Branch> const &branches,
                                   std::uint64_t floor)
{
  HurwitzDatum datum;
  datum.group_order = group_order;
  datum.branches = branches;
  for (std::uint64_t g0 = floor;; ++g0) {
    GenusResult r = genus_from(group_order, g0, branches);
    if (!r.genus) {
      std::ostringstream msg;
      msg << "non-integral genus at cogenus " << g0 << ": 2(g-1) = " << r.twice_genus_minus_two;
      throw Error(msg.str());
    }
    if (*r.genus >= 2) {
      datum.cogenus = g0;
      datum.genus = *r.genus;
      return datum;
    }
  }
}

} // namespace surfgen
