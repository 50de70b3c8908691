#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "surfgen/catalog.hpp"

namespace surfgen
{

namespace
{

BigInt big(std::uint64_t field_size) { return BigInt(field_size); }

BigInt ipow(std::uint64_t field_size, unsigned e)
{
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i)
    r *= field_size;
  return r;
}

BigInt gcd_big(BigInt a, BigInt b)
{
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t isqrt(std::uint64_t n)
{
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

OrderFormula constant(std::uint64_t m)
{
  return {std::to_string(m), [m](std::uint64_t) { return big(m); }};
}

BigInt psl2_order(std::uint64_t field_size)
{
  return big(field_size) * (big(field_size) * field_size - 1) / (field_size % 2 == 1 ? 2 : 1);
}

std::vector<FamilyEntry> build_table()
{
  std::vector<FamilyEntry> t;

  {
    FamilyEntry e;
    e.group = "Alt7";
    e.constraint = "-";
    e.fix4 = {constant(5)};
    e.fix3 = constant(7);
    e.labels = {"1a", "1b"};
    e.catalog_q = {0};
    e.order = [](std::uint64_t) { return big(2520); };
    e.realization = "constructor";
    e.rank = 1;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "PSL2";
    e.constraint = "q=7";
    e.fix4 = {constant(2)};
    e.fix3 = constant(7);
    e.fix2 = {constant(3)};
    e.labels = {"2a", "2b", "2c", "2d", "2e", "2f"};
    e.catalog_q = {7};
    e.order = psl2_order;
    e.realization = "groups/psl2_7_fixture.grp";
    e.rank = 2;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "PSL2";
    e.constraint = "q=8";
    e.fix4 = {constant(2)};
    e.fix2 = {constant(7), constant(9)};
    e.labels = {"3a", "3b", "3c", "3d", "3e", "3f", "3g", "3h", "3i"};
    e.catalog_q = {8};
    e.order = psl2_order;
    e.realization = "groups/psl2_8_fixture.grp";
    e.rank = 3;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "PSU4";
    e.constraint = "q=3";
    e.fix4 = {constant(5)};
    e.fix3 = constant(7);
    e.labels = {"4a", "4b"};
    e.catalog_q = {3};
    e.order = [](std::uint64_t) { return big(3265920); };
    e.realization = "groups/psu4_3.grp";
    e.rank = 4;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "PSL2";
    e.constraint = "q=1mod4";
    e.series = true;
    e.fix4 = {{"(q-1)/4", [](std::uint64_t field_size) { return big((field_size - 1) / 4); }}};
    e.fix2 = {{"(q+1)/2", [](std::uint64_t field_size) { return big((field_size + 1) / 2); }}};
    e.labels = {"5a", "5c", "5d"};
    e.catalog_q = {9, 13, 17, 25};
    e.order = psl2_order;
    e.realization = "constructor";
    e.rank = 5;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "PSL2";
    e.constraint = "q=-1mod4";
    e.series = true;
    e.fix4 = {{"(q+1)/4", [](std::uint64_t field_size) { return big((field_size + 1) / 4); }}};
    e.fix2 = {{"(q-1)/2", [](std::uint64_t field_size) { return big((field_size - 1) / 2); }}};
    e.labels = {"5b", "5e", "5f"};
    e.catalog_q = {11, 19, 23};
    e.order = psl2_order;
    e.realization = "constructor";
    e.rank = 5;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "PSp4";
    e.constraint = "q>=3";
    e.series = true;
    e.fix4 = {{"(q^2+1)/(2,q^2-1)", [](std::uint64_t field_size) {
                 return (ipow(field_size, 2) + 1) / gcd_big(2, ipow(field_size, 2) - 1);
               }}};
    e.labels = {"6"};
    e.catalog_q = {3, 4, 5};
    e.order = [](std::uint64_t field_size) {
      return ipow(field_size, 4) * (ipow(field_size, 2) - 1) * (ipow(field_size, 4) - 1) / gcd_big(2, big(field_size) - 1);
    };
    e.realization = "constructor";
    e.rank = 6;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "Sz";
    e.constraint = "q=2^(2k+1)>=8";
    e.series = true;
    e.fix4 = {{"q+sqrt(2q)+1", [](std::uint64_t field_size) { return big(field_size + isqrt(2 * field_size) + 1); }},
              {"q-sqrt(2q)+1", [](std::uint64_t field_size) { return big(field_size - isqrt(2 * field_size) + 1); }}};
    e.fix2 = {{"q-1", [](std::uint64_t field_size) { return big(field_size - 1); }}};
    e.labels = {"8a", "8b", "8c", "8d", "8e", "8f", "8g", "8h", "8i"};
    e.catalog_q = {8, 32};
    e.order = [](std::uint64_t field_size) { return ipow(field_size, 2) * (ipow(field_size, 2) + 1) * (big(field_size) - 1); };
    e.realization = "constructor";
    e.rank = 8;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "POmega8-";
    e.constraint = "-";
    e.series = true;
    e.fix4 = {{"(q^4+1)/(2,q^4-1)", [](std::uint64_t field_size) {
                 return (ipow(field_size, 4) + 1) / gcd_big(2, ipow(field_size, 4) - 1);
               }}};
    e.labels = {"7"};
    e.catalog_q = {2, 3};
    e.order = [](std::uint64_t field_size) {
      return ipow(field_size, 12) * (ipow(field_size, 4) + 1) * (ipow(field_size, 2) - 1) * (ipow(field_size, 4) - 1) *
             (ipow(field_size, 6) - 1) / gcd_big(4, ipow(field_size, 4) + 1);
    };
    e.realization = "none";
    e.rank = 7;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "3D4";
    e.constraint = "-";
    e.series = true;
    e.fix4 = {{"q^4-q^2+1", [](std::uint64_t field_size) { return ipow(field_size, 4) - ipow(field_size, 2) + 1; }}};
    e.labels = {"9"};
    e.catalog_q = {2, 3};
    e.order = [](std::uint64_t field_size) {
      return ipow(field_size, 12) * (ipow(field_size, 8) + ipow(field_size, 4) + 1) * (ipow(field_size, 6) - 1) * (ipow(field_size, 2) - 1);
    };
    e.realization = "none";
    e.rank = 9;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "2G2";
    e.constraint = "q=3^(2k+1)>=27";
    e.series = true;
    e.fix4 = {{"(q-1)/2", [](std::uint64_t field_size) { return big((field_size - 1) / 2); }}};
    e.labels = {"10"};
    e.catalog_q = {27};
    e.order = [](std::uint64_t field_size) { return ipow(field_size, 3) * (ipow(field_size, 3) + 1) * (big(field_size) - 1); };
    e.realization = "none";
    e.rank = 10;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "M11";
    e.constraint = "-";
    e.fix4 = {constant(5)};
    e.labels = {"11"};
    e.catalog_q = {0};
    e.order = [](std::uint64_t) { return big(7920); };
    e.realization = "groups/m11.grp";
    e.rank = 11;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "M22";
    e.constraint = "-";
    e.fix4 = {constant(5)};
    e.fix3 = constant(7);
    e.labels = {"12a", "12b"};
    e.catalog_q = {0};
    e.order = [](std::uint64_t) { return big(443520); };
    e.realization = "groups/m22.grp";
    e.rank = 12;
    t.push_back(std::move(e));
  }
  {
    FamilyEntry e;
    e.group = "J1";
    e.constraint = "-";
    e.fix4 = {constant(15)};
    e.labels = {"13"};
    e.catalog_q = {0};
    e.order = [](std::uint64_t) { return big(175560); };
    e.realization = "groups/j1.grp";
    e.rank = 13;
    t.push_back(std::move(e));
  }
  return t;
}

std::uint64_t to_u64(BigInt const &v) { return v.convert_to<std::uint64_t>(); }

} // namespace

std::vector<FamilyEntry> const &family_table()
{
  static std::vector<FamilyEntry> const table = build_table();
  return table;
}

std::string TableLine::display_id() const
{
  if (entry->series)
    return id + "@" + std::to_string(field_size);
  return id;
}

std::string TableLine::render() const
{
  std::ostringstream out;
  out << "line " << id << " " << entry->group << " " << (field_size == 0 ? std::string("-") : std::to_string(field_size))
      << " | " << format_branches(branches) << " | g0min " << cogenus_floor;
  return out.str();
}

std::vector<TableLine> enumerate_lines(FamilyEntry const &entry, std::uint64_t field_size)
{
  std::size_t const n4 = entry.fix4.size();
  std::size_t const n2 = entry.fix2.size();
  int const max3 = entry.fix3 ? 1 : 0;

  struct Choice
  {
    int fix3;
    unsigned support2;
    unsigned subset4;
    std::vector<int> mult2;
  };
  std::vector<Choice> choices;

  std::size_t combos2 = 1;
  for (std::size_t i = 0; i < n2; ++i)
    combos2 *= 3;
  for (int m3 = 0; m3 <= max3; ++m3) {
    for (unsigned s4 = 1; s4 < (1u << n4); ++s4) {
      for (std::size_t code = 0; code < combos2; ++code) {
        Choice c{m3, 0, s4, std::vector<int>(n2)};
        std::size_t rest = code;
        for (std::size_t i = 0; i < n2; ++i) {
          c.mult2[i] = static_cast<int>(rest % 3);
          rest /= 3;
          if (c.mult2[i] > 0)
            c.support2 |= 1u << i;
        }
        choices.push_back(std::move(c));
      }
    }
  }

  auto colex = [](std::vector<int> const &a, std::vector<int> const &b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  };
  std::stable_sort(choices.begin(), choices.end(), [&](Choice const &a, Choice const &b) {
    if (std::tie(a.fix3, a.support2, a.subset4) != std::tie(b.fix3, b.support2, b.subset4))
      return std::tie(a.fix3, a.support2, a.subset4) < std::tie(b.fix3, b.support2, b.subset4);
    return colex(a.mult2, b.mult2);
  });

  if (choices.size() != entry.labels.size())
    throw Error("family " + entry.group + " " + entry.constraint + " enumerates " +
                std::to_string(choices.size()) + " lines but has " +
                std::to_string(entry.labels.size()) + " labels");

  std::vector<TableLine> lines;
  for (std::size_t k = 0; k < choices.size(); ++k) {
    Choice const &c = choices[k];
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::size_t i = 0; i < n4; ++i) {
      if (c.subset4 & (1u << i))
        counts[to_u64(entry.fix4[i].eval(field_size))] += 1;
    }
    if (c.fix3)
      counts[to_u64(entry.fix3->eval(field_size))] += 1;
    for (std::size_t i = 0; i < n2; ++i) {
      if (c.mult2[i] > 0)
        counts[to_u64(entry.fix2[i].eval(field_size))] += static_cast<std::uint64_t>(c.mult2[i]);
    }

    TableLine line;
    line.id = entry.labels[k];
    line.entry = &entry;
    line.field_size = field_size;
    for (auto [m, n] : counts)
      line.branches.push_back({m, n});
    line.branches = sorted_branches(line.branches);
    line.cogenus_floor = surfgen::cogenus_floor(line.branches, line.id);
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<TableLine> catalog_lines()
{
  std::vector<FamilyEntry const *> order;
  for (FamilyEntry const &e : family_table())
    order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](FamilyEntry const *a, FamilyEntry const *b) { return a->rank < b->rank; });

  // Families sharing a rank (the two generic PSL2 rows) interleave by q.
  std::vector<TableLine> out;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::vector<std::pair<std::uint64_t, FamilyEntry const *>> runs;
    for (; j < order.size() && order[j]->rank == order[i]->rank; ++j) {
      for (std::uint64_t field_size : order[j]->catalog_q)
        runs.emplace_back(field_size, order[j]);
    }
    std::stable_sort(runs.begin(), runs.end(),
                     [](auto const &a, auto const &b) { return a.first < b.first; });
    for (auto const &[field_size, e] : runs) {
      auto lines = enumerate_lines(*e, field_size);
      out.insert(out.end(), lines.begin(), lines.end());
    }
    i = j;
  }
  return out;
}

std::string render_line_table(std::vector<TableLine> const &lines)
{
  std::string out;
  for (TableLine const &l : lines)
    out += l.render() + "\n";
  return out;
}

std::string render_family_table()
{
  auto join = [](std::vector<OrderFormula> const &fs) {
    if (fs.empty())
      return std::string("-");
    std::string s;
    for (OrderFormula const &f : fs)
      s += (s.empty() ? "" : " ") + f.text;
    return s;
  };
  std::string out;
  for (FamilyEntry const &e : family_table()) {
    out += "family " + e.group + " " + e.constraint + " | fix4 " + join(e.fix4) + " | fix3 " +
           (e.fix3 ? e.fix3->text : std::string("-")) + " | fix2 " + join(e.fix2) + "\n";
  }
  return out;
}

HurwitzDatum minimal_cogenus_datum(TableLine const &line)
{
  return surfgen::minimal_cogenus_datum(line.group_order(), line.branches, line.cogenus_floor);
}

} // namespace surfgen
