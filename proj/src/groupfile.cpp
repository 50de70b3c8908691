#include <fstream>
#include <sstream>

#include "surfgen/groupfile.hpp"

namespace surfgen
{

namespace
{

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<long long> parse_integers(std::string_view text, std::size_t line_no)
{
  std::vector<long long> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used != tok.size())
      throw Error("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

} // namespace

GroupDefinition parse_group_definition(std::string_view text)
{
  GroupDefinition def;
  std::shared_ptr<GaloisField const> field;
  bool have_header = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;

    if (line.empty() || line.front() == '#')
      continue;

    std::size_t sp = line.find_first_of(" \t");
    std::string_view key = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };

    if (!have_header) {
      if (key == "perm") {
        auto v = parse_integers(rest, line_no);
        if (v.size() != 1 || v[0] < 1 || static_cast<std::size_t>(v[0]) > max_degree)
          throw Error(where() + "expected 'perm <degree>'");
        def.degree = static_cast<std::size_t>(v[0]);
      } else if (key == "matrix") {
        auto v = parse_integers(rest, line_no);
        if (v.size() != 3 || v[0] < 2 || v[1] < 1 || v[2] < 1)
          throw Error(where() + "expected 'matrix <p> <f> <dim>'");
        def.is_matrix = true;
        def.p = static_cast<std::uint32_t>(v[0]);
        def.f = static_cast<std::uint32_t>(v[1]);
        def.dim = static_cast<std::size_t>(v[2]);
        field = std::make_shared<GaloisField const>(def.p, def.f);
      } else {
        throw Error(where() + "a group file starts with 'perm' or 'matrix'");
      }
      have_header = true;
      continue;
    }

    if (key == "name") {
      def.name = std::string(rest);
    } else if (key == "order") {
      try {
        def.declared_order = BigInt(std::string(rest));
      } catch (std::exception const &) {
        throw Error(where() + "malformed order '" + std::string(rest) + "'");
      }
    } else if (key == "gen") {
      if (!def.is_matrix) {
        def.permutations.push_back(parse_cycles(rest, def.degree));
        continue;
      }
      auto v = parse_integers(rest, line_no);
      if (v.size() != def.dim * def.dim)
        throw Error(where() + "matrix generator needs " + std::to_string(def.dim * def.dim) +
                    " entries");
      std::vector<FieldElement> entries;
      for (long long c : v) {
        if (c < 0)
          throw Error(where() + "negative field code");
        entries.push_back(field->element(static_cast<std::uint32_t>(c)));
      }
      def.matrices.emplace_back(field, def.dim, std::move(entries));
    } else if (key == "seed") {
      if (!def.is_matrix)
        throw Error(where() + "'seed' only applies to matrix groups");
      auto v = parse_integers(rest, line_no);
      if (v.size() != def.dim)
        throw Error(where() + "seed needs " + std::to_string(def.dim) + " entries");
      FieldVector s;
      for (long long c : v) {
        if (c < 0)
          throw Error(where() + "negative field code");
        s.push_back(field->element(static_cast<std::uint32_t>(c)));
      }
      def.seeds.push_back(std::move(s));
    } else {
      throw Error(where() + "unknown keyword '" + std::string(key) + "'");
    }
  }

  if (!have_header)
    throw Error("empty group file");
  if (def.is_matrix && def.seeds.empty()) {
    FieldVector e1(def.dim, field->zero());
    e1[0] = field->one();
    def.seeds.push_back(std::move(e1));
  }
  return def;
}

GroupHandle build_from_definition(GroupDefinition const &def, std::size_t orbit_cap)
{
  GroupHandle grp;
  if (def.is_matrix) {
    ProjectiveAction act = matrix_to_permutation_group(def.matrices, def.seeds, orbit_cap);
    grp = build_group(act.generators, act.points.size(), def.name);
  } else {
    grp = build_group(def.permutations, def.degree, def.name);
  }

  if (def.declared_order && *def.declared_order != grp.order()) {
    std::ostringstream msg;
    msg << "group '" << def.name << "' has order " << grp.order() << " but the file declares "
        << *def.declared_order;
    throw Error(msg.str());
  }
  return grp;
}

std::string read_text_file(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GroupHandle load_group(std::filesystem::path const &path, std::size_t orbit_cap)
{
  return build_from_definition(parse_group_definition(read_text_file(path)), orbit_cap);
}

std::string format_perm_group(std::string const &name, std::vector<Permutation> const &gens,
                              BigInt const &order)
{
  std::size_t degree = 0;
  for (Permutation const &g : gens)
    degree = std::max(degree, g.degree());

  std::ostringstream out;
  out << "perm " << degree << "\n";
  if (!name.empty())
    out << "name " << name << "\n";
  out << "order " << order << "\n";
  for (Permutation const &g : gens)
    out << "gen " << print_cycles(g) << "\n";
  return out.str();
}

} // namespace surfgen
