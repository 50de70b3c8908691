#include <sstream>

#include "surfgen/groupfile.hpp"
#include "surfgen/tuplefile.hpp"

namespace surfgen
{

TupleFile parse_tuple_file(std::string_view text, std::size_t degree)
{
  TupleFile out;
  bool have_header = false;
  long long cogenus = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string key;
    if (!(words >> key) || key.front() == '#')
      continue;
    auto where = [&] { return "line " + std::to_string(line_no) + ": "; };
    std::string rest;
    std::getline(words, rest);

    if (!have_header) {
      std::istringstream h(rest);
      if (key != "tuple" || !(h >> out.group >> cogenus) || cogenus < 0)
        throw Error(where() + "expected 'tuple <group-name> <g0>'");
      have_header = true;
      continue;
    }

    if (key == "a") {
      if (out.tuple.left.size() != out.tuple.right.size())
        throw Error(where() + "'a' and 'b' lines must alternate");
      out.tuple.left.push_back(parse_cycles(rest, degree));
    } else if (key == "b") {
      if (out.tuple.left.size() != out.tuple.right.size() + 1)
        throw Error(where() + "'b' must follow an 'a' line");
      out.tuple.right.push_back(parse_cycles(rest, degree));
    } else if (key == "c") {
      std::istringstream c(rest);
      long long order = 0;
      if (!(c >> order) || order < 1)
        throw Error(where() + "expected 'c <order> <cycles>'");
      std::string cycles;
      std::getline(c, cycles);
      out.tuple.declared_orders.push_back(static_cast<std::uint64_t>(order));
      out.tuple.branch.push_back(parse_cycles(cycles, degree));
    } else {
      throw Error(where() + "unknown keyword '" + key + "'");
    }
  }

  if (!have_header)
    throw Error("empty tuple file");
  if (out.tuple.left.size() != out.tuple.right.size() ||
      out.tuple.left.size() != static_cast<std::size_t>(cogenus))
    throw Error("tuple file declares cogenus " + std::to_string(cogenus) + " but lists " +
                std::to_string(out.tuple.left.size()) + " a and " +
                std::to_string(out.tuple.right.size()) + " b entries");
  return out;
}

TupleFile load_tuple_file(std::filesystem::path const &path, std::size_t degree)
{
  return parse_tuple_file(read_text_file(path), degree);
}

std::string format_tuple_file(std::string const &group, GeneratingTuple const &t)
{
  std::ostringstream out;
  out << "tuple " << group << " " << t.left.size() << "\n";
  for (std::size_t k = 0; k < t.left.size(); ++k) {
    out << "a " << print_cycles(t.left[k]) << "\n";
    out << "b " << print_cycles(t.right[k]) << "\n";
  }
  for (std::size_t i = 0; i < t.branch.size(); ++i)
    out << "c " << t.declared_orders[i] << " " << print_cycles(t.branch[i]) << "\n";
  return out.str();
}

} // namespace surfgen
