#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "surfgen/genvec.hpp"

namespace surfgen
{

/// Tuple file:
///
///   tuple <group-name> <g0>
///   a <cycles>               (g0 alternating a/b pairs)
///   b <cycles>
///   c <order> <cycles>       (branch entries in product order)
///
/// Blank lines and lines starting with '#' are ignored.
struct TupleFile
{
  std::string group;
  GeneratingTuple tuple;
};

TupleFile parse_tuple_file(std::string_view text, std::size_t degree);

TupleFile load_tuple_file(std::filesystem::path const &path, std::size_t degree);

std::string format_tuple_file(std::string const &group, GeneratingTuple const &t);

} // namespace surfgen
