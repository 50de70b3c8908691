#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surfgen/group.hpp"
#include "surfgen/matrix.hpp"

namespace surfgen
{

/// Parsed contents of a group definition file.
///
///   perm <degree>            | matrix <p> <f> <dim>
///   gen <cycles>             | gen <dim*dim field codes, row-major>
///   name <text>              (optional)
///   order <integer>          (optional, asserted after construction)
///   seed <dim field codes>   (matrix files only, optional, repeatable)
///
/// Field codes are the integer encodings of FieldElement. Blank lines and
/// lines starting with '#' are ignored. Matrix groups act on the projective
/// orbit of the seeds, by default the first standard basis vector.
struct GroupDefinition
{
  std::string name;
  std::optional<BigInt> declared_order;

  bool is_matrix = false;
  std::size_t degree = 0; // perm files
  std::vector<Permutation> permutations;

  std::uint32_t p = 0, f = 0;
  std::size_t dim = 0;
  std::vector<Matrix> matrices;
  std::vector<FieldVector> seeds;
};

GroupDefinition parse_group_definition(std::string_view text);

/// Builds the permutation group and checks the declared order.
GroupHandle build_from_definition(GroupDefinition const &def,
                                  std::size_t orbit_cap = default_orbit_cap);

GroupHandle load_group(std::filesystem::path const &path,
                       std::size_t orbit_cap = default_orbit_cap);

/// Renders a permutation group as a `perm` file.
std::string format_perm_group(std::string const &name, std::vector<Permutation> const &gens,
                              BigInt const &order);

std::string read_text_file(std::filesystem::path const &path);

} // namespace surfgen
