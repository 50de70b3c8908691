#pragma once

#include <string>
#include <vector>

#include "surfgen/group.hpp"

namespace surfgen
{

/// Groups of order at most `max_order` available without external data
/// beyond the shipped files: the small catalog groups plus a few symmetric
/// and dihedral groups.
std::vector<GroupHandle> oracle_corpus(std::uint64_t max_order = 5000);

struct OracleReport
{
  std::string group;
  bool order_ok = false;      // chain order equals the size of the closure
  bool membership_ok = false; // contains() agrees with the closure
  bool partition_ok = false;  // classes match brute-force conjugation orbits
  bool pair_count_ok = false; // sum over l of d_ijl |C_l| = |C_i| |C_j|
  std::vector<std::string> failures;

  bool passed() const { return order_ok && membership_ok && partition_ok && pair_count_ok; }
};

/// Compares the chain, class and structure-constant machinery against
/// exhaustive enumeration. `probes` random permutations are tested for
/// membership; the seed keys them.
OracleReport brute_force_check(GroupHandle const &grp, std::uint64_t seed = 0,
                               std::size_t probes = 200);

} // namespace surfgen
