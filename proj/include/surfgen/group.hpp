#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "surfgen/permutation.hpp"
#include "surfgen/random.hpp"

namespace surfgen
{

using BigInt = boost::multiprecision::cpp_int;

/// One level of a stabilizer chain: the orbit of the base point under the
/// strong generators fixing all earlier base points, with coset
/// representatives mapping the base point to each orbit point.
struct ChainLevel
{
  Point base_point = 0;
  std::vector<Permutation> strong_generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> where; // point -> index in orbit, or -1
  std::vector<Permutation> transversal;
  std::vector<Permutation> inverse_transversal;
};

/// A permutation group with a certified base and strong generating set.
/// Handles are cheap to copy and immutable; copies share the chain.
class GroupHandle
{
public:
  GroupHandle() = default;

  std::size_t degree() const { return chain_->degree; }
  std::vector<Permutation> const &generators() const { return chain_->generators; }
  std::vector<ChainLevel> const &levels() const { return chain_->levels; }
  std::vector<Point> base() const;
  BigInt const &order() const { return chain_->order; }
  std::string const &name() const { return chain_->name; }

  bool contains(Permutation const &p) const;

  /// Uniformly distributed element from the chain (product of random
  /// coset representatives).
  Permutation uniform_element(RandomSource &rng) const;

  /// Calls `visit` once for every element; stops early when it returns false.
  void for_each_element(std::function<bool(Permutation const &)> const &visit) const;

  GroupHandle renamed(std::string name) const;

private:
  struct Chain
  {
    std::size_t degree = 0;
    std::string name;
    std::vector<Permutation> generators;
    std::vector<ChainLevel> levels;
    BigInt order = 1;
  };

  std::shared_ptr<Chain const> chain_;

  friend GroupHandle build_group(std::vector<Permutation> const &, std::size_t, std::string);
};

/// Builds the stabilizer chain: a seeded random Schreier-Sims pass followed
/// by a deterministic Schreier generator check, so the order is exact.
/// All generators must have degree `degree`.
GroupHandle build_group(std::vector<Permutation> const &gens, std::size_t degree,
                        std::string name = {});

/// Convenience overload taking the degree from the first generator.
GroupHandle build_group(std::vector<Permutation> const &gens);

/// True iff the elements generate all of G. Every element must lie in G.
bool generates_whole(GroupHandle const &grp, std::vector<Permutation> const &elems);

/// Product replacement generator: 11 slots (slot 0 is the accumulator),
/// 60 burn-in mixes, one mix per draw.
class ProductReplacement
{
public:
  static constexpr std::size_t slots = 11;
  static constexpr std::size_t burn_in = 60;

  ProductReplacement(GroupHandle const &grp, RandomSource rng);

  Permutation next();

private:
  std::vector<Permutation> state_;
  RandomSource rng_;
  bool trivial_ = false;
};

/// One product replacement element from a fresh generator keyed by `rng`.
Permutation random_element(GroupHandle const &grp, RandomSource &rng);

} // namespace surfgen
