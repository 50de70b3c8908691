#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "surfgen/group.hpp"

namespace surfgen
{

inline constexpr std::size_t default_class_cap = std::size_t{1} << 22;

/// Hashed table of permutations of one degree, each paired with a witness.
/// Elements and witnesses live in flat arenas with one padding point at the
/// end, so rows can be fed straight to the composition kernels.
class ClassIndex
{
public:
  explicit ClassIndex(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return hashes_.size(); }

  std::span<const Point> element(std::size_t i) const
  {
    return {elements_.data() + i * degree_, degree_};
  }
  std::span<const Point> witness(std::size_t i) const
  {
    return {witnesses_.data() + i * degree_, degree_};
  }
  Point const *element_data(std::size_t i) const { return elements_.data() + i * degree_; }

  std::optional<std::size_t> find(Point const *images) const;
  std::optional<std::size_t> find(Permutation const &p) const;

  /// Inserts unless present; returns the row and whether it was new.
  std::pair<std::size_t, bool> insert(Point const *images, Point const *witness);

  void shrink();

private:
  void grow();

  std::size_t degree_;
  std::vector<Point> elements_;
  std::vector<Point> witnesses_;
  std::vector<std::uint64_t> hashes_;
  std::vector<std::uint32_t> slots_; // row + 1, or 0 when empty
};

/// A conjugacy class of G. When materialized, `index` lists every member m
/// with a witness g satisfying representative^g = m.
struct ConjugacyClass
{
  GroupHandle owner;
  Permutation representative;
  std::uint64_t element_order = 1;
  BigInt size = 1;
  BigInt centralizer_order = 1;
  std::shared_ptr<ClassIndex const> index;

  bool materialized() const { return index != nullptr; }

  /// Membership through the index; the class must be materialized.
  bool contains(Permutation const &p) const;

  /// Some g with representative^g = p, if p is a member.
  std::optional<Permutation> witness_for(Permutation const &p) const;
};

/// Breadth-first conjugation orbit of x. Without materialization only
/// 128-bit fingerprints of the members are kept, which yields the size but
/// no index. The cap bounds the number of members in either mode.
ConjugacyClass class_of(GroupHandle const &grp, Permutation const &x, bool materialize,
                        std::size_t cap = default_class_cap);

/// Some g with a^g = b, or nothing when a and b are not conjugate in G.
std::optional<Permutation> representative_action(GroupHandle const &grp, Permutation const &a,
                                                 Permutation const &b,
                                                 std::size_t cap = default_class_cap);

inline constexpr std::size_t default_order_budget = 100000;

/// Random element of order exactly m, found by powering random elements.
Permutation element_of_order(GroupHandle const &grp, std::uint64_t m, RandomSource &rng,
                             std::size_t budget = default_order_budget);

/// Materialized classes of G, reused across conjugacy questions.
class ClassCache
{
public:
  explicit ClassCache(GroupHandle grp, std::size_t cap = default_class_cap);

  GroupHandle const &group() const { return group_; }

  /// The class containing x, materializing it on first use.
  ConjugacyClass const &locate(Permutation const &x);

  /// Index into `classes()` of the class containing x.
  std::size_t locate_index(Permutation const &x);

  std::vector<ConjugacyClass> const &classes() const { return classes_; }

  /// Some g with a^g = b, or nothing.
  std::optional<Permutation> representative_action(Permutation const &a, Permutation const &b);

  bool conjugate(Permutation const &a, Permutation const &b);

private:
  std::optional<std::size_t> find(Permutation const &x) const;

  GroupHandle group_;
  std::size_t cap_;
  std::vector<ConjugacyClass> classes_;
};

/// Groups up to this order are scanned element by element when listing
/// classes; larger groups are sampled.
inline constexpr std::uint64_t enumeration_limit = 2000000;

/// Every class of elements of order m, materialized, in discovery order.
/// Small groups are enumerated exhaustively. Larger groups are sampled
/// until `patience` consecutive draws find no new class, so completeness is
/// then heuristic.
std::vector<ConjugacyClass> classes_of_order(GroupHandle const &grp, std::uint64_t m,
                                             RandomSource &rng,
                                             std::size_t cap = default_class_cap,
                                             std::size_t patience = 2000);

/// Every class of G, in discovery order. Only for enumerable groups.
std::vector<ConjugacyClass> all_classes(GroupHandle const &grp,
                                        std::size_t cap = default_class_cap);

} // namespace surfgen
