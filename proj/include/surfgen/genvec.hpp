#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "surfgen/classes.hpp"
#include "surfgen/hurwitz.hpp"

namespace surfgen
{
/// Handle pairs (left_k, right_k) and branch elements with their declared
/// orders. The product condition reads
///   [left_1,right_1] ... [left_g0,right_g0] branch_1 ... branch_k = 1,
/// multiplied left to right exactly as listed.
/// multiplied left to right exactly as listed.
struct GeneratingTuple
{
  std::vector<Permutation> left, right;
  std::vector<Permutation> branch;
  std::vector<std::uint64_t> declared_orders;

  std::size_t cogenus() const { return left.size(); }

  /// Branch multiset of the c entries, sorted by (m, n).
  std::vector<Branch> branches() const;

  std::vector<Permutation> entries() const;
};

struct Verdict
{
  bool cond_a = false; // orders (and shape against the datum)
  bool cond_b = false; // product relation
  bool cond_c = false; // generation
  std::vector<std::string> details;

  bool accepted() const { return cond_a && cond_b && cond_c; }
};

/// Product of the commutators followed by the c entries.
Permutation tuple_product(GeneratingTuple const &t, std::size_t degree);

Verdict test_tuple(GroupHandle const &grp, HurwitzDatum const &datum, GeneratingTuple const &t);

/// Checks only orders and the product relation; no generation test.
Verdict test_relations(GroupHandle const &grp, HurwitzDatum const &datum, GeneratingTuple const &t);

using Clock = std::chrono::steady_clock;

struct SearchBudget
{
  std::size_t max_attempts = 100000;
  double seconds = 60.0;
  RandomSource rng{0, 0};
  unsigned workers = 1;
  std::size_t class_cap = default_class_cap;
};

/// Tracks attempts and wall-clock time against a budget.
class BudgetClock
{
public:
  explicit BudgetClock(SearchBudget const &b)
  : max_attempts_(b.max_attempts), seconds_(b.seconds), start_(Clock::now())
  {}

  /// Consumes one attempt; false once either cap is reached.
  bool tick();

  std::size_t attempts() const { return attempts_; }
  double elapsed() const;

private:
  std::size_t max_attempts_;
  double seconds_;
  Clock::time_point start_;
  std::size_t attempts_ = 0;
};

class BudgetExhausted : public Error
{
public:
  using Error::Error;
};

struct CommutatorOptions
{
  std::optional<std::uint64_t> a_order;   // draw a of this order
  std::vector<Permutation> generate_with; // require <a, these> = G
};

/// Finds (a, b) with [a, b] = z: draws a until a and a z are conjugate,
/// then b conjugates a to a z, so a^-1 a^b = z.
std::pair<Permutation, Permutation> commutator_solve(GroupHandle const &grp, Permutation const &z,
                                                     SearchBudget &budget, ClassCache &cache,
                                                     CommutatorOptions const &opts = {});

std::pair<Permutation, Permutation> commutator_solve(GroupHandle const &grp, Permutation const &z,
                                                     SearchBudget &budget);

/// Constructions from a pair of classes with d_212 and d_121 nonzero.
enum class MaxVariant
{
  /// ((a), (g), (b)) with a in the first class, b in the second: one
  /// branch of the second class's order, cogenus 1.
  one_c,
  /// ((x), (g), (c1, c2)) with c1 in the first class and c2, x in the
  /// second: cogenus 1.
  two_c,
  /// ((), (), (a^-1, a^g, b)): two entries from the first class, one
  /// from the second, cogenus 0.
  split_21,
  /// ((), (), (b^-1, (a^g)^-1, a)) with a in the second class and b in the
  /// first: one entry from the first class, two from the second.
  split_12,
};

/// Relations are guaranteed; generation is searched for over candidate
/// witnesses and reported by test_tuple, not promised.
GeneratingTuple two_class_build(GroupHandle const &grp, ConjugacyClass const &cls_a,
                                ConjugacyClass const &cls_b, MaxVariant variant,
                                std::size_t cap = default_class_cap,
                                std::size_t generation_tries = 64);

/// Replaces c_k by (c_k^u, c_k^v); needs gcd(u,m) = gcd(v,m) = 1 and
/// u + v = 1 mod m where m is the order of c_k.
GeneratingTuple split_entry(GeneratingTuple const &t, std::size_t k, long long u, long long v);

/// Appends identity handle pairs up to the target cogenus.
GeneratingTuple lift_cogenus(GeneratingTuple const &t, std::size_t target, std::size_t degree);

/// Search options beyond the budget.
struct FindOptions
{
  /// Entries of equal order come from distinct classes when the group has
  /// more than one class of that order.
  bool distinct_equal_orders = true;
  std::size_t inner_commutator_draws = 64;
};

struct FindResult
{
  std::optional<GeneratingTuple> tuple;
  std::size_t attempts = 0;
  double seconds = 0;
  std::string failure; // why the search stopped without a tuple
};

/// Randomized search for a tuple accepted by test_tuple. Every attempt
/// resamples all branch entries as random conjugates of class
/// representatives, then closes the product relation by solving for the
/// last entry (cogenus 0) or for the last commutator. Deterministic for a
/// fixed budget rng and a single worker. Failure is not a proof of
/// nonexistence.
FindResult find_tuple(GroupHandle const &grp, HurwitzDatum const &datum, SearchBudget const &budget,
                      FindOptions const &opts = {});

} // namespace surfgen
