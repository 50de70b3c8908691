#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "surfgen/catalog.hpp"
#include "surfgen/selfcheck.hpp"
#include "surfgen/structconst.hpp"

namespace surfgen
{

namespace
{

using ElementSet = std::unordered_set<Permutation, PermutationHash>;

std::vector<Permutation> closure(GroupHandle const &grp)
{
  std::vector<Permutation> elems{Permutation(grp.degree())};
  ElementSet seen(elems.begin(), elems.end());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Permutation const &s : grp.generators()) {
      Permutation p = elems[head] * s;
      if (seen.insert(p).second)
        elems.push_back(std::move(p));
    }
  }
  return elems;
}

Permutation random_permutation(std::size_t n, RandomSource &rng)
{
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = n; i > 1; --i)
    std::swap(img[i - 1], img[rng.below(i)]);
  return Permutation(std::move(img));
}

GroupHandle from_cycles(std::vector<std::string> const &gens, std::size_t n, std::string name)
{
  std::vector<Permutation> perms;
  for (std::string const &g : gens)
    perms.push_back(parse_cycles(g, n));
  return build_group(perms, n, std::move(name));
}

} // namespace

std::vector<GroupHandle> oracle_corpus(std::uint64_t max_order)
{
  std::vector<GroupHandle> all = {
      from_cycles({"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"}, 6, "D12"),
      from_cycles({"(1,2)", "(1,2,3,4)"}, 4, "Sym4"),
      from_cycles({"(1,2)", "(1,2,3,4,5)"}, 5, "Sym5"),
      from_cycles({"(1,2,3)(4,5)", "(6,7)"}, 7, "C6xC2"),
      construct_group("Alt7", 0),
      construct_group("PSL2", 7),
      construct_group("PSL3", 2),
      construct_group("PSL2", 8),
      construct_group("PSL2", 9),
      construct_group("PSL2", 11),
      construct_group("PSL2", 13),
      construct_group("PSL2", 16),
  };
  std::vector<GroupHandle> out;
  for (GroupHandle const &grp : all) {
    if (grp.order() <= max_order)
      out.push_back(grp);
  }
  return out;
}

OracleReport brute_force_check(GroupHandle const &grp, std::uint64_t seed, std::size_t probes)
{
  OracleReport rep;
  rep.group = grp.name();
  std::size_t const n = grp.degree();

  std::vector<Permutation> elems = closure(grp);
  ElementSet members(elems.begin(), elems.end());
  rep.order_ok = BigInt(elems.size()) == grp.order();
  if (!rep.order_ok)
    rep.failures.push_back("closure has " + std::to_string(elems.size()) + " elements");

  rep.membership_ok = std::all_of(elems.begin(), elems.end(),
                                  [&](Permutation const &p) { return grp.contains(p); });
  RandomSource rng(seed, 0x0AC1E);
  for (std::size_t i = 0; i < probes && rep.membership_ok; ++i) {
    Permutation p = random_permutation(n, rng);
    if (grp.contains(p) != members.contains(p)) {
      rep.membership_ok = false;
      rep.failures.push_back("membership disagrees on " + print_cycles(p));
    }
  }
  if (!rep.membership_ok && rep.failures.empty())
    rep.failures.push_back("a closure element is rejected by contains()");

  // Conjugation orbits by brute force.
  std::unordered_map<Permutation, std::size_t, PermutationHash> brute_class;
  std::vector<std::size_t> brute_sizes;
  for (Permutation const &x : elems) {
    if (brute_class.contains(x))
      continue;
    std::size_t id = brute_sizes.size();
    std::size_t size = 0;
    for (Permutation const &g : elems) {
      if (brute_class.emplace(conjugate(x, g), id).second)
        ++size;
    }
    brute_sizes.push_back(size);
  }

  std::vector<ConjugacyClass> classes = all_classes(grp);
  rep.partition_ok = classes.size() == brute_sizes.size();
  std::vector<std::size_t> library_of(brute_sizes.size(), classes.size());
  for (std::size_t c = 0; c < classes.size() && rep.partition_ok; ++c) {
    std::size_t id = brute_class.at(classes[c].representative);
    if (library_of[id] != classes.size() || classes[c].size != brute_sizes[id])
      rep.partition_ok = false;
    library_of[id] = c;
  }
  for (auto const &[x, id] : brute_class) {
    if (!rep.partition_ok)
      break;
    if (!classes[library_of[id]].contains(x))
      rep.partition_ok = false;
  }
  if (!rep.partition_ok)
    rep.failures.push_back("class partition differs from brute-force orbits");

  // Every product of a pair lands in exactly one class.
  rep.pair_count_ok = true;
  for (std::size_t i = 0; i < classes.size() && rep.pair_count_ok; ++i) {
    for (std::size_t j = i; j < classes.size() && rep.pair_count_ok; ++j) {
      BigInt total = 0;
      for (std::size_t l = 0; l < classes.size(); ++l)
        total += count_dijl(classes[i], classes[j], classes[l]) * classes[l].size;
      if (total != classes[i].size * classes[j].size) {
        rep.pair_count_ok = false;
        rep.failures.push_back("pair count fails for classes " + std::to_string(i + 1) + ", " +
                               std::to_string(j + 1));
      }
    }
  }

  // Direct double loop on the smaller class pairs.
  for (std::size_t i = 0; i < classes.size() && rep.pair_count_ok; ++i) {
    for (std::size_t j = 0; j < classes.size() && rep.pair_count_ok; ++j) {
      if (classes[i].size * classes[j].size > 20000)
        continue;
      ConjugacyClass const &cls_l = classes[(i + j) % classes.size()];
      std::uint64_t direct = 0;
      for (std::size_t r = 0; r < classes[i].index->size(); ++r) {
        Permutation x = Permutation::unchecked(classes[i].index->element(r));
        for (std::size_t s = 0; s < classes[j].index->size(); ++s) {
          if (x * Permutation::unchecked(classes[j].index->element(s)) == cls_l.representative)
            ++direct;
        }
      }
      if (count_dijl(classes[i], classes[j], cls_l) != direct) {
        rep.pair_count_ok = false;
        rep.failures.push_back("d_ijl differs from direct count");
      }
    }
  }
  return rep;
}

} // namespace surfgen
