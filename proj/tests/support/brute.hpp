#pragma once

// Exhaustive reference computations for small groups, written without the
// stabilizer chain, class index or rational type of the library.

#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "surfgen/permutation.hpp"
#include "surfgen/random.hpp"

namespace brute
{

using surfgen::Permutation;
using surfgen::PermutationHash;
using Int = boost::multiprecision::cpp_int;

inline std::vector<Permutation> closure(std::vector<Permutation> const &gens, std::size_t degree)
{
  std::vector<Permutation> elems{Permutation(degree)};
  std::unordered_set<Permutation, PermutationHash> seen(elems.begin(), elems.end());
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (Permutation const &s : gens) {
      Permutation p = elems[head] * s;
      if (seen.insert(p).second)
        elems.push_back(std::move(p));
    }
  }
  return elems;
}

struct Classes
{
  std::unordered_map<Permutation, std::size_t, PermutationHash> id;
  std::vector<std::vector<Permutation>> members;
};

inline Classes conjugacy_classes(std::vector<Permutation> const &elems)
{
  Classes c;
  for (Permutation const &x : elems) {
    if (c.id.contains(x))
      continue;
    std::size_t k = c.members.size();
    c.members.emplace_back();
    for (Permutation const &g : elems) {
      Permutation y = surfgen::conjugate(x, g);
      if (c.id.emplace(y, k).second)
        c.members.back().push_back(y);
    }
  }
  return c;
}

/// counts[l] = number of pairs (x, y) in Ci x Cj whose product lies in Cl.
inline std::vector<std::uint64_t> product_landing(Classes const &c, std::size_t i, std::size_t j)
{
  std::vector<std::uint64_t> counts(c.members.size(), 0);
  for (Permutation const &x : c.members[i]) {
    for (Permutation const &y : c.members[j])
      ++counts[c.id.at(x * y)];
  }
  return counts;
}

inline Permutation random_permutation(std::size_t n, surfgen::RandomSource &rng)
{
  std::vector<surfgen::Point> img(n);
  std::iota(img.begin(), img.end(), surfgen::Point{0});
  for (std::size_t i = n; i > 1; --i)
    std::swap(img[i - 1], img[rng.below(i)]);
  return Permutation(std::move(img));
}

/// Exact fraction kept in lowest terms.
struct Fraction
{
  Int num = 0, den = 1;

  static Int gcd(Int a, Int b)
  {
    if (a < 0)
      a = -a;
    if (b < 0)
      b = -b;
    while (b != 0) {
      Int t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  Fraction(Int n = 0, Int d = 1) : num(n), den(d)
  {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend Fraction operator+(Fraction const &a, Fraction const &b)
  {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Fraction operator*(Fraction const &a, Fraction const &b)
  {
    return {a.num * b.num, a.den * b.den};
  }
};

/// g from 2g - 2 = |G| (2 g0 - 2 + sum n (1 - 1/m)); -1 when not integral.
inline Int genus(Int const &order, std::uint64_t cogenus,
                 std::vector<std::pair<std::uint64_t, std::uint64_t>> const &branches)
{
  Fraction inner(Int(2 * cogenus) - 2);
  for (auto [m, n] : branches)
    inner = inner + Fraction(Int(n) * (m - 1), Int(m));
  Fraction twice = Fraction(order) * inner + Fraction(2);
  if (twice.den != 1 || twice.num % 2 != 0)
    return -1;
  return twice.num / 2;
}

} // namespace brute
