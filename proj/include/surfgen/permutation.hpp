#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surfgen
{

using Point = std::uint16_t;

inline constexpr std::size_t max_degree = 65535;

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A permutation of {0, ..., degree-1} stored as an image table.
///
/// Points are 0-based internally and 1-based in every textual form. Products
/// act from the left: `p * q` maps x to q(p(x)), so conjugation and
/// commutators follow g^h = h^-1 g h and [g,h] = g^-1 h^-1 g h.
///
/// The image buffer carries one trailing padding entry so that vector
/// kernels may issue 32-bit gathers at any valid index.
class Permutation
{
public:
  Permutation() : Permutation(0) {}
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Copies an image table without validating it. For hot paths whose
  /// input is already known to be a permutation.
  static Permutation unchecked(std::span<const Point> images);

  std::size_t degree() const { return data_.size() - 1; }
  std::span<const Point> images() const { return {data_.data(), degree()}; }
  Point const *data() const { return data_.data(); }
  Point *data() { return data_.data(); }

  Point operator[](std::size_t x) const { return data_[x]; }

  bool is_identity() const;
  std::size_t fixed_points() const;

  Permutation extended(std::size_t degree) const;

  Permutation operator*(Permutation const &rhs) const;
  Permutation &operator*=(Permutation const &rhs);
  Permutation operator~() const;

  Permutation pow(long long e) const;

  /// Order as lcm of cycle lengths.
  std::uint64_t order() const;

  /// Cycle lengths (including 1 for fixed points), sorted ascending.
  std::vector<std::size_t> cycle_type() const;

  bool operator==(Permutation const &rhs) const;

  std::size_t hash() const;

private:
  std::vector<Point> data_;
};

Permutation conjugate(Permutation const &a, Permutation const &h);
Permutation commutator(Permutation const &a, Permutation const &b);

/// Parses a product of disjoint cycles such as "(1,2)(3,7,5)(4,6)".
/// Empty text or "()" yields the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical disjoint-cycle form; "()" for the identity.
std::string print_cycles(Permutation const &p);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const { return p.hash(); }
};

/// 64-bit hash of an image table; shared by permutations and class indices.
std::uint64_t hash_images(Point const *images, std::size_t n);

} // namespace surfgen
