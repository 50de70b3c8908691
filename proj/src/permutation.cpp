#include <algorithm>
#include <cctype>
#include <cstring>
#include <numeric>
#include <sstream>

#include "surfgen/kernels.hpp"
#include "surfgen/permutation.hpp"

namespace surfgen
{

namespace
{

void check_degree(std::size_t degree)
{
  if (degree > max_degree)
    throw Error("permutation degree " + std::to_string(degree) +
                " exceeds the supported maximum of " +
                std::to_string(max_degree));
}

} // namespace

Permutation::Permutation(std::size_t degree)
{
  check_degree(degree);
  data_.resize(degree + 1, 0);
  std::iota(data_.begin(), data_.end() - 1, Point{0});
}

Permutation::Permutation(std::vector<Point> images)
{
  check_degree(images.size());

  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x])
      throw Error("image table is not a bijection");
    seen[x] = true;
  }

  data_ = std::move(images);
  data_.push_back(0);
}

Permutation Permutation::unchecked(std::span<const Point> images)
{
  Permutation p;
  p.data_.assign(images.begin(), images.end());
  p.data_.push_back(0);
  return p;
}

bool Permutation::is_identity() const
{
  return kernels::active().is_identity(data(), degree());
}

std::size_t Permutation::fixed_points() const
{
  return kernels::active().count_fixed(data(), degree());
}

Permutation Permutation::extended(std::size_t degree) const
{
  if (degree <= this->degree())
    return *this;

  Permutation result(degree);
  std::copy(data_.begin(), data_.end() - 1, result.data_.begin());
  return result;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (degree() != rhs.degree()) {
    std::size_t n = std::max(degree(), rhs.degree());
    return extended(n) * rhs.extended(n);
  }

  Permutation result(degree());
  kernels::active().compose(data(), rhs.data(), result.data(), degree());
  return result;
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  *this = *this * rhs;
  return *this;
}

Permutation Permutation::operator~() const
{
  Permutation result(degree());
  for (std::size_t i = 0; i < degree(); ++i)
    result.data_[data_[i]] = static_cast<Point>(i);
  return result;
}

Permutation Permutation::pow(long long e) const
{
  Permutation base = e < 0 ? ~*this : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);

  Permutation result(degree());
  while (k) {
    if (k & 1)
      result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const
{
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(degree(), false);

  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t x = i; !seen[x]; x = data_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }

  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type())
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

bool Permutation::operator==(Permutation const &rhs) const
{
  if (degree() == rhs.degree())
    return std::memcmp(data(), rhs.data(), degree() * sizeof(Point)) == 0;

  Permutation const &small = degree() < rhs.degree() ? *this : rhs;
  Permutation const &large = degree() < rhs.degree() ? rhs : *this;

  if (std::memcmp(small.data(), large.data(), small.degree() * sizeof(Point)) != 0)
    return false;
  for (std::size_t i = small.degree(); i < large.degree(); ++i) {
    if (large[i] != i)
      return false;
  }
  return true;
}

std::uint64_t hash_images(Point const *images, std::size_t n)
{
  // Four 16-bit points per word, multiply-xorshift mixing.
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ n;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    std::uint64_t w;
    std::memcpy(&w, images + i, sizeof w);
    h ^= w;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 31;
  }
  for (; i < n; ++i) {
    h ^= images[i];
    h *= 0x94D049BB133111EBull;
    h ^= h >> 29;
  }
  h ^= h >> 32;
  h *= 0xD6E8FEB86659FD93ull;
  h ^= h >> 32;
  return h;
}

std::size_t Permutation::hash() const
{
  // Hash the table without trailing fixed points so that padded equal
  // permutations collide.
  std::size_t n = degree();
  while (n > 0 && data_[n - 1] == n - 1)
    --n;
  return static_cast<std::size_t>(hash_images(data(), n));
}

Permutation conjugate(Permutation const &a, Permutation const &h)
{
  return ~h * a * h;
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return ~a * ~b * a * b;
}

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  check_degree(degree);

  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  auto fail = [&](std::string const &why) {
    throw Error("cannot parse cycles \"" + std::string(text) + "\": " + why);
  };

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;

    std::vector<std::size_t> cycle;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      continue;
    }

    for (;;) {
      skip_ws();
      std::size_t start = pos;
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > max_degree + 1)
          fail("point out of range");
        ++pos;
      }
      if (pos == start)
        fail("expected a point");
      if (value == 0 || value > degree)
        fail("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      if (used[value - 1])
        fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(value - 1);

      skip_ws();
      if (pos >= text.size())
        fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("unexpected character '" + std::string(1, text[pos]) + "'");
    }

    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }

  return Permutation(std::move(images));
}

std::string print_cycles(Permutation const &p)
{
  std::ostringstream out;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;

  // Cycles start at their smallest point and are emitted in order of it.
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i)
      continue;
    any = true;
    out << '(';
    std::size_t x = i;
    bool first = true;
    do {
      seen[x] = true;
      if (!first)
        out << ',';
      out << x + 1;
      first = false;
      x = p[x];
    } while (x != i);
    out << ')';
  }

  return any ? out.str() : "()";
}

} // namespace surfgen
