#include <algorithm>

#include "surfgen/field.hpp"
#include "surfgen/permutation.hpp"

namespace surfgen
{

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

namespace
{

using Poly = std::vector<std::uint32_t>; // low degree first

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, Poly const &m, std::uint32_t p)
{
  std::size_t const dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    a.pop_back();
  }
  return a;
}

bool is_irreducible(Poly const &m, std::uint32_t p)
{
  // Trial division by every monic polynomial of degree 1 .. deg/2.
  std::size_t const deg = m.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      divisor[d] = 1;
      Poly r = poly_mod(m, divisor, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; }))
        return false;
    }
  }
  return true;
}

} // namespace

GaloisField::GaloisField(std::uint32_t p, std::uint32_t f)
: p_(p), f_(f), q_(1)
{
  if (!is_prime(p))
    throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0)
    throw Error("field extension degree must be positive");

  for (std::uint32_t i = 0; i < f; ++i) {
    if (static_cast<std::uint64_t>(q_) * p > max_size)
      throw Error("field GF(" + std::to_string(p) + "^" + std::to_string(f) +
                  ") exceeds the supported size");
    q_ *= p;
  }

  // Smallest monic irreducible: enumerate (c_{f-1}, ..., c_0) lexicographically.
  Poly modulus;
  for (std::uint32_t code = 0; code < q_; ++code) {
    Poly m(f + 1, 0);
    std::uint32_t c = code;
    for (std::uint32_t i = 0; i < f; ++i) {
      m[i] = c % p;
      c /= p;
    }
    m[f] = 1;
    if (f == 1 || is_irreducible(m, p)) {
      modulus = m;
      break;
    }
  }
  modulus_.assign(modulus.begin(), modulus.end() - 1);

  auto decode = [&](std::uint32_t v) {
    Poly a(f, 0);
    for (std::uint32_t i = 0; i < f; ++i) {
      a[i] = v % p;
      v /= p;
    }
    return a;
  };
  auto encode = [&](Poly const &a) {
    std::uint32_t v = 0;
    for (std::size_t i = a.size(); i-- > 0;)
      v = v * p + a[i];
    return v;
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  std::vector<Poly> polys(q_);
  for (std::uint32_t v = 0; v < q_; ++v)
    polys[v] = decode(v);

  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly n(f);
    for (std::uint32_t i = 0; i < f; ++i)
      n[i] = (p - polys[a][i]) % p;
    neg_[a] = encode(n);

    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly s(f);
      for (std::uint32_t i = 0; i < f; ++i)
        s[i] = (polys[a][i] + polys[b][i]) % p;
      add_[a * q_ + b] = encode(s);

      Poly prod(2 * f - 1, 0);
      for (std::uint32_t i = 0; i < f; ++i)
        for (std::uint32_t j = 0; j < f; ++j)
          prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p;
      Poly r = f == 1 ? prod : poly_mod(prod, modulus, p);
      r.resize(f, 0);
      std::uint32_t v = encode(r);
      mul_[a * q_ + b] = v;
      if (v == 1)
        inv_[a] = b;
    }
  }

  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = g, k = 1;
    while (x != 1) {
      x = mul_[x * q_ + g];
      ++k;
    }
    if (k == q_ - 1) {
      primitive_ = {g};
      break;
    }
  }
}

FieldElement GaloisField::element(std::uint32_t value) const
{
  if (value >= q_)
    throw Error("field element " + std::to_string(value) + " out of range for GF(" +
                std::to_string(q_) + ")");
  return {value};
}

FieldElement GaloisField::from_integer(long long n) const
{
  long long r = n % static_cast<long long>(p_);
  if (r < 0)
    r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement GaloisField::inv(FieldElement a) const
{
  if (a.value == 0)
    throw Error("division by zero in GF(" + std::to_string(q_) + ")");
  return {inv_[a.value]};
}

FieldElement GaloisField::pow(FieldElement a, long long e) const
{
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  FieldElement result = one();
  while (e) {
    if (e & 1)
      result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> GaloisField::coefficients(FieldElement a) const
{
  std::vector<std::uint32_t> c(f_);
  std::uint32_t v = a.value;
  for (std::uint32_t i = 0; i < f_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

std::string GaloisField::to_string(FieldElement a) const
{
  return std::to_string(a.value);
}

} // namespace surfgen
