#include <atomic>
#include <thread>

#include "surfgen/kernels.hpp"
#include "surfgen/structconst.hpp"

namespace surfgen
{

namespace
{

std::uint64_t count_rows(ClassIndex const &iter, ClassIndex const &probe, Permutation const &fixed,
                         bool fixed_on_left, std::size_t begin, std::size_t end)
{
  auto const &K = kernels::active();
  std::size_t const n = iter.degree();
  std::vector<Point> w(n + 1, 0);
  std::uint64_t hits = 0;
  for (std::size_t r = begin; r < end; ++r) {
    if (fixed_on_left)
      K.compose(fixed.data(), iter.element_data(r), w.data(), n);
    else
      K.compose(iter.element_data(r), fixed.data(), w.data(), n);
    if (probe.find(w.data()))
      ++hits;
  }
  return hits;
}

std::uint64_t sharded_count(ClassIndex const &iter, ClassIndex const &probe,
                            Permutation const &fixed, bool fixed_on_left, unsigned workers)
{
  std::size_t rows = iter.size();
  if (workers <= 1 || rows < 4096)
    return count_rows(iter, probe, fixed, fixed_on_left, 0, rows);

  std::atomic<std::uint64_t> total{0};
  std::vector<std::thread> pool;
  std::size_t chunk = (rows + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t b = w * chunk, e = std::min(rows, b + chunk);
    if (b >= e)
      break;
    pool.emplace_back(
      [&, b, e] { total += count_rows(iter, probe, fixed, fixed_on_left, b, e); });
  }
  for (std::thread &t : pool)
    t.join();
  return total;
}

ConjugacyClass materialized(ConjugacyClass const &C, std::size_t cap)
{
  return C.materialized() ? C : class_of(C.owner, C.representative, true, cap);
}

BigInt ipow(BigInt const &b, unsigned e)
{
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i)
    r *= b;
  return r;
}

// Coefficients listed from the highest power down.
BigInt horner(BigInt const &field_size, std::initializer_list<BigInt> coeffs)
{
  BigInt r = 0;
  for (BigInt const &c : coeffs)
    r = r * field_size + c;
  return r;
}

} // namespace

BigInt count_products(ConjugacyClass const &cls_i, ConjugacyClass const &cls_j, Permutation const &z,
                      unsigned workers, std::size_t cap)
{
  GroupHandle const &grp = cls_i.owner;
  Permutation target = z.extended(grp.degree());
  Permutation zinv = ~target;

  if (cls_i.size <= cls_j.size) {
    // x in Ci with x^-1 z in Cj, i.e. z^-1 x in Cj^-1.
    ConjugacyClass iter = materialized(cls_i, cap);
    ConjugacyClass probe = class_of(grp, ~cls_j.representative, true, cap);
    return sharded_count(*iter.index, *probe.index, zinv, true, workers);
  }
  // y in Cj with z y^-1 in Ci, i.e. y z^-1 in Ci^-1.
  ConjugacyClass iter = materialized(cls_j, cap);
  ConjugacyClass probe = class_of(grp, ~cls_i.representative, true, cap);
  return sharded_count(*iter.index, *probe.index, zinv, false, workers);
}

BigInt count_dijl(ConjugacyClass const &cls_i, ConjugacyClass const &cls_j, ConjugacyClass const &cls_l,
                  unsigned workers, std::size_t cap)
{
  return count_products(cls_i, cls_j, cls_l.representative, workers, cap);
}

bool is_prime_power(std::uint64_t field_size)
{
  if (field_size < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= field_size; ++p) {
    if (field_size % p == 0) {
      while (field_size % p == 0)
        field_size /= p;
      return field_size == 1;
    }
  }
  return true;
}

GenericFamilyParams GenericFamilyParams::make(Family family, std::uint64_t field_size)
{
  GenericFamilyParams params{family, BigInt(field_size), 0, 0, 0, 0, 0};
  switch (family) {
  case Family::PSL2:
    if (!is_prime_power(field_size) || field_size % 2 == 0)
      throw Error("PSL2 parameters need an odd prime power q");
    params.epsilon = field_size % 4 == 1 ? 1 : -1;
    params.alpha = (params.field_size - params.epsilon) / 4;
    params.beta = (params.field_size - params.epsilon) / 2;
    params.gamma = (params.field_size + params.epsilon) / 2;
    break;
  case Family::Suzuki: {
    std::uint64_t root = 1;
    while (2 * root * root < field_size)
      root *= 2;
    // q = 2 s^2 with s = 2^f, f >= 1, means q is an odd power of 2 at least 8.
    if (2 * root * root != field_size || root < 2)
      throw Error("Suzuki parameters need q = 2^(2f+1) >= 8, got " + std::to_string(field_size));
    params.root = root;
    params.alpha = params.field_size - 2 * params.root + 1;
    params.beta = params.field_size - 1;
    params.gamma = params.field_size + 2 * params.root + 1;
    break;
  }
  case Family::D4:
    if (!is_prime_power(field_size))
      throw Error("3D4 parameters need a prime power q >= 2");
    params.alpha = ipow(params.field_size, 4) - ipow(params.field_size, 2) + 1;
    params.beta = ipow(params.field_size, 2) + params.field_size + 1;
    break;
  case Family::G2: {
    std::uint64_t root = 3;
    while (3 * root * root < field_size)
      root *= 3;
    if (3 * root * root != field_size)
      throw Error("2G2 parameters need q = 3 s^2 with s = 3^f, f >= 1, got " +
                  std::to_string(field_size));
    params.root = root;
    params.alpha = (params.field_size - 1) / 2;
    params.beta = params.field_size + 3 * params.root + 1;
    break;
  }
  }
  return params;
}

BigInt suzuki_d(GenericFamilyParams const &params, std::string_view which)
{
  if (params.family != Family::Suzuki)
    throw Error("suzuki_d needs Suzuki parameters");
  BigInt const &field_size = params.field_size;
  BigInt const t = 2 * params.root;
  if (which == "123")
    return horner(field_size, {1, t + 1, 1, t + 1});
  if (which == "121")
    return horner(field_size, {1, 1 + t, 1, 1 + t});
  if (which == "212")
    return horner(field_size, {1, 1 + t, -1, -(1 + t)});
  if (which == "232")
    return horner(field_size, {1, 1 - t, -1, -(1 - t)});
  if (which == "323")
    return horner(field_size, {1, 1 - t, 1, 1 - t});
  if (which == "131")
    return horner(field_size, {1, -1, 2 * t - 1, 1});
  if (which == "313")
    return horner(field_size, {1, -1, -(2 * t + 1), 1});
  throw Error("unknown Suzuki coefficient d" + std::string(which));
}

BigInt d4_d(GenericFamilyParams const &params, std::string_view which)
{
  if (params.family != Family::D4)
    throw Error("d4_d needs 3D4 parameters");
  // Degrees 20 down to 0; the two polynomials differ at q^11 and q^10 and q^9.
  if (which == "121")
    return horner(params.field_size, {1, -2, 1, 2, -4, 2, 1, -2, 1, 4, -8, 4, 1, -2, 1, 2, -4, 2, 1, -2, 1});
  if (which == "212")
    return horner(params.field_size, {1, -2, 1, 2, -4, 2, 1, -2, 1, -8, 16, -8, 1, -2, 1, 2, -4, 2, 1, -2, 1});
  throw Error("unknown 3D4 coefficient d" + std::string(which));
}

BigInt g2_d(GenericFamilyParams const &params, std::string_view which)
{
  if (params.family != Family::G2)
    throw Error("g2_d needs 2G2 parameters");
  BigInt const u = 2 - 3 * params.root, v = 1 - 3 * params.root;
  if (which == "121")
    return horner(params.field_size, {1, u, v, 1, u, v});
  if (which == "212")
    return horner(params.field_size, {1, u, v, -1, -u, -v});
  throw Error("unknown 2G2 coefficient d" + std::string(which));
}

} // namespace surfgen
