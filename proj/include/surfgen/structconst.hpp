#pragma once

#include <cstdint>
#include <string_view>

#include "surfgen/classes.hpp"

namespace surfgen
{

/// d_ijl: the number of pairs (x, y) in Ci x Cj with x y = z for a fixed z
/// in Cl (the representative). Iterates over the smaller of Ci and Cj and
/// probes a hashed index of the inverse of the other class, so
///   x in Ci counts when z^-1 x lies in Cj^-1, and
///   y in Cj counts when y z^-1 lies in Ci^-1.
/// Classes that are not materialized are materialized on demand.
BigInt count_dijl(ConjugacyClass const &cls_i, ConjugacyClass const &cls_j, ConjugacyClass const &cls_l,
                  unsigned workers = 1, std::size_t cap = default_class_cap);

/// Same count with an explicit target z.
BigInt count_products(ConjugacyClass const &cls_i, ConjugacyClass const &cls_j, Permutation const &z,
                      unsigned workers = 1, std::size_t cap = default_class_cap);

enum class Family
{
  PSL2,
  Suzuki,
  D4,
  G2
};

/// Family parameters for the generic-q formulas.
///   PSL2 (odd q): eps = q mod 4 as +-1, alpha = (q-eps)/4, beta = (q-eps)/2,
///                 gamma = (q+eps)/2.
///   Suzuki:       q = 2 s^2, alpha = q-2s+1, beta = q-1, gamma = q+2s+1.
///   D4:           alpha = q^4-q^2+1, beta = q^2+q+1.
///   G2:           q = 3 s^2 with s = 3^f, f >= 1, alpha = (q-1)/2,
///                 beta = q+3s+1.
struct GenericFamilyParams
{
  Family family;
  BigInt field_size, root;
  BigInt alpha, beta, gamma;
  int epsilon = 0;

  static GenericFamilyParams make(Family family, std::uint64_t field_size);
};

bool is_prime_power(std::uint64_t field_size);

/// Suzuki coefficients by label: "123", "121", "212", "232", "323", "131",
/// "313".
BigInt suzuki_d(GenericFamilyParams const &params, std::string_view which);

/// "121" or "212" for the D4 and G2 families.
BigInt d4_d(GenericFamilyParams const &params, std::string_view which);
BigInt g2_d(GenericFamilyParams const &params, std::string_view which);

} // namespace surfgen
