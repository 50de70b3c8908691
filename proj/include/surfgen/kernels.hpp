#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "surfgen/permutation.hpp"

namespace surfgen::kernels
{

// Inner loops over image tables. Every source table handed to `compose`
// must be readable for n + 1 entries (the padding slot of Permutation and of
// class arenas); vector variants gather 32 bits at a time.
struct PermKernels
{
  std::string_view name;

  // out[i] = q[p[i]]
  void (*compose)(Point const *p, Point const *q, Point *out, std::size_t n);

  bool (*is_identity)(Point const *p, std::size_t n);

  std::size_t (*count_fixed)(Point const *p, std::size_t n);
};

PermKernels const &scalar();

// nullptr when the CPU or the build lacks AVX2.
PermKernels const *avx2();

// Selected once: AVX2 when available, unless SURFGEN_KERNELS=scalar.
PermKernels const &active();

} // namespace surfgen::kernels
