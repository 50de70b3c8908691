#include "surfgen/kernels.hpp"

namespace surfgen::kernels
{

namespace
{

void compose_scalar(Point const *p, Point const *q, Point *out, std::size_t n)
{
  for (std::size_t i = 0; i < n; ++i)
    out[i] = q[p[i]];
}

bool is_identity_scalar(Point const *p, std::size_t n)
{
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] != i)
      return false;
  }
  return true;
}

std::size_t count_fixed_scalar(Point const *p, std::size_t n)
{
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    count += p[i] == i;
  return count;
}

} // namespace

PermKernels const &scalar()
{
  static PermKernels const table{
    "scalar", compose_scalar, is_identity_scalar, count_fixed_scalar};
  return table;
}

} // namespace surfgen::kernels
