#include <cstdlib>
#include <string_view>

#include "surfgen/kernels.hpp"

namespace surfgen::kernels
{

#if defined(SURFGEN_HAVE_AVX2_TU)
PermKernels const &avx2_table();
#endif

PermKernels const *avx2()
{
#if defined(SURFGEN_HAVE_AVX2_TU)
  static bool const supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

PermKernels const &active()
{
  static PermKernels const &chosen = [] () -> PermKernels const & {
    char const *env = std::getenv("SURFGEN_KERNELS");
    if (env && std::string_view(env) == "scalar")
      return scalar();
    if (auto const *v = avx2())
      return *v;
    return scalar();
  }();
  return chosen;
}

} // namespace surfgen::kernels
