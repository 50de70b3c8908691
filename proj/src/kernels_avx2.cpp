#include <immintrin.h>

#include "surfgen/kernels.hpp"

namespace surfgen::kernels
{

namespace
{

// Eight 16-bit lanes 0..7 offset by `base`.
inline __m128i iota16(std::size_t base)
{
  __m128i const step = _mm_setr_epi16(0, 1, 2, 3, 4, 5, 6, 7);
  return _mm_add_epi16(step, _mm_set1_epi16(static_cast<short>(base)));
}

void compose_avx2(Point const *p, Point const *q, Point *out, std::size_t n)
{
  auto const *base = reinterpret_cast<int const *>(q);
  __m256i const low16 = _mm256_set1_epi32(0xFFFF);

  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m128i idx16 = _mm_loadu_si128(reinterpret_cast<__m128i const *>(p + i));
    __m256i idx32 = _mm256_cvtepu16_epi32(idx16);

    // 32-bit loads at 2-byte stride; the low half is q[p[i]].
    __m256i g = _mm256_i32gather_epi32(base, idx32, 2);
    g = _mm256_and_si256(g, low16);

    __m128i lo = _mm256_castsi256_si128(g);
    __m128i hi = _mm256_extracti128_si256(g, 1);
    _mm_storeu_si128(reinterpret_cast<__m128i *>(out + i),
                     _mm_packus_epi32(lo, hi));
  }
  for (; i < n; ++i)
    out[i] = q[p[i]];
}

bool is_identity_avx2(Point const *p, std::size_t n)
{
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m128i v = _mm_loadu_si128(reinterpret_cast<__m128i const *>(p + i));
    __m128i eq = _mm_cmpeq_epi16(v, iota16(i));
    if (_mm_movemask_epi8(eq) != 0xFFFF)
      return false;
  }
  for (; i < n; ++i) {
    if (p[i] != i)
      return false;
  }
  return true;
}

std::size_t count_fixed_avx2(Point const *p, std::size_t n)
{
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m128i v = _mm_loadu_si128(reinterpret_cast<__m128i const *>(p + i));
    __m128i eq = _mm_cmpeq_epi16(v, iota16(i));
    count += static_cast<std::size_t>(
               __builtin_popcount(static_cast<unsigned>(_mm_movemask_epi8(eq)))) / 2;
  }
  for (; i < n; ++i)
    count += p[i] == i;
  return count;
}

} // namespace

PermKernels const &avx2_table()
{
  static PermKernels const table{
    "avx2", compose_avx2, is_identity_avx2, count_fixed_avx2};
  return table;
}

} // namespace surfgen::kernels
