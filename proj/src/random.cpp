#include "surfgen/permutation.hpp"
#include "surfgen/random.hpp"

namespace surfgen
{

namespace
{

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream)
{
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

} // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
: seed_(seed), stream_(stream), engine_(make_engine(seed, stream))
{}

std::uint64_t RandomSource::below(std::uint64_t bound)
{
  if (bound == 0)
    throw Error("RandomSource::below called with an empty range");

  std::uint64_t const limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = next();
    if (x < limit)
      return x % bound;
  }
}

RandomSource RandomSource::split(std::uint64_t sub_stream) const
{
  // Mix the sub-stream into the stream word so siblings never coincide.
  std::uint64_t s = stream_ * 0x9E3779B97F4A7C15ull + sub_stream + 1;
  return RandomSource(seed_, s);
}

} // namespace surfgen
