#pragma once

#include <cstdint>
#include <random>

namespace surfgen
{

/// Deterministic random stream. Equal (seed, stream) pairs produce equal
/// sequences on every platform: the engine is mt19937_64 keyed through
/// std::seed_seq, and bounded draws use our own rejection sampling rather
/// than the implementation-defined std distributions.
class RandomSource
{
public:
  explicit RandomSource(std::uint64_t seed = 0, std::uint64_t stream = 0);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return (next() >> 63) != 0; }

  /// An independent source derived from this one's key.
  RandomSource split(std::uint64_t sub_stream) const;

private:
  std::uint64_t seed_, stream_;
  std::mt19937_64 engine_;
};

} // namespace surfgen
