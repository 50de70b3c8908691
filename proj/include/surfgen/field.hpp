#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace surfgen
{

/// Element of GF(p^f), encoded as the integer sum c_i * p^i of its
/// coefficient vector over the prime field (basis 1, x, x^2, ...).
struct FieldElement
{
  std::uint32_t value = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

/// GF(p^f) modulo the lexicographically smallest monic irreducible
/// polynomial of degree f, comparing coefficient vectors from the x^(f-1)
/// coefficient down to the constant term. Arithmetic is table driven, so
/// the field size is capped.
class GaloisField
{
public:
  static constexpr std::uint32_t max_size = 1u << 12;

  GaloisField(std::uint32_t p, std::uint32_t f);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return f_; }
  std::uint32_t size() const { return q_; }

  /// Coefficients c_0 .. c_{f-1} of the modulus without the leading 1.
  std::vector<std::uint32_t> const &modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  FieldElement element(std::uint32_t value) const;
  FieldElement from_integer(long long n) const;

  /// A generator of the multiplicative group (smallest encoding).
  FieldElement primitive() const { return primitive_; }

  FieldElement add(FieldElement a, FieldElement b) const { return {add_[a.value * q_ + b.value]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const { return {neg_[a.value]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[a.value * q_ + b.value]}; }
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, long long e) const;

  std::vector<std::uint32_t> coefficients(FieldElement a) const;

  std::string to_string(FieldElement a) const;

private:
  std::uint32_t p_, f_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
  FieldElement primitive_;
};

bool is_prime(std::uint64_t n);

} // namespace surfgen
