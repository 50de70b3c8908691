#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "surfgen/field.hpp"
#include "surfgen/permutation.hpp"

namespace surfgen
{

using FieldVector = std::vector<FieldElement>;

/// Square matrix over a GaloisField acting on row vectors: v -> v * M.
class Matrix
{
public:
  Matrix(std::shared_ptr<GaloisField const> field, std::size_t dim);
  Matrix(std::shared_ptr<GaloisField const> field, std::size_t dim,
         std::vector<FieldElement> entries);

  static Matrix identity(std::shared_ptr<GaloisField const> field, std::size_t dim);

  std::size_t dim() const { return dim_; }
  GaloisField const &field() const { return *field_; }
  std::shared_ptr<GaloisField const> const &field_ptr() const { return field_; }

  FieldElement operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  FieldElement &operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }

  Matrix operator*(Matrix const &rhs) const;
  bool operator==(Matrix const &rhs) const;

  FieldElement determinant() const;

  FieldVector apply(FieldVector const &v) const;

private:
  std::shared_ptr<GaloisField const> field_;
  std::size_t dim_;
  std::vector<FieldElement> entries_;
};

/// Scales v so that its first nonzero coordinate is 1.
FieldVector normalize_projective(GaloisField const &field, FieldVector v);

struct ProjectiveAction
{
  std::vector<FieldVector> points;     // canonical order
  std::vector<Permutation> generators; // one per input matrix
};

inline constexpr std::size_t default_orbit_cap = std::size_t{1} << 22;

/// Enumerates the projective orbit of the seeds under the matrices and
/// returns the induced permutations on the sorted orbit.
ProjectiveAction matrix_to_permutation_group(std::vector<Matrix> const &gens,
                                             std::vector<FieldVector> const &seeds,
                                             std::size_t cap = default_orbit_cap);

} // namespace surfgen
