#include <algorithm>
#include <map>

#include "surfgen/matrix.hpp"

namespace surfgen
{

Matrix::Matrix(std::shared_ptr<GaloisField const> field, std::size_t dim)
: field_(std::move(field)), dim_(dim), entries_(dim * dim)
{}

Matrix::Matrix(std::shared_ptr<GaloisField const> field, std::size_t dim,
               std::vector<FieldElement> entries)
: field_(std::move(field)), dim_(dim), entries_(std::move(entries))
{
  if (entries_.size() != dim_ * dim_)
    throw Error("matrix needs " + std::to_string(dim_ * dim_) + " entries, got " +
                std::to_string(entries_.size()));
  for (FieldElement e : entries_)
    field_->element(e.value);
}

Matrix Matrix::identity(std::shared_ptr<GaloisField const> field, std::size_t dim)
{
  Matrix m(field, dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = field->one();
  return m;
}

Matrix Matrix::operator*(Matrix const &rhs) const
{
  if (dim_ != rhs.dim_)
    throw Error("matrix dimension mismatch");

  GaloisField const &F = *field_;
  Matrix out(field_, dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      FieldElement s = F.zero();
      for (std::size_t k = 0; k < dim_; ++k)
        s = F.add(s, F.mul((*this)(r, k), rhs(k, c)));
      out(r, c) = s;
    }
  }
  return out;
}

bool Matrix::operator==(Matrix const &rhs) const
{
  return dim_ == rhs.dim_ && entries_ == rhs.entries_;
}

FieldElement Matrix::determinant() const
{
  GaloisField const &F = *field_;
  std::vector<FieldElement> a = entries_;
  FieldElement det = F.one();

  for (std::size_t col = 0; col < dim_; ++col) {
    std::size_t pivot = col;
    while (pivot < dim_ && a[pivot * dim_ + col].value == 0)
      ++pivot;
    if (pivot == dim_)
      return F.zero();
    if (pivot != col) {
      for (std::size_t k = 0; k < dim_; ++k)
        std::swap(a[pivot * dim_ + k], a[col * dim_ + k]);
      det = F.neg(det);
    }

    FieldElement pv = a[col * dim_ + col];
    det = F.mul(det, pv);
    FieldElement pinv = F.inv(pv);

    for (std::size_t r = col + 1; r < dim_; ++r) {
      FieldElement factor = F.mul(a[r * dim_ + col], pinv);
      if (factor.value == 0)
        continue;
      for (std::size_t k = col; k < dim_; ++k)
        a[r * dim_ + k] = F.sub(a[r * dim_ + k], F.mul(factor, a[col * dim_ + k]));
    }
  }
  return det;
}

FieldVector Matrix::apply(FieldVector const &v) const
{
  GaloisField const &F = *field_;
  FieldVector out(dim_, F.zero());
  for (std::size_t k = 0; k < dim_; ++k) {
    if (v[k].value == 0)
      continue;
    for (std::size_t c = 0; c < dim_; ++c)
      out[c] = F.add(out[c], F.mul(v[k], (*this)(k, c)));
  }
  return out;
}

FieldVector normalize_projective(GaloisField const &field, FieldVector v)
{
  auto it = std::find_if(v.begin(), v.end(), [](FieldElement x) { return x.value != 0; });
  if (it == v.end())
    throw Error("the zero vector has no projective point");
  FieldElement s = field.inv(*it);
  for (FieldElement &x : v)
    x = field.mul(s, x);
  return v;
}

ProjectiveAction matrix_to_permutation_group(std::vector<Matrix> const &gens,
                                             std::vector<FieldVector> const &seeds,
                                             std::size_t cap)
{
  if (seeds.empty())
    throw Error("at least one seed vector is required");

  std::shared_ptr<GaloisField const> field;
  std::size_t dim = seeds.front().size();
  if (!gens.empty()) {
    field = gens.front().field_ptr();
    dim = gens.front().dim();
  }

  for (Matrix const &m : gens) {
    if (m.dim() != dim || m.field().size() != field->size())
      throw Error("matrix generators disagree on dimension or field");
    if (m.determinant().value == 0)
      throw Error("matrix generator is not invertible");
  }

  std::map<FieldVector, std::size_t> index;
  std::vector<FieldVector> queue;

  for (FieldVector const &s : seeds) {
    if (s.size() != dim)
      throw Error("seed vector has the wrong dimension");
    FieldVector v = field ? normalize_projective(*field, s) : s;
    if (index.emplace(v, queue.size()).second)
      queue.push_back(std::move(v));
  }

  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Matrix const &m : gens) {
      FieldVector w = normalize_projective(*field, m.apply(queue[head]));
      if (index.emplace(w, queue.size()).second) {
        queue.push_back(std::move(w));
        if (queue.size() > cap)
          throw Error("projective orbit exceeds the cap of " + std::to_string(cap) + " points");
      }
    }
  }

  if (queue.size() > max_degree)
    throw Error("projective orbit of " + std::to_string(queue.size()) +
                " points exceeds the permutation degree limit");

  // std::map iterates in lexicographic order of the normalized vectors.
  ProjectiveAction result;
  std::size_t rank = 0;
  for (auto &[v, pos] : index) {
    pos = rank++;
    result.points.push_back(v);
  }

  for (Matrix const &m : gens) {
    std::vector<Point> images(result.points.size());
    for (std::size_t i = 0; i < result.points.size(); ++i) {
      FieldVector w = normalize_projective(*field, m.apply(result.points[i]));
      images[i] = static_cast<Point>(index.at(w));
    }
    result.generators.emplace_back(std::move(images));
  }

  return result;
}

} // namespace surfgen
