#pragma once

// Exact linear algebra over FieldScalar: row reduction, kernels, and
// subspaces of V = K^n held in reduced row-echelon form.

#include <span>
#include <vector>

#include "coxabs/field.hpp"

namespace coxabs {

using FieldVector = std::vector<FieldScalar>;
/// Row-major dense matrix.
using FieldMatrix = std::vector<FieldVector>;

/// Reduces `rows` in place to reduced row-echelon form, dropping zero rows.
/// Returns the pivot column of each remaining row.
std::vector<int> row_reduce(FieldMatrix& rows, int columns);

int matrix_rank(FieldMatrix rows, int columns);

/// Basis of { x : a x = 0 } for an r x columns matrix a.
FieldMatrix kernel_basis(const FieldMatrix& a, int columns);

FieldScalar dot(std::span<const FieldScalar> a, std::span<const FieldScalar> b);

/// x^T g y.
FieldScalar bilinear(const FieldMatrix& gram, std::span<const FieldScalar> x,
                     std::span<const FieldScalar> y);

/// A subspace of K^n, stored as its unique reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient_dim) : ambient_(ambient_dim) {}

  static Subspace zero(int ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(int ambient_dim);
  static Subspace span(int ambient_dim, FieldMatrix vectors);
  static Subspace kernel(const FieldMatrix& a, int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const FieldMatrix& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(std::span<const FieldScalar> v) const;
  bool is_subspace_of(const Subspace& other) const;

  Subspace intersect(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  /// { x : B(u, x) = 0 for all u in this } under the given Gram matrix.
  Subspace orthogonal_complement(const FieldMatrix& gram) const;
  /// Annihilator under the standard dot product.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  int ambient_ = 0;
  FieldMatrix rows_;
  std::vector<int> pivots_;
};

}  // namespace coxabs
