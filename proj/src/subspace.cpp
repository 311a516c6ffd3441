#include "coxabs/subspace.hpp"

#include <stdexcept>
#include <utility>

namespace coxabs {

std::vector<int> row_reduce(FieldMatrix& rows, int columns) {
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col = 0; col < columns && next < rows.size(); ++col) {
    // Prefer a rational pivot: its inverse is cheap and it keeps entries small.
    std::size_t pivot = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      if (pivot == rows.size()) pivot = r;
      if (rows[r][col].is_rational()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    FieldVector& prow = rows[next];
    if (!prow[col].is_one()) {
      const FieldScalar inv = prow[col].inverse();
      for (int k = col; k < columns; ++k) {
        if (!prow[k].is_zero()) prow[k] *= inv;
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next || rows[r][col].is_zero()) continue;
      const FieldScalar f = rows[r][col];
      for (int k = col; k < columns; ++k) {
        if (!prow[k].is_zero()) rows[r][k] -= f * prow[k];
      }
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

int matrix_rank(FieldMatrix rows, int columns) {
  return static_cast<int>(row_reduce(rows, columns).size());
}

FieldMatrix kernel_basis(const FieldMatrix& a, int columns) {
  FieldMatrix r = a;
  const std::vector<int> pivots = row_reduce(r, columns);
  std::vector<bool> is_pivot(columns, false);
  for (int p : pivots) is_pivot[p] = true;
  FieldMatrix basis;
  for (int free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(columns);
    v[free] = FieldScalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldScalar dot(std::span<const FieldScalar> a, std::span<const FieldScalar> b) {
  FieldScalar s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  }
  return s;
}

FieldScalar bilinear(const FieldMatrix& gram, std::span<const FieldScalar> x,
                     std::span<const FieldScalar> y) {
  FieldScalar s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    FieldScalar row;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!y[j].is_zero() && !gram[i][j].is_zero()) row += gram[i][j] * y[j];
    }
    if (!row.is_zero()) s += x[i] * row;
  }
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  FieldMatrix id(ambient_dim, FieldVector(ambient_dim));
  for (int i = 0; i < ambient_dim; ++i) id[i][i] = FieldScalar(1);
  Subspace s(ambient_dim);
  s.rows_ = std::move(id);
  for (int i = 0; i < ambient_dim; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(int ambient_dim, FieldMatrix vectors) {
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != ambient_dim) throw std::invalid_argument("vector dimension mismatch");
  }
  Subspace s(ambient_dim);
  s.pivots_ = row_reduce(vectors, ambient_dim);
  s.rows_ = std::move(vectors);
  return s;
}

Subspace Subspace::kernel(const FieldMatrix& a, int ambient_dim) {
  return span(ambient_dim, kernel_basis(a, ambient_dim));
}

bool Subspace::contains(std::span<const FieldScalar> v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("vector dimension mismatch");
  FieldVector r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int p = pivots_[i];
    if (r[p].is_zero()) continue;
    const FieldScalar f = r[p];
    for (int k = p; k < ambient_; ++k) {
      if (!rows_[i][k].is_zero()) r[k] -= f * rows_[i][k];
    }
  }
  for (const auto& x : r) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  for (const auto& row : rows_) {
    if (!other.contains(row)) return false;
  }
  return true;
}

Subspace Subspace::annihilator() const { return kernel(rows_, ambient_); }

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient dimension mismatch");
  FieldMatrix constraints = annihilator().rows_;
  const FieldMatrix& more = other.annihilator().rows_;
  constraints.insert(constraints.end(), more.begin(), more.end());
  return kernel(constraints, ambient_);
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient dimension mismatch");
  FieldMatrix all = rows_;
  all.insert(all.end(), other.rows_.begin(), other.rows_.end());
  return span(ambient_, std::move(all));
}

Subspace Subspace::orthogonal_complement(const FieldMatrix& gram) const {
  FieldMatrix ug;
  ug.reserve(rows_.size());
  for (const auto& u : rows_) {
    FieldVector row(ambient_);
    for (int j = 0; j < ambient_; ++j) {
      for (int i = 0; i < ambient_; ++i) {
        if (!u[i].is_zero() && !gram[i][j].is_zero()) row[j] += u[i] * gram[i][j];
      }
    }
    ug.push_back(std::move(row));
  }
  return kernel(ug, ambient_);
}

}  // namespace coxabs
