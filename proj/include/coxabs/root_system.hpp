#pragma once

/**
 * @file root_system.hpp
 * @brief The finite root system of a Coxeter matrix in its geometric
 * representation.
 *
 * Roots are unit vectors for the form B(a_s, a_t) = -cos(pi/m_st), written
 * in the simple-root basis. Root indices are canonical: the N positive
 * roots come first, sorted by height and then lexicographically by
 * coordinate, and index i + N holds the negative of root i. Positive root
 * index t doubles as the index of the reflection t.
 */

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "coxabs/coxeter_type.hpp"
#include "coxabs/subspace.hpp"

namespace coxabs {

using RootIndex = std::uint32_t;

inline constexpr std::size_t kMaxRoots = 1'000'000;

class RootSystem {
 public:
  /// Throws std::domain_error for non-positive-definite (infinite) types,
  /// std::invalid_argument for bond labels outside {2,...,6}.
  static std::shared_ptr<const RootSystem> build(const CoxeterMatrix& matrix);
  static std::shared_ptr<const RootSystem> build(std::string_view type_text) {
    return build(CoxeterMatrix::named(type_text));
  }

  int rank() const { return matrix_.rank(); }
  const CoxeterMatrix& matrix() const { return matrix_; }
  const FieldMatrix& gram() const { return gram_; }

  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive() const { return roots_.size() / 2; }
  std::size_t num_reflections() const { return num_positive(); }

  const FieldVector& root(RootIndex i) const { return roots_[i]; }
  bool is_positive(RootIndex i) const { return i < num_positive(); }
  RootIndex negate(RootIndex i) const {
    const auto n = static_cast<RootIndex>(num_positive());
    return i < n ? i + n : i - n;
  }
  /// The positive root of the line through root i.
  RootIndex positive_of(RootIndex i) const { return is_positive(i) ? i : negate(i); }

  RootIndex simple_root(int s) const { return simple_[s]; }
  /// Index of a root with the given coordinates, or -1.
  long find_root(std::span<const FieldScalar> coords) const;

  /// Row t of the reflection table: the permutation of root indices induced
  /// by the reflection along positive root t.
  std::span<const RootIndex> reflection(RootIndex t) const {
    return {reflections_.data() + static_cast<std::size_t>(t) * roots_.size(), roots_.size()};
  }
  RootIndex reflect(RootIndex t, RootIndex i) const {
    return reflections_[static_cast<std::size_t>(t) * roots_.size() + i];
  }
  std::span<const RootIndex> simple_reflection(int s) const { return reflection(simple_[s]); }

  /// B(beta_i, beta_j).
  FieldScalar form(RootIndex i, RootIndex j) const;
  /// Exact orthogonality, read off the reflection table.
  bool orthogonal(RootIndex i, RootIndex j) const { return reflect(positive_of(i), j) == j; }

  /// Sum of the coordinates; the primary sort key of the positive roots.
  FieldScalar height(RootIndex i) const;

 private:
  RootSystem() = default;

  CoxeterMatrix matrix_;
  FieldMatrix gram_;
  std::vector<FieldVector> roots_;
  std::vector<RootIndex> simple_;
  std::vector<RootIndex> reflections_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Gram matrix B(a_s, a_t) = -cos(pi / m_st).
FieldMatrix gram_matrix(const CoxeterMatrix& matrix);

/// Exact positive-definiteness test via the pivots of symmetric elimination.
bool is_positive_definite(const FieldMatrix& gram);

}  // namespace coxabs
