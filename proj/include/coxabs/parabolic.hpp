#pragma once

/**
 * @file parabolic.hpp
 * @brief Parabolic subgroups as closed root subsystems.
 *
 * A parabolic subgroup P is represented by the set of positive roots
 * Phi+ cap U for a subspace U (equivalently the pointwise stabilizer of
 * U^perp). P(w), the parabolic closure of w, is the subsystem lying in the
 * moved space Mov(w) = (V^w)^perp; its rank is the reflection length of w.
 *
 * Simple systems and Coxeter types are computed combinatorially from the
 * reflection table: positive root indices are sorted by height, and the
 * order of s_a s_b is read off by iterating the permutation.
 */

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <memory>
#include <vector>

#include "coxabs/coxeter_type.hpp"
#include "coxabs/element.hpp"

namespace coxabs {

using RootMask = boost::dynamic_bitset<>;

class Parabolic {
 public:
  Parabolic() = default;

  /// Throws std::invalid_argument unless the set equals Phi+ cap span(set).
  static Parabolic from_roots(RootSystemPtr system, std::vector<RootIndex> positive_roots);
  /// Phi+ cap U.
  static Parabolic from_subspace(RootSystemPtr system, const Subspace& span);
  /// Standard parabolic generated by the given simple reflections.
  static Parabolic standard(RootSystemPtr system, const std::vector<int>& generators);
  /// No closure check: the caller guarantees mask = Phi+ cap span(mask).
  static Parabolic from_closed_mask(RootSystemPtr system, RootMask mask);
  static Parabolic trivial(RootSystemPtr system);
  static Parabolic whole(RootSystemPtr system);

  const RootSystemPtr& system_ptr() const { return system_; }
  const RootSystem& system() const { return *system_; }
  const std::vector<RootIndex>& positive_roots() const { return roots_; }
  const RootMask& mask() const { return mask_; }
  const Subspace& span() const { return span_; }
  const std::vector<RootIndex>& simple_system() const { return simple_; }
  /// Simple roots grouped by irreducible component, in the order of type().
  const std::vector<std::vector<RootIndex>>& components() const { return components_; }
  /// One label per irreducible component, sorted.
  const std::vector<TypeLabel>& type() const { return type_; }
  /// Coxeter matrix of the simple system, in simple_system() order.
  const CoxeterMatrix& coxeter_matrix() const { return matrix_; }

  int rank() const { return static_cast<int>(simple_.size()); }
  bool is_trivial() const { return roots_.empty(); }
  bool is_irreducible() const { return type_.size() == 1; }
  std::uint64_t order() const { return group_order(type_); }

  bool contains_root(RootIndex t) const { return t < mask_.size() && mask_.test(t); }
  /// w lies in P iff w fixes span(P)^perp pointwise. The complement is
  /// computed on first use; not thread-safe.
  bool contains(const Element& w) const;
  bool is_subgroup_of(const Parabolic& other) const { return mask_.is_subset_of(other.mask_); }

  /// x P x^-1.
  Parabolic conjugate(const Element& x) const;

  friend bool operator==(const Parabolic& a, const Parabolic& b) {
    return a.system_ == b.system_ && a.roots_ == b.roots_;
  }

 private:
  RootSystemPtr system_;
  std::vector<RootIndex> roots_;
  RootMask mask_;
  Subspace span_;
  std::vector<RootIndex> simple_;
  std::vector<std::vector<RootIndex>> components_;
  std::vector<TypeLabel> type_;
  CoxeterMatrix matrix_;
  mutable std::shared_ptr<const Subspace> complement_;
};

/// Simple system of the closed subsystem with the given positive roots: the
/// roots beta such that no other root a of the set has s_a(beta) positive
/// and lower than beta. Throws std::invalid_argument if the set is not
/// closed under its own reflections.
std::vector<RootIndex> simple_system(const RootSystem& system, std::span<const RootIndex> positive_roots);

/// Order of s_a s_b for positive roots a, b.
int dihedral_order(const RootSystem& system, RootIndex a, RootIndex b);

Parabolic parabolic_closure(const Element& w);

/// The parabolic with roots in span(p) cap span(q). Computed as the
/// intersection of the root sets.
Parabolic intersect(const Parabolic& p, const Parabolic& q);
/// Same subgroup via exact subspace intersection followed by root filtering.
Parabolic intersect_by_span(const Parabolic& p, const Parabolic& q);

inline const std::vector<TypeLabel>& type_of(const Parabolic& p) { return p.type(); }

/// Longest element of the subsystem, as an element of the ambient group.
Element longest_element(const Parabolic& p);

/// The longest element of p acts as -Id on span(p).
bool is_involutive(const Parabolic& p);
/// Every irreducible component has a type in the involutive list.
bool is_involutive_by_type(const Parabolic& p);

/// The unique involution u with P(u) = p. Throws std::domain_error when p
/// is not involutive.
Element central_involution(const Parabolic& p);

/// All x in p with x^2 = 1, including the identity, as products of
/// reflections over pairwise orthogonal root sets; sorted by permutation.
std::vector<Element> enumerate_involutions(const Parabolic& p);

}  // namespace coxabs
