#pragma once

/**
 * @file oracles.hpp
 * @brief Deliberately naive reference computations, used only to check the
 * main code paths.
 *
 * Nothing here uses fixed spaces, parabolic closures, or the involution
 * enumeration: reflection lengths come from deletion searches on S-words or
 * from breadth-first search in the Cayley graph of (W, T).
 */

#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "coxabs/absolute_order.hpp"
#include "coxabs/element.hpp"

namespace coxabs::oracle {

inline constexpr std::size_t kDyerWordCap = 16;
inline constexpr int kExpressionLengthCap = 4;

/// Fewest letters to delete from a reduced S-word so that the rest
/// multiplies to the identity. Throws std::invalid_argument for non-reduced
/// words and CapExceeded past kDyerWordCap letters.
int dyer_reflection_length(const RootSystemPtr& system, std::span<const int> word);

/// Distances from the identity in the Cayley graph of W with respect to all
/// reflections. Enumerates the whole group, so the group-size caps apply.
class CayleyLengths {
 public:
  explicit CayleyLengths(RootSystemPtr system, bool allow_large = false);

  const RootSystemPtr& system() const { return system_; }
  const std::vector<Element>& reflections() const { return reflections_; }
  std::size_t group_order() const { return distance_.size(); }
  /// Throws std::out_of_range for elements of another system.
  int operator()(const Element& w) const;

 private:
  RootSystemPtr system_;
  std::vector<Element> reflections_;
  std::unordered_map<Element, int, ElementHash> distance_;
};

/// [1,u]_T by breadth-first search from the identity through right
/// multiplication by reflections, keeping x with d(x) + d(x^-1 u) = d(u).
/// Hasse edges are the cover pairs of the resulting order.
IntervalPoset cayley_interval(const Element& u, const CayleyLengths& lengths);
IntervalPoset cayley_interval(const Element& u);

using ReflectionTuple = std::vector<RootIndex>;

/// Every (t_1, ..., t_k), k = d(u), of reflections with t_1 ... t_k = u.
/// Throws CapExceeded when d(u) > kExpressionLengthCap.
std::set<ReflectionTuple> t_reduced_expressions(const Element& u, const CayleyLengths& lengths);
std::set<ReflectionTuple> t_reduced_expressions(const Element& u);

/// Orbits under the Hurwitz moves (.., a, b, ..) -> (.., aba, a, ..) and
/// their inverses, each sorted, listed in order of their smallest tuple.
std::vector<std::set<ReflectionTuple>> hurwitz_orbits(const RootSystem& system,
                                                      const std::set<ReflectionTuple>& tuples);

}  // namespace coxabs::oracle
