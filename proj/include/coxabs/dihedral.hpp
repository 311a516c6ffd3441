#pragma once

/**
 * @file dihedral.hpp
 * @brief Symbolic model of the dihedral group I2(m) for arbitrary m >= 2.
 *
 * Elements are normal forms r^k (rotations) and r^k s (reflections) with
 * r = st. No root system is built, so any m works, including bonds the
 * exact field cannot represent.
 */

#include <compare>
#include <string>
#include <vector>

#include "coxabs/bitset.hpp"

namespace coxabs::dihedral {

struct Element {
  long k = 0;
  bool reflection = false;

  friend auto operator<=>(const Element&, const Element&) = default;
};

class Group {
 public:
  /// Throws std::invalid_argument for m < 2.
  explicit Group(long m);

  long m() const { return m_; }
  long order() const { return 2 * m_; }

  Element identity() const { return {0, false}; }
  Element s() const { return {0, true}; }
  Element t() const { return {m_ - 1, true}; }
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  /// Product of the letters; 0 is s and 1 is t.
  Element from_word(const std::vector<int>& word) const;
  /// w0 = (st)^(m/2) for even m, the middle reflection for odd m.
  Element longest_element() const;
  std::vector<Element> elements() const;

  int coxeter_length(const Element& w) const;
  /// 0 for the identity, 1 for reflections, 2 for nontrivial rotations.
  int reflection_length(const Element& w) const;
  bool leq_T(const Element& u, const Element& v) const;
  bool is_involution(const Element& w) const;
  bool is_central(const Element& w) const;

  /// Alternating word in s, t of minimal length, e.g. "s1s2s1"; "1" for the identity.
  std::string word(const Element& w) const;

 private:
  long mod(long x) const { return ((x % m_) + m_) % m_; }
  long m_;
};

/// [1,w]_T on canonically ordered elements (by rank, then normal form).
struct Interval {
  std::vector<Element> elements;
  std::vector<int> ranks;
  std::vector<Bitset> below;
  std::vector<std::pair<int, int>> hasse;

  std::size_t size() const { return elements.size(); }
};

Interval interval(const Group& g, const Element& w);

struct LatticeVerdicts {
  int reflection_length = 0;
  std::size_t interval_size = 0;
  bool bruteforce = true;
  bool structural = true;
  bool classification = true;
};

/// All three lattice tests for [1,w]_T in I2(m). The structural test runs
/// over the parabolic subgroups of I2(m): the trivial group, the m
/// reflection subgroups, and the whole group (involutive iff m is even).
LatticeVerdicts lattice_verdicts(const Group& g, const Element& w);

}  // namespace coxabs::dihedral
