#pragma once

/**
 * @file element.hpp
 * @brief Elements of a finite Coxeter group as permutations of root indices.
 *
 * Composition is right-to-left: (a * b)(beta) = a(b(beta)). The matrix of an
 * element is derived from the images of the simple roots; the fixed space,
 * moved space, and reflection length (codimension of the fixed space) are
 * computed exactly over the field.
 */

#include <atomic>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coxabs/root_system.hpp"

namespace coxabs {

class Element {
 public:
  Element() = default;
  Element(RootSystemPtr system, std::vector<RootIndex> perm);
  Element(const Element& other);
  Element(Element&& other) noexcept;
  Element& operator=(const Element& other);
  Element& operator=(Element&& other) noexcept;

  static Element identity(RootSystemPtr system);
  static Element simple(RootSystemPtr system, int s);
  /// The reflection along positive root t.
  static Element reflection(RootSystemPtr system, RootIndex t);
  /// Product of simple reflections, left to right; throws on indices >= rank.
  static Element from_word(RootSystemPtr system, std::span<const int> word);

  const RootSystem& system() const { return *system_; }
  const RootSystemPtr& system_ptr() const { return system_; }
  std::span<const RootIndex> perm() const { return perm_; }
  RootIndex operator()(RootIndex i) const { return perm_[i]; }

  /// Throws std::invalid_argument for elements of different systems.
  Element operator*(const Element& rhs) const;
  Element inverse() const;
  /// x * this * x^-1.
  Element conjugate_by(const Element& x) const;

  bool is_identity() const;
  bool is_involution() const;
  bool commutes_with(const Element& other) const;
  /// Positive root index of this element if it is a reflection, else -1.
  long as_reflection() const;

  int coxeter_length() const;
  /// N(w) = { t : w^-1(alpha_t) < 0 }, as sorted positive root indices.
  std::vector<RootIndex> inversion_set() const;
  /// A reduced S-word, found by descent.
  std::vector<int> reduced_word() const;

  /// n x n matrix in the simple-root basis (column s = w(alpha_s)).
  FieldMatrix matrix() const;
  Subspace fixed_space() const;
  Subspace moved_space() const;
  /// n - dim V^w, cached after the first call.
  int reflection_length() const;

  friend bool operator==(const Element& a, const Element& b) { return a.perm_ == b.perm_; }
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    return a.perm_ <=> b.perm_;
  }

 private:
  RootSystemPtr system_;
  std::vector<RootIndex> perm_;
  mutable std::atomic<int> reflection_length_{-1};
};

struct ElementHash {
  std::size_t operator()(const Element& w) const;
};

Element longest_element(RootSystemPtr system);

/// True iff the roots of the given reflections are linearly independent,
/// equivalently the product has reflection length equal to ts.size().
bool validate_T_reduced(const RootSystem& system, std::span<const RootIndex> ts);

/// Breadth-first enumeration of W from the identity by simple reflections,
/// ordered by Coxeter length and then by permutation. Throws CapExceeded
/// past group_size_cap() unless allow_large, and always past the hard cap.
std::vector<Element> enumerate_group(const RootSystemPtr& system, bool allow_large = false);

/// "s1,s2,..." style word text, 1-based.
std::string word_to_string(std::span<const int> word);

/// Parses "s1,s2,3", 1-based, and "s,t" for rank two. Throws on malformed input.
std::vector<int> parse_word(std::string_view text, int rank);

}  // namespace coxabs
