#pragma once

/**
 * @file absolute_order.hpp
 * @brief The absolute order u <=_T v iff l_T(u) + l_T(u^-1 v) = l_T(v), the
 * intervals [1, u]_T below involutions, and two independent lattice tests.
 *
 * The interval below an involution u is built as the set of involutions of
 * its parabolic closure P(u); the order on it is then computed pairwise from
 * reflection lengths. The brute-force lattice test works on the resulting
 * down-sets alone. The structural test asks whether the involutive
 * parabolic subgroups of P(u) are closed under intersection.
 */

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxabs/bitset.hpp"
#include "coxabs/element.hpp"
#include "coxabs/parabolic.hpp"

namespace coxabs {

/// Memoized reflection lengths keyed by element. Not thread-safe.
class LengthCache {
 public:
  int operator()(const Element& w);
  std::size_t size() const { return lengths_.size(); }

 private:
  std::unordered_map<Element, int, ElementHash> lengths_;
};

bool leq_T(const Element& u, const Element& v);
bool leq_T(const Element& u, const Element& v, LengthCache& lengths);

/// A finite graded poset on canonically ordered elements (by rank, then by
/// permutation). below[j] holds { i : elements[i] <= elements[j] }.
struct IntervalPoset {
  Element top;
  std::vector<Element> elements;
  std::vector<int> ranks;
  std::vector<Bitset> below;
  std::vector<std::pair<int, int>> hasse;

  std::size_t size() const { return elements.size(); }
  bool leq(std::size_t i, std::size_t j) const { return below[j].test(i); }
  /// Index of w, or -1.
  long index_of(const Element& w) const;
};

/// Sorts elements by (rank, permutation) and fills ranks; shared canonical
/// ordering for every poset built from group elements.
void canonical_order(std::vector<Element>& elements, LengthCache& lengths);

/// [1,u]_T for an involution u. Throws std::invalid_argument otherwise.
IntervalPoset interval_of_involution(const Element& u);
IntervalPoset interval_of_involution(const Element& u, LengthCache& lengths);

/// A pair without a meet, and the maximal elements of its common down-set.
struct MeetFailure {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::size_t> maximal_lower_bounds;
};

/// Meet existence for every pair of a finite poset given by down-sets, with
/// elements indexed along a linear extension. Returns the first failure.
std::optional<MeetFailure> find_missing_meet(const std::vector<Bitset>& below);

struct BruteForceVerdict {
  bool is_lattice = true;
  std::optional<MeetFailure> witness;
};

BruteForceVerdict is_lattice_bruteforce(const IntervalPoset& poset);

struct StructuralWitness {
  Element v;
  Element w;
  Parabolic closure_v;
  Parabolic closure_w;
  Parabolic intersection;
};

struct StructuralVerdict {
  bool is_lattice = true;
  std::size_t involutive_parabolics = 0;
  std::optional<StructuralWitness> witness;
};

/// Intersection-stability of the involutive parabolic subgroups of P(u).
StructuralVerdict is_lattice_structural(const Element& u);
/// Same, reusing the elements of an already built interval.
StructuralVerdict is_lattice_structural(const IntervalPoset& poset);

/// v ^ w in [1,u]_T as the central involution of P(v) cap P(w), checked
/// against the poset. Throws std::domain_error when the intersection is not
/// involutive (no meet).
Element meet(const IntervalPoset& poset, const Element& v, const Element& w);

/// Every parabolic subgroup of W contained in p: conjugates of the standard
/// parabolics of p's simple system under p. Sorted by root mask.
std::vector<Parabolic> enumerate_parabolics(const Parabolic& p);

struct IsomorphismReport {
  bool ok = true;
  std::size_t interval_size = 0;
  std::size_t involutive_parabolics = 0;
  std::string failure;
};

/// v -> P(v) is a bijection from [1,u]_T onto the involutive parabolic
/// subgroups of P(u), with v <=_T w iff P(v) is contained in P(w).
IsomorphismReport poset_isomorphism_check(const Element& u);

/// A T-reduced word for w, greedily choosing the lowest reflection index.
std::vector<RootIndex> t_word(const Element& w, LengthCache& lengths);

/// Reflections written as reduced S-words: "s1s2s1 * s3"; "1" for the identity.
std::string t_word_to_string(const RootSystem& system, const std::vector<RootIndex>& word);

/// JSON with keys type, top_word, elements[{id, rank, t_word}], hasse,
/// is_lattice, witness.
std::string interval_to_json(const IntervalPoset& poset, const std::string& type_name,
                             const std::string& top_word, LengthCache& lengths);

/// Hasse diagram in DOT; node n<i> for element i.
std::string interval_to_dot(const IntervalPoset& poset, LengthCache& lengths);

}  // namespace coxabs
