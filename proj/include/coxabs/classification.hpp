#pragma once

/**
 * @file classification.hpp
 * @brief Involutions split into irreducible commuting factors, the type-list
 * lattice criterion, and explicit non-lattice witnesses.
 */

#include <string>
#include <vector>

#include "coxabs/absolute_order.hpp"
#include "coxabs/dihedral.hpp"
#include "coxabs/parabolic.hpp"

namespace coxabs {

struct InvolutionFactor {
  Element u;
  Parabolic closure;
  TypeLabel type;
};

/// u = u_1 ... u_k with P(u) = P(u_1) x ... x P(u_k), one factor per
/// irreducible component, in the order of P(u).type().
struct InvolutionFactorization {
  std::vector<InvolutionFactor> factors;
};

/// Throws std::invalid_argument for the identity and for non-involutions.
InvolutionFactorization decompose_involution(const Element& u);

/// True iff every irreducible factor of P(u) is A1, I2(2k), B_n, D4 or H3.
/// The identity counts as a lattice. Throws std::invalid_argument for
/// non-involutions.
bool lattice_by_classification(const Element& u);

struct CounterexampleWitness {
  Parabolic p1;
  Parabolic p2;
  Parabolic intersection;
  /// 0-based simple reflection conjugating p1 into p2.
  int conjugator = -1;
  TypeLabel intersection_type;
};

/// Two involutive parabolics of W with non-involutive intersection, for
/// W of type D_2k (k >= 3), F4, H4, E7 or E8, built on roots only.
/// Throws std::invalid_argument for other types.
CounterexampleWitness counterexample_witness(const RootSystemPtr& system, const TypeLabel& label);
CounterexampleWitness counterexample_witness(const TypeLabel& label);

struct InvolutiveListReport {
  TypeLabel label;
  bool in_list = false;
  bool minus_identity = false;
  bool closure_is_whole = false;
  bool all_reflections_below = false;
  bool central = false;
  bool full_reflection_length = false;

  bool consistent() const {
    return minus_identity == in_list && closure_is_whole == in_list && all_reflections_below == in_list &&
           central == in_list && full_reflection_length == in_list;
  }
};

/// Compares membership in the involutive type list with the behaviour of
/// w0. Dihedral labels with m > 6 go through the symbolic model.
InvolutiveListReport verify_involutive_list(const TypeLabel& label);

struct DihedralReport {
  long m = 0;
  std::string word;
  int reflection_length = 0;
  std::size_t interval_size = 0;
  bool involution = false;
  bool lattice = true;
  dihedral::LatticeVerdicts verdicts;
};

/// l_T and lattice verdicts for an S-word in I2(m) (letters 0 and 1).
DihedralReport dihedral_fast_path(long m, const std::vector<int>& word);

}  // namespace coxabs
