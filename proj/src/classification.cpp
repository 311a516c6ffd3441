#include "coxabs/classification.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>

namespace coxabs {

InvolutionFactorization decompose_involution(const Element& u) {
  if (!u.is_involution()) throw std::invalid_argument("decompose_involution: element is not an involution");
  if (u.is_identity()) throw std::invalid_argument("decompose_involution: identity has no factors");
  const Parabolic closure = parabolic_closure(u);
  const RootSystemPtr& sys = u.system_ptr();
  InvolutionFactorization out;
  Element product = Element::identity(sys);
  for (std::size_t c = 0; c < closure.components().size(); ++c) {
    FieldMatrix vectors;
    for (RootIndex r : closure.components()[c]) vectors.push_back(sys->root(r));
    Parabolic factor = Parabolic::from_subspace(sys, Subspace::span(sys->rank(), std::move(vectors)));
    Element ui = central_involution(factor);
    product = product * ui;
    out.factors.push_back({std::move(ui), std::move(factor), closure.type()[c]});
  }
  if (product != u) throw std::logic_error("decompose_involution: factors do not multiply back to u");
  return out;
}

bool lattice_by_classification(const Element& u) {
  if (!u.is_involution()) throw std::invalid_argument("lattice_by_classification: element is not an involution");
  if (u.is_identity()) return true;
  const InvolutionFactorization f = decompose_involution(u);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const InvolutionFactor& x) { return is_lattice_type(x.type); });
}

namespace {

bool has_witness_construction(const TypeLabel& label) {
  switch (label.family) {
    case Family::D:
      return label.rank >= 6 && label.rank % 2 == 0;
    case Family::F:
      return true;
    case Family::H:
      return label.rank == 4;
    case Family::E:
      return label.rank == 7 || label.rank == 8;
    default:
      return false;
  }
}

// First four simple nodes spanning a D4 diagram with an outside node joined
// to exactly one of them.
std::pair<std::vector<int>, int> find_d4_with_neighbour(const CoxeterMatrix& m) {
  const int n = m.rank();
  const TypeLabel d4 = TypeLabel::make(Family::D, 4);
  for (unsigned subset = 0; subset < (1u << n); ++subset) {
    if (std::popcount(subset) != 4) continue;
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i) {
      if (subset >> i & 1u) nodes.push_back(i);
    }
    const CoxeterMatrix sub = restrict_matrix(m, nodes);
    if (diagram_components(sub).size() != 1 || recognize_irreducible(sub) != d4) continue;
    for (int s = 0; s < n; ++s) {
      if (subset >> s & 1u) continue;
      const auto joined = std::count_if(nodes.begin(), nodes.end(), [&](int v) { return m(s, v) >= 3; });
      if (joined == 1) return {nodes, s};
    }
  }
  throw std::logic_error("no D4 subdiagram with a single outside neighbour");
}

}  // namespace

CounterexampleWitness counterexample_witness(const RootSystemPtr& system, const TypeLabel& label) {
  if (!has_witness_construction(label)) {
    throw std::invalid_argument("no counterexample construction for type " + label.to_string());
  }
  if (system->matrix() != CoxeterMatrix::named(label)) {
    throw std::invalid_argument("root system does not have type " + label.to_string());
  }
  std::vector<int> generators;
  int s = -1;
  switch (label.family) {
    case Family::D:
      generators = {0, 1, 2, 3};
      s = 4;
      break;
    case Family::F:
    case Family::H:
      generators = {0, 1, 2};
      s = 3;
      break;
    default:
      std::tie(generators, s) = find_d4_with_neighbour(system->matrix());
      break;
  }
  CounterexampleWitness w;
  w.p1 = Parabolic::standard(system, generators);
  w.p2 = w.p1.conjugate(Element::simple(system, s));
  w.intersection = intersect(w.p1, w.p2);
  w.conjugator = s;
  if (!w.intersection.is_irreducible()) throw std::logic_error("witness intersection is not irreducible");
  w.intersection_type = w.intersection.type().front();
  return w;
}

CounterexampleWitness counterexample_witness(const TypeLabel& label) {
  if (!has_witness_construction(label)) {
    throw std::invalid_argument("no counterexample construction for type " + label.to_string());
  }
  return counterexample_witness(RootSystem::build(CoxeterMatrix::named(label)), label);
}

InvolutiveListReport verify_involutive_list(const TypeLabel& label) {
  InvolutiveListReport r;
  r.label = label;
  r.in_list = is_involutive_type(label);
  if (label.family == Family::I2 && label.bond > 6) {
    const dihedral::Group g(label.bond);
    const dihedral::Element w0 = g.longest_element();
    const bool rotation_by_pi = !w0.reflection && 2 * w0.k == g.m();
    r.minus_identity = rotation_by_pi;
    // P(w0) is the whole group iff w0 is a nontrivial rotation.
    r.closure_is_whole = !w0.reflection && w0.k != 0;
    r.all_reflections_below = true;
    for (long k = 0; k < g.m(); ++k) r.all_reflections_below &= g.leq_T({k, true}, w0);
    r.central = g.is_central(w0);
    r.full_reflection_length = g.reflection_length(w0) == 2;
    return r;
  }
  const RootSystemPtr sys = RootSystem::build(CoxeterMatrix::named(label));
  const Element w0 = longest_element(sys);
  r.minus_identity = true;
  for (RootIndex b = 0; b < sys->num_roots(); ++b) r.minus_identity &= w0(b) == sys->negate(b);
  r.closure_is_whole = parabolic_closure(w0).positive_roots().size() == sys->num_positive();
  r.all_reflections_below = true;
  for (RootIndex t = 0; t < sys->num_positive(); ++t) {
    r.all_reflections_below &= leq_T(Element::reflection(sys, t), w0);
  }
  r.central = true;
  for (int s = 0; s < sys->rank(); ++s) r.central &= w0.commutes_with(Element::simple(sys, s));
  r.full_reflection_length = w0.reflection_length() == sys->rank();
  return r;
}

DihedralReport dihedral_fast_path(long m, const std::vector<int>& word) {
  const dihedral::Group g(m);
  const dihedral::Element w = g.from_word(word);
  DihedralReport r;
  r.m = m;
  r.word = g.word(w);
  r.verdicts = dihedral::lattice_verdicts(g, w);
  r.reflection_length = r.verdicts.reflection_length;
  r.interval_size = r.verdicts.interval_size;
  r.involution = g.is_involution(w);
  r.lattice = r.verdicts.bruteforce && r.verdicts.structural && r.verdicts.classification;
  return r;
}

}  // namespace coxabs
