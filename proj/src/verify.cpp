#include "coxabs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <type_traits>
#include <unordered_map>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "coxabs/classification.hpp"
#include "coxabs/oracles.hpp"

namespace coxabs {

namespace {

constexpr std::size_t kBruteForceCap = 100'000;
constexpr double kPositivesSeconds = 60;
constexpr double kD6BruteForceSeconds = 300;
constexpr double kExceptionalSeconds = 10;
constexpr double kSweepSeconds = 1800;
constexpr std::size_t kFieldIterations = 10'000;
constexpr unsigned long kFieldSeed = 20240607;
constexpr std::size_t kMaxReportedFailures = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string word_of(const Element& w) {
  const auto word = w.reduced_word();
  return word.empty() ? "1" : word_to_string(word);
}

std::string closure_text(const Parabolic& p) { return p.is_trivial() ? "trivial" : to_string(p.type()); }

std::vector<int> alternating_word(long m) {
  std::vector<int> word;
  for (long i = 0; i < m; ++i) word.push_back(static_cast<int>(i % 2));
  return word;
}

struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  /// what is a string or a callable producing one, evaluated on failure only.
  template <class What>
  void expect(bool ok, What&& what) {
    ++checks;
    if (ok) return;
    if constexpr (std::is_invocable_v<What>) {
      failures.push_back(what());
    } else {
      failures.push_back(std::string(what));
    }
  }
  std::string summary() const {
    std::ostringstream os;
    os << checks << " checks, " << failures.size() << " failures";
    for (std::size_t i = 0; i < failures.size() && i < kMaxReportedFailures; ++i) os << "; " << failures[i];
    return os.str();
  }
};

// Conjugacy classes among the given involutions, under conjugation by the
// simple reflections.
std::vector<std::vector<std::size_t>> involution_classes(const RootSystemPtr& sys,
                                                         const std::vector<Element>& invols) {
  std::unordered_map<Element, std::size_t, ElementHash> index;
  for (std::size_t i = 0; i < invols.size(); ++i) index.emplace(invols[i], i);
  std::vector<Element> simples;
  for (int s = 0; s < sys->rank(); ++s) simples.push_back(Element::simple(sys, s));
  std::vector<bool> assigned(invols.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < invols.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> members{i};
    assigned[i] = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (const Element& s : simples) {
        const std::size_t j = index.at(invols[members[k]].conjugate_by(s));
        if (!assigned[j]) {
          assigned[j] = true;
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

}  // namespace

SweepSummary sweep_involutions(const RootSystemPtr& system, const std::string& type_name,
                               std::size_t bruteforce_cap) {
  SweepSummary out;
  LengthCache lengths;
  const std::vector<Element> invols = enumerate_involutions(Parabolic::whole(system));
  out.involutions = invols.size();
  std::unordered_map<Element, std::size_t, ElementHash> factor_sizes;

  for (const auto& members : involution_classes(system, invols)) {
    InvolutionClassRow row;
    row.type = type_name;
    row.class_size = members.size();
    // Representative: shortest S-word, then permutation.
    std::vector<std::size_t> order = members;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return invols[a].coxeter_length() < invols[b].coxeter_length();
    });
    const std::size_t rep = order.front();
    for (std::size_t i : order) {
      const Element& u = invols[i];
      const IntervalPoset poset = interval_of_involution(u, lengths);
      const Parabolic closure = parabolic_closure(u);
      const bool cls = lattice_by_classification(u);
      const bool st = is_lattice_structural(poset).is_lattice;
      std::optional<bool> bf;
      if (closure.order() <= bruteforce_cap) {
        bf = is_lattice_bruteforce(poset).is_lattice;
        ++out.bruteforce_checked;
      }
      bool agree = cls == st && (!bf || *bf == cls);
      if (i == rep) {
        row.closure_type = closure_text(closure);
        row.reflection_length = lengths(u);
        row.interval_size = poset.size();
        row.classification = cls;
        row.structural = st;
        row.bruteforce = bf;
        row.representative = word_of(u);
      } else {
        agree = agree && cls == row.classification && st == row.structural;
      }
      if (!agree) {
        ++out.disagreements;
        row.agree = false;
        out.failures.push_back(type_name + " u=" + word_of(u) + ": lattice tests disagree");
      }
      if (closure.type().size() >= 2) {
        ++out.reducible;
        const InvolutionFactorization f = decompose_involution(u);
        std::size_t product = 1;
        int total = 0;
        for (const auto& factor : f.factors) {
          auto it = factor_sizes.find(factor.u);
          if (it == factor_sizes.end()) {
            it = factor_sizes.emplace(factor.u, interval_of_involution(factor.u, lengths).size()).first;
          }
          product *= it->second;
          total += lengths(factor.u);
        }
        if (product != poset.size() || total != lengths(u)) {
          ++out.product_failures;
          out.failures.push_back(type_name + " u=" + word_of(u) + ": interval is not the product of its factors");
        }
      }
    }
    out.rows.push_back(std::move(row));
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const InvolutionClassRow& a, const InvolutionClassRow& b) {
    return std::tie(a.reflection_length, a.closure_type, a.representative) <
           std::tie(b.reflection_length, b.closure_type, b.representative);
  });
  return out;
}

std::vector<std::string> sweep_types(bool deep) {
  std::vector<std::string> types = {"A4", "A5", "B4", "B5", "D5", "D6", "F4", "H3", "H4"};
  if (deep) types.push_back("E6");
  return types;
}

std::vector<std::string> small_group_types() {
  return {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "D4", "F4", "H3", "I2(5)", "I2(6)", "A1xA1", "A1xA2", "A1xB3"};
}

Verifier::Verifier(VerifyOptions options) : options_(options) {}

void Verifier::note(const std::string& line) const {
  if (options_.log) *options_.log << "  .. " << line << std::endl;
}

CriterionResult Verifier::run(int id) {
  const auto start = Clock::now();
  CriterionResult result;
  try {
    switch (id) {
      case 1: result = classification_positives(); break;
      case 2: result = classification_negatives(); break;
      case 3: result = exceptional_witnesses(); break;
      case 4: result = classification_sweep(); break;
      case 5: result = reflection_length_oracle(); break;
      case 6: result = proposition_suite(); break;
      case 7: result = interval_identity(); break;
      case 8: result = hurwitz_orbits_b2(); break;
      case 9: result = product_decomposition(); break;
      case 10: result = field_kernel(); break;
      default: throw std::out_of_range("criterion id must be 1.." + std::to_string(kCriteria));
    }
  } catch (const std::out_of_range&) {
    throw;
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.id = id;
  if (result.seconds == 0) result.seconds = seconds_since(start);
  return result;
}

std::vector<CriterionResult> Verifier::run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run(id));
  return out;
}

CriterionResult Verifier::classification_positives() {
  const auto start = Clock::now();
  CriterionResult r;
  r.title = "lattice types: three tests agree on TRUE";
  Tally tally;
  std::map<std::string, std::size_t> sizes;
  for (const std::string name : {"A1", "I2(4)", "I2(6)", "B3", "B4", "B5", "D4", "H3"}) {
    note("positives " + name);
    const RootSystemPtr sys = RootSystem::build(name);
    const Element u = longest_element(sys);
    tally.expect(u.is_involution(), name + ": w0 is an involution");
    const IntervalPoset poset = interval_of_involution(u);
    sizes[name] = poset.size();
    tally.expect(is_lattice_bruteforce(poset).is_lattice, name + ": brute force");
    tally.expect(is_lattice_structural(poset).is_lattice, name + ": structural");
    tally.expect(lattice_by_classification(u), name + ": classification");
  }
  for (long m : {8L, 10L}) {
    const std::string name = "I2(" + std::to_string(m) + ")";
    note("positives " + name + " (symbolic)");
    const DihedralReport d = dihedral_fast_path(m, alternating_word(m));
    tally.expect(d.involution && d.reflection_length == 2, name + ": w0 is an involution of length 2");
    tally.expect(d.interval_size == static_cast<std::size_t>(m + 2), name + ": interval has m+2 elements");
    tally.expect(d.verdicts.bruteforce, name + ": brute force");
    tally.expect(d.verdicts.structural, name + ": structural");
    tally.expect(d.verdicts.classification, name + ": classification");
    sizes[name] = d.interval_size;
  }
  // The symbolic model against the root systems it overlaps with.
  for (long m : {4L, 6L}) {
    const std::string name = "I2(" + std::to_string(m) + ")";
    const DihedralReport d = dihedral_fast_path(m, alternating_word(m));
    tally.expect(d.interval_size == sizes[name] && d.lattice, name + ": symbolic model matches the root system");
  }
  r.seconds = seconds_since(start);
  tally.expect(r.seconds < kPositivesSeconds, "runtime under 60 s");
  r.pass = tally.failures.empty();
  std::ostringstream os;
  for (const auto& [name, n] : sizes) os << name << ":" << n << " ";
  r.detail = "interval sizes " + os.str() + "| " + tally.summary();
  return r;
}

CriterionResult Verifier::classification_negatives() {
  CriterionResult r;
  r.title = "non-lattice types: all tests FALSE, witness types D6->A3, F4->A2, H4->I2(5)";
  Tally tally;
  std::ostringstream os;
  const std::map<std::string, std::string> expected = {{"D6", "A3"}, {"F4", "A2"}, {"H4", "I2(5)"}};
  for (const auto& [name, want] : expected) {
    note("negatives " + name);
    const RootSystemPtr sys = RootSystem::build(name);
    const Element u = longest_element(sys);
    const auto start = Clock::now();
    const IntervalPoset poset = interval_of_involution(u);
    const BruteForceVerdict bf = is_lattice_bruteforce(poset);
    const double bf_seconds = seconds_since(start);
    const StructuralVerdict st = is_lattice_structural(poset);
    tally.expect(!bf.is_lattice && bf.witness.has_value(), name + ": brute force reports a missing meet");
    tally.expect(!st.is_lattice && st.witness.has_value(), name + ": structural reports a witness");
    if (st.witness) tally.expect(!is_involutive(st.witness->intersection), name + ": structural witness intersection");
    tally.expect(!lattice_by_classification(u), name + ": classification");
    if (name == "D6") tally.expect(bf_seconds < kD6BruteForceSeconds, "D6 brute force under 300 s");

    const CounterexampleWitness w = counterexample_witness(sys, TypeLabel::parse(name));
    tally.expect(is_involutive(w.p1) && is_involutive(w.p2), name + ": P1 and P2 involutive");
    tally.expect(!is_involutive(w.intersection), name + ": P1 cap P2 not involutive");
    tally.expect(w.intersection_type.to_string() == want,
                 name + ": intersection type " + w.intersection_type.to_string() + ", expected " + want);
    if (name == "D6") {
      tally.expect(w.intersection == Parabolic::standard(sys, {0, 1, 2}), "D6: P1 cap P2 = <s1,s2,s3>");
    }
    os << name << " -> " << w.intersection_type.to_string() << " (|I|=" << poset.size() << ") ";
  }
  r.pass = tally.failures.empty();
  r.detail = os.str() + "| " + tally.summary();
  return r;
}

CriterionResult Verifier::exceptional_witnesses() {
  const auto start = Clock::now();
  CriterionResult r;
  r.title = "E7/E8 root-level witnesses intersect in A3";
  Tally tally;
  std::ostringstream os;
  for (const auto& [name, roots] : {std::pair<std::string, std::size_t>{"E7", 63}, {"E8", 120}}) {
    note("witness " + name);
    const RootSystemPtr sys = RootSystem::build(name);
    tally.expect(sys->num_positive() == roots, name + ": positive root count");
    const CounterexampleWitness w = counterexample_witness(sys, TypeLabel::parse(name));
    const TypeLabel d4 = TypeLabel::make(Family::D, 4);
    tally.expect(w.p1.type() == std::vector<TypeLabel>{d4} && w.p2.type() == std::vector<TypeLabel>{d4},
                 name + ": P1 and P2 of type D4");
    tally.expect(w.p1 != w.p2, name + ": P2 differs from P1");
    tally.expect(is_involutive(w.p1) && is_involutive(w.p2), name + ": P1 and P2 involutive");
    tally.expect(w.intersection_type.to_string() == "A3", name + ": intersection type A3");
    tally.expect(!is_involutive(w.intersection), name + ": intersection not involutive");
    std::vector<int> nodes;
    for (int s = 0; s < sys->rank(); ++s) {
      if (w.p1.contains_root(sys->simple_root(s))) nodes.push_back(s);
    }
    os << name << ": D4 = <" << word_to_string(nodes) << "> conjugated by s" << w.conjugator + 1 << " -> " << w.intersection_type.to_string() << "; ";
  }
  r.seconds = seconds_since(start);
  tally.expect(r.seconds < kExceptionalSeconds, "runtime under 10 s");
  r.pass = tally.failures.empty();
  r.detail = os.str() + "| " + tally.summary();
  return r;
}

const std::map<std::string, SweepSummary>& Verifier::sweeps() {
  if (!sweeps_) {
    sweeps_.emplace();
    for (const std::string& name : sweep_types(options_.deep)) {
      note("sweep " + name);
      (*sweeps_)[name] = sweep_involutions(RootSystem::build(name), name, kBruteForceCap);
    }
  }
  return *sweeps_;
}

CriterionResult Verifier::classification_sweep() {
  const auto start = Clock::now();
  CriterionResult r;
  r.title = "every involution: classification = structural = brute force";
  std::size_t invols = 0, disagreements = 0, brute = 0;
  std::vector<std::string> failures;
  std::ostringstream os;
  for (const auto& [name, s] : sweeps()) {
    invols += s.involutions;
    disagreements += s.disagreements;
    brute += s.bruteforce_checked;
    for (const auto& f : s.failures) {
      if (f.find("disagree") != std::string::npos) failures.push_back(f);
    }
    os << name << ":" << s.involutions << " ";
  }
  r.seconds = seconds_since(start);
  r.pass = disagreements == 0 && invols > 0 && r.seconds <= kSweepSeconds;
  os << "| " << invols << " involutions, " << brute << " brute-force checked, " << disagreements << " disagreements";
  if (!options_.deep) os << " (E6 skipped without --deep)";
  for (std::size_t i = 0; i < failures.size() && i < kMaxReportedFailures; ++i) os << "; " << failures[i];
  r.detail = os.str();
  return r;
}

CriterionResult Verifier::reflection_length_oracle() {
  CriterionResult r;
  r.title = "Carter reflection length = Dyer deletion count";
  Tally tally;
  std::ostringstream os;
  auto run_type = [&](const std::string& name, int max_length) {
    note("Dyer " + name);
    const RootSystemPtr sys = RootSystem::build(name);
    std::size_t n = 0;
    for (const Element& w : enumerate_group(sys)) {
      const auto word = w.reduced_word();
      if (max_length >= 0 && static_cast<int>(word.size()) > max_length) continue;
      ++n;
      const int dyer = oracle::dyer_reflection_length(sys, word);
      tally.expect(dyer == w.reflection_length(), name + " " + word_of(w) + ": Dyer " + std::to_string(dyer) +
                                                      " vs Carter " + std::to_string(w.reflection_length()));
    }
    os << name << ":" << n << " ";
  };
  for (const std::string name : {"A3", "B3", "H3"}) run_type(name, -1);
  for (const std::string name : {"A4", "B4", "D4", "F4"}) run_type(name, 10);
  r.pass = tally.failures.empty();
  r.detail = "elements " + os.str() + "| " + tally.summary();
  return r;
}

namespace {

void check_propositions(const std::string& name, Tally& tally) {
  const RootSystemPtr sys = RootSystem::build(name);
  const int n = sys->rank();
  const std::vector<Element> group = enumerate_group(sys);
  LengthCache lengths;
  const oracle::CayleyLengths cayley(sys);
  const Element w0 = longest_element(sys);
  std::vector<Element> refl;
  for (RootIndex t = 0; t < sys->num_positive(); ++t) refl.push_back(Element::reflection(sys, t));
  std::vector<Element> invols;
  for (const Element& w : group) {
    if (w.is_involution()) invols.push_back(w);
  }
  auto at = [&](std::string what, const Element& w) {
    return [&name, what = std::move(what), &w] { return name + " " + what + " at " + word_of(w); };
  };

  // Rank of the closure, reflections below w, involutions as closure tops.
  for (const Element& w : group) {
    const Parabolic p = parabolic_closure(w);
    tally.expect(p.rank() == lengths(w), at("rank P(w) = l_T(w)", w));
    bool reflections_ok = true;
    for (RootIndex t = 0; t < refl.size(); ++t) {
      reflections_ok &= leq_T(refl[t], w, lengths) == p.contains_root(t);
    }
    tally.expect(reflections_ok, at("t <=_T w iff t in P(w)", w));
    tally.expect(w.is_involution() == (w == longest_element(p)), at("w^2 = 1 iff w = w0(P(w))", w));
  }

  for (const Element& t : refl) {
    tally.expect(leq_T(t, w0, lengths) == t.commutes_with(w0), at("t <=_T w0 iff t w0 = w0 t", t));
  }

  for (const Element& u : invols) {
    const auto inversions = u.inversion_set();
    bool ok = true;
    for (RootIndex t = 0; t < refl.size(); ++t) {
      const bool inverted = std::binary_search(inversions.begin(), inversions.end(), t);
      ok &= leq_T(refl[t], u, lengths) == (refl[t].commutes_with(u) && inverted);
    }
    tally.expect(ok, at("t <=_T u iff tu = ut and t in N(u)", u));
  }

  // Below an involution: the three equivalent descriptions.
  std::unordered_map<Element, Subspace, ElementHash> fixed;
  for (const Element& v : invols) fixed.emplace(v, v.fixed_space());
  std::vector<int> group_lengths;
  for (const Element& v : group) group_lengths.push_back(lengths(v));
  for (const Element& u : invols) {
    const Parabolic pu = parabolic_closure(u);
    const Subspace& vu = fixed.at(u);
    const int lu = lengths(u);
    bool bis = true, three = true;
    for (std::size_t j = 0; j < group.size(); ++j) {
      const Element& v = group[j];
      const bool below = group_lengths[j] <= lu && leq_T(v, u, lengths);
      const bool involution = v.is_involution();
      if (below) bis &= involution && v * u == u * v;
      const bool in_closure = involution && pu.contains(v);
      const bool fixes = involution && vu.is_subspace_of(fixed.at(v));
      three &= below == in_closure && in_closure == fixes;
    }
    tally.expect(bis, at("v <=_T u implies v^2 = 1 and uv = vu", u));
    tally.expect(three, at("three-way equivalence below u", u));
  }

  std::unordered_map<Element, Subspace, ElementHash> moved;
  auto moved_of = [&](const Element& x) -> const Subspace& {
    auto it = moved.find(x);
    if (it == moved.end()) it = moved.emplace(x, x.moved_space()).first;
    return it->second;
  };
  for (const Element& u : invols) {
    const IsomorphismReport iso = poset_isomorphism_check(u);
    tally.expect(iso.ok, at("v -> P(v) poset isomorphism (" + iso.failure + ")", u));
    const IntervalPoset poset = interval_of_involution(u, lengths);
    bool additive = true;
    for (const Element& v : poset.elements) {
      const Subspace& a = moved_of(v);
      const Subspace& b = moved_of(v.inverse() * u);
      const Subspace& c = fixed.at(u);
      additive &= a.dim() + b.dim() + c.dim() == n && a.sum(b).sum(c).dim() == n;
    }
    tally.expect(additive, at("Mov(v) + Mov(v^-1 u) + V^u is direct and spans V", u));
    if (lengths(u) <= oracle::kExpressionLengthCap) {
      const auto expressions = oracle::t_reduced_expressions(u, cayley);
      bool commuting = !expressions.empty();
      for (const auto& tuple : expressions) {
        commuting &= static_cast<int>(tuple.size()) == lengths(u) && validate_T_reduced(*sys, tuple);
        for (std::size_t a = 0; a < tuple.size(); ++a) {
          for (std::size_t b = a + 1; b < tuple.size(); ++b) commuting &= refl[tuple[a]].commutes_with(refl[tuple[b]]);
        }
      }
      tally.expect(commuting, at("T-reduced expressions of u are pairwise commuting", u));
    }
  }
}

}  // namespace

CriterionResult Verifier::proposition_suite() {
  CriterionResult r;
  r.title = "involution propositions, exhaustive on |W| <= 1152 and H4";
  Tally tally;
  std::vector<std::string> types = small_group_types();
  types.push_back("H4");
  for (const std::string& name : types) {
    note("propositions " + name);
    check_propositions(name, tally);
  }
  r.pass = tally.failures.empty();
  r.detail = std::to_string(types.size()) + " groups | " + tally.summary();
  return r;
}

CriterionResult Verifier::interval_identity() {
  CriterionResult r;
  r.title = "interval_of_involution = Cayley BFS interval";
  Tally tally;
  std::size_t count = 0;
  auto compare = [&](const Element& u, const oracle::CayleyLengths& cayley, LengthCache& lengths,
                     const std::string& name) {
    const IntervalPoset a = interval_of_involution(u, lengths);
    const IntervalPoset b = oracle::cayley_interval(u, cayley);
    ++count;
    tally.expect(a.elements == b.elements && a.ranks == b.ranks, name + " " + word_of(u) + ": element sets");
    tally.expect(a.below == b.below, name + " " + word_of(u) + ": order relation");
    tally.expect(a.hasse == b.hasse, name + " " + word_of(u) + ": Hasse edges");
  };
  for (const std::string& name : small_group_types()) {
    note("intervals " + name);
    const RootSystemPtr sys = RootSystem::build(name);
    const oracle::CayleyLengths cayley(sys);
    LengthCache lengths;
    for (const Element& u : enumerate_involutions(Parabolic::whole(sys))) compare(u, cayley, lengths, name);
  }
  std::string extra;
  if (options_.deep) {
    note("intervals H4 w0");
    const RootSystemPtr sys = RootSystem::build("H4");
    const oracle::CayleyLengths cayley(sys);
    LengthCache lengths;
    compare(longest_element(sys), cayley, lengths, "H4");
    extra = " incl. w0 of H4";
  } else {
    extra = " (H4 skipped without --deep)";
  }
  r.pass = tally.failures.empty();
  r.detail = std::to_string(count) + " intervals" + extra + " | " + tally.summary();
  return r;
}

CriterionResult Verifier::hurwitz_orbits_b2() {
  CriterionResult r;
  r.title = "B2 w0: 4 T-reduced expressions in 2 Hurwitz orbits";
  Tally tally;
  const RootSystemPtr sys = RootSystem::build("B2");
  const RootIndex s = sys->simple_root(0), t = sys->simple_root(1);
  const RootIndex sts = sys->positive_of(sys->reflect(s, t));
  const RootIndex tst = sys->positive_of(sys->reflect(t, s));
  const auto expressions = oracle::t_reduced_expressions(longest_element(sys));
  const std::set<oracle::ReflectionTuple> expected = {{s, tst}, {tst, s}, {t, sts}, {sts, t}};
  tally.expect(expressions == expected, "expressions are (s,tst),(tst,s),(t,sts),(sts,t)");
  const auto orbits = oracle::hurwitz_orbits(*sys, expressions);
  tally.expect(orbits.size() == 2, "two orbits, got " + std::to_string(orbits.size()));
  for (const auto& orbit : orbits) {
    const auto& first = *orbit.begin();
    const std::set<oracle::ReflectionTuple> orderings = {{first[0], first[1]}, {first[1], first[0]}};
    tally.expect(first[0] != first[1] && sys->orthogonal(first[0], first[1]) && orbit == orderings,
                 "orbit is the orderings of one commuting pair");
  }
  r.pass = tally.failures.empty();
  r.detail = std::to_string(expressions.size()) + " expressions, " + std::to_string(orbits.size()) + " orbits | " +
             tally.summary();
  return r;
}

CriterionResult Verifier::product_decomposition() {
  CriterionResult r;
  r.title = "reducible closures: interval is the product of factor intervals";
  std::size_t reducible = 0, failures = 0;
  std::vector<std::string> messages;
  for (const auto& [name, s] : sweeps()) {
    reducible += s.reducible;
    failures += s.product_failures;
    for (const auto& f : s.failures) {
      if (f.find("product") != std::string::npos) messages.push_back(f);
    }
  }
  r.pass = reducible > 0 && failures == 0;
  std::ostringstream os;
  os << reducible << " reducible involutions, " << failures << " failures";
  for (std::size_t i = 0; i < messages.size() && i < kMaxReportedFailures; ++i) os << "; " << messages[i];
  r.detail = os.str();
  return r;
}

CriterionResult Verifier::field_kernel() {
  CriterionResult r;
  r.title = "field axioms and signs, 10000 random cases";
  std::vector<std::string> failures;
  const std::size_t bad = field_kernel_checks(kFieldIterations, kFieldSeed, failures);
  r.pass = bad == 0;
  std::ostringstream os;
  os << kFieldIterations << " iterations (seed " << kFieldSeed << "), " << bad << " failures";
  for (std::size_t i = 0; i < failures.size() && i < kMaxReportedFailures; ++i) os << "; " << failures[i];
  r.detail = os.str();
  return r;
}

namespace {

using Big = boost::multiprecision::cpp_bin_float_100;
using BigInt = boost::multiprecision::cpp_int;

Big to_big(const Rational& q) { return Big(q.get_num().get_str()) / Big(q.get_den().get_str()); }

Big evaluate(const FieldScalar& x) {
  Big sum = 0;
  for (int i = 0; i < FieldScalar::kDegree; ++i) {
    if (x.coord(i) != 0) sum += to_big(x.coord(i)) * boost::multiprecision::sqrt(Big(FieldScalar::kRadicands[i]));
  }
  return sum;
}

int big_sign(const Big& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

std::size_t field_kernel_checks(std::size_t iterations, unsigned long seed, std::vector<std::string>& failures) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 12), coin(0, 1), digits(5, 40);
  auto random_element = [&] {
    std::array<Rational, FieldScalar::kDegree> c;
    for (auto& q : c) {
      if (coin(rng)) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
      }
    }
    return FieldScalar::from_coords(c);
  };
  const Big tiny("1e-90");
  std::size_t bad = 0;
  auto expect = [&](bool ok, std::size_t i, const char* what, const FieldScalar& a) {
    if (ok) return;
    ++bad;
    if (failures.size() < kMaxReportedFailures) {
      failures.push_back("iteration " + std::to_string(i) + ": " + what + " at " + a.to_string());
    }
  };

  for (std::size_t i = 0; i < iterations; ++i) {
    const FieldScalar a = random_element(), b = random_element(), c = random_element();
    expect((a + b) + c == a + (b + c), i, "additive associativity", a);
    expect(a + b == b + a, i, "additive commutativity", a);
    expect((a * b) * c == a * (b * c), i, "multiplicative associativity", a);
    expect(a * b == b * a, i, "multiplicative commutativity", a);
    expect(a * (b + c) == a * b + a * c, i, "distributivity", a);
    expect((a - a).is_zero() && (a + (-a)).is_zero(), i, "additive inverse", a);
    expect(a * FieldScalar(1) == a && a + FieldScalar(0) == a, i, "identities", a);
    if (!a.is_zero()) {
      expect((a * a.inverse()).is_one(), i, "multiplicative inverse", a);
      expect((b / a) * a == b, i, "division", a);
    }

    const Big va = evaluate(a), vb = evaluate(b);
    expect(a.sign() == 0 ? a.is_zero() : abs(va) > tiny && a.sign() == big_sign(va), i, "sign vs high precision", a);
    expect((a * b).sign() == a.sign() * b.sign(), i, "sign multiplicativity", a);
    expect((a * a).sign() >= 0, i, "squares are nonnegative", a);
    expect(compare(a, b) == -compare(b, a), i, "antisymmetric comparison", a);
    if (abs(va - vb) > tiny) expect(compare(a, b) == big_sign(va - vb), i, "comparison vs high precision", a);

    // A mixed-radical element next to a close decimal truncation.
    FieldScalar x = random_element();
    x += FieldScalar::basis(4) * FieldScalar(den(rng));
    if (x.coord(4) == 0) x += FieldScalar::basis(4);
    const long k = digits(rng);
    const BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(k));
    const BigInt floor_scaled = static_cast<BigInt>(boost::multiprecision::floor(evaluate(x) * Big(scale)));
    const FieldScalar truncation(Rational(mpz_class(floor_scaled.str()), mpz_class(scale.str())));
    const FieldScalar gap = x - truncation;
    expect(gap.sign() == 1 && (-gap).sign() == -1, i, "sign of a near-zero gap", gap);
    expect((gap * a).sign() == a.sign(), i, "sign of a product with a near-zero gap", gap);
  }

  // Square roots and small quadratic relations.
  for (int idx = 1; idx < FieldScalar::kDegree; ++idx) {
    const FieldScalar r = FieldScalar::basis(idx);
    expect(r * r == FieldScalar(FieldScalar::kRadicands[idx]), static_cast<std::size_t>(idx), "square of a root", r);
  }
  // Pell convergents p - q sqrt2 alternate in sign.
  mpz_class p = 1, q = 1;
  for (int k = 0; k < 60; ++k) {
    const FieldScalar e = FieldScalar(Rational(p)) - FieldScalar(Rational(q)) * FieldScalar::sqrt_of(2);
    expect(e.sign() == (k % 2 == 0 ? -1 : 1), static_cast<std::size_t>(k), "Pell convergent sign", e);
    const mpz_class np = p + 2 * q, nq = p + q;
    p = np;
    q = nq;
  }
  return bad;
}

std::string format_result(const CriterionResult& result) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", result.seconds);
  return std::string(result.pass ? "PASS" : "FAIL") + "  [" + std::to_string(result.id) + "] " + result.title + ": " +
         result.detail + " (" + time + ")";
}

}  // namespace coxabs
