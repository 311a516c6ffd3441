#include "coxabs/absolute_order.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace coxabs {

int LengthCache::operator()(const Element& w) {
  auto it = lengths_.find(w);
  if (it != lengths_.end()) return it->second;
  const int l = w.reflection_length();
  lengths_.emplace(w, l);
  return l;
}

bool leq_T(const Element& u, const Element& v) {
  return u.reflection_length() + (u.inverse() * v).reflection_length() == v.reflection_length();
}

bool leq_T(const Element& u, const Element& v, LengthCache& lengths) {
  return lengths(u) + lengths(u.inverse() * v) == lengths(v);
}

long IntervalPoset::index_of(const Element& w) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == w) return static_cast<long>(i);
  }
  return -1;
}

void canonical_order(std::vector<Element>& elements, LengthCache& lengths) {
  std::vector<std::pair<int, Element>> keyed;
  keyed.reserve(elements.size());
  for (auto& e : elements) keyed.emplace_back(lengths(e), std::move(e));
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) elements[i] = std::move(keyed[i].second);
}

IntervalPoset interval_of_involution(const Element& u) {
  LengthCache lengths;
  return interval_of_involution(u, lengths);
}

IntervalPoset interval_of_involution(const Element& u, LengthCache& lengths) {
  if (!u.is_involution()) throw std::invalid_argument("interval_of_involution: element is not an involution");
  IntervalPoset poset;
  poset.top = u;
  poset.elements = enumerate_involutions(parabolic_closure(u));
  canonical_order(poset.elements, lengths);
  const std::size_t n = poset.elements.size();
  poset.ranks.resize(n);
  for (std::size_t i = 0; i < n; ++i) poset.ranks[i] = lengths(poset.elements[i]);
  if (poset.elements.back() != u) throw std::logic_error("interval top is not u");

  poset.below.assign(n, Bitset(n));
  for (std::size_t j = 0; j < n; ++j) {
    poset.below[j].set(j);
    for (std::size_t i = 0; i < j; ++i) {
      if (poset.ranks[i] >= poset.ranks[j]) continue;
      // Interval elements are involutions, so e_i^-1 = e_i.
      const int gap = lengths(poset.elements[i] * poset.elements[j]);
      if (poset.ranks[i] + gap == poset.ranks[j]) {
        poset.below[j].set(i);
        if (poset.ranks[j] == poset.ranks[i] + 1) poset.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  std::sort(poset.hasse.begin(), poset.hasse.end());
  return poset;
}

std::optional<MeetFailure> find_missing_meet(const std::vector<Bitset>& below) {
  const std::size_t n = below.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (below[b].test(a) || below[a].test(b)) continue;
      const Bitset common = below[a] & below[b];
      // Along a linear extension a greatest element has the largest index.
      const std::size_t top = common.find_last();
      if (top != Bitset::npos && common.is_subset_of(below[top])) continue;
      MeetFailure failure{a, b, {}};
      const auto members = common.indices();
      for (std::size_t z : members) {
        bool maximal = true;
        for (std::size_t y : members) {
          if (y != z && below[y].test(z)) {
            maximal = false;
            break;
          }
        }
        if (maximal) failure.maximal_lower_bounds.push_back(z);
      }
      return failure;
    }
  }
  return std::nullopt;
}

BruteForceVerdict is_lattice_bruteforce(const IntervalPoset& poset) {
  BruteForceVerdict verdict;
  verdict.witness = find_missing_meet(poset.below);
  verdict.is_lattice = !verdict.witness.has_value();
  return verdict;
}

StructuralVerdict is_lattice_structural(const Element& u) {
  if (!u.is_involution()) throw std::invalid_argument("is_lattice_structural: element is not an involution");
  IntervalPoset poset;
  poset.top = u;
  poset.elements = enumerate_involutions(parabolic_closure(u));
  return is_lattice_structural(poset);
}

StructuralVerdict is_lattice_structural(const IntervalPoset& poset) {
  StructuralVerdict verdict;
  const std::size_t n = poset.elements.size();
  std::vector<Parabolic> closures;
  closures.reserve(n);
  std::set<RootMask> distinct;
  for (const auto& v : poset.elements) {
    closures.push_back(parabolic_closure(v));
    distinct.insert(closures.back().mask());
  }
  verdict.involutive_parabolics = distinct.size();

  std::map<RootMask, bool> involutive;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RootMask m = closures[i].mask() & closures[j].mask();
      auto it = involutive.find(m);
      if (it == involutive.end()) {
        const bool ok = is_involutive(Parabolic::from_closed_mask(poset.top.system_ptr(), m));
        it = involutive.emplace(std::move(m), ok).first;
      }
      if (!it->second) {
        verdict.is_lattice = false;
        verdict.witness = StructuralWitness{poset.elements[i], poset.elements[j], closures[i], closures[j],
                                            intersect(closures[i], closures[j])};
        return verdict;
      }
    }
  }
  return verdict;
}

Element meet(const IntervalPoset& poset, const Element& v, const Element& w) {
  const long iv = poset.index_of(v);
  const long iw = poset.index_of(w);
  if (iv < 0 || iw < 0) throw std::invalid_argument("meet: element not in the interval");
  const Parabolic common = intersect(parabolic_closure(v), parabolic_closure(w));
  if (!is_involutive(common)) {
    throw std::domain_error("no meet: P(v) cap P(w) has non-involutive type " + to_string(common.type()));
  }
  Element z = central_involution(common);
  const long iz = poset.index_of(z);
  const Bitset lower = poset.below[static_cast<std::size_t>(iv)] & poset.below[static_cast<std::size_t>(iw)];
  if (iz < 0 || !lower.test(static_cast<std::size_t>(iz)) ||
      !lower.is_subset_of(poset.below[static_cast<std::size_t>(iz)])) {
    throw std::logic_error("meet: central involution of the intersection is not the greatest lower bound");
  }
  return z;
}

std::vector<Parabolic> enumerate_parabolics(const Parabolic& p) {
  const RootSystemPtr& sys = p.system_ptr();
  const auto& simple = p.simple_system();
  const std::size_t k = simple.size();
  std::vector<Element> conjugators;
  for (RootIndex r : simple) conjugators.push_back(Element::reflection(sys, r));

  std::map<RootMask, Parabolic> found;
  std::vector<Parabolic> queue;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << k); ++subset) {
    FieldMatrix vectors;
    for (std::size_t i = 0; i < k; ++i) {
      if (subset >> i & 1u) vectors.push_back(sys->root(simple[i]));
    }
    Parabolic q = Parabolic::from_subspace(sys, Subspace::span(sys->rank(), std::move(vectors)));
    if (found.emplace(q.mask(), q).second) queue.push_back(std::move(q));
  }
  while (!queue.empty()) {
    Parabolic q = std::move(queue.back());
    queue.pop_back();
    for (const Element& x : conjugators) {
      Parabolic c = q.conjugate(x);
      if (found.emplace(c.mask(), c).second) queue.push_back(std::move(c));
    }
  }
  std::vector<Parabolic> out;
  out.reserve(found.size());
  for (auto& [mask, q] : found) out.push_back(std::move(q));
  return out;
}

IsomorphismReport poset_isomorphism_check(const Element& u) {
  IsomorphismReport report;
  const IntervalPoset poset = interval_of_involution(u);
  const std::size_t n = poset.size();
  report.interval_size = n;
  std::vector<Parabolic> closures;
  std::set<RootMask> images;
  for (const auto& v : poset.elements) {
    closures.push_back(parabolic_closure(v));
    if (!is_involutive(closures.back())) {
      report.ok = false;
      report.failure = "P(v) is not involutive";
      return report;
    }
    images.insert(closures.back().mask());
  }
  if (images.size() != n) {
    report.ok = false;
    report.failure = "v -> P(v) is not injective";
    return report;
  }
  std::set<RootMask> targets;
  for (const auto& q : enumerate_parabolics(parabolic_closure(u))) {
    if (is_involutive(q)) targets.insert(q.mask());
  }
  report.involutive_parabolics = targets.size();
  if (targets != images) {
    report.ok = false;
    report.failure = "image differs from the involutive parabolic subgroups of P(u)";
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (poset.leq(i, j) != closures[i].is_subgroup_of(closures[j])) {
        report.ok = false;
        report.failure = "order not preserved between elements " + std::to_string(i) + " and " + std::to_string(j);
        return report;
      }
    }
  }
  return report;
}

std::vector<RootIndex> t_word(const Element& w, LengthCache& lengths) {
  const RootSystemPtr& sys = w.system_ptr();
  std::vector<RootIndex> word;
  Element x = w;
  int k = lengths(x);
  while (k > 0) {
    bool advanced = false;
    for (RootIndex t = 0; t < sys->num_positive(); ++t) {
      Element y = Element::reflection(sys, t) * x;
      if (lengths(y) == k - 1) {
        word.push_back(t);
        x = std::move(y);
        --k;
        advanced = true;
        break;
      }
    }
    if (!advanced) throw std::logic_error("t_word: no reflection lowers the reflection length");
  }
  return word;
}

std::string t_word_to_string(const RootSystem& system, const std::vector<RootIndex>& word) {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += " * ";
    std::vector<RootIndex> reversed;
    std::vector<RootIndex> perm(system.reflection(word[i]).begin(), system.reflection(word[i]).end());
    for (;;) {
      int descent = -1;
      for (int s = 0; s < system.rank(); ++s) {
        if (!system.is_positive(perm[system.simple_root(s)])) {
          descent = s;
          break;
        }
      }
      if (descent < 0) break;
      auto row = system.simple_reflection(descent);
      std::vector<RootIndex> next(perm.size());
      for (std::size_t k = 0; k < perm.size(); ++k) next[k] = perm[row[k]];
      perm = std::move(next);
      reversed.push_back(static_cast<RootIndex>(descent));
    }
    for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) out += "s" + std::to_string(*it + 1);
  }
  return out;
}

std::string interval_to_json(const IntervalPoset& poset, const std::string& type_name,
                             const std::string& top_word, LengthCache& lengths) {
  using nlohmann::json;
  const RootSystem& sys = poset.top.system();
  json doc;
  doc["type"] = type_name;
  doc["top_word"] = top_word;
  doc["elements"] = json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    doc["elements"].push_back({{"id", i},
                               {"rank", poset.ranks[i]},
                               {"t_word", t_word_to_string(sys, t_word(poset.elements[i], lengths))}});
  }
  doc["hasse"] = json::array();
  for (auto [a, b] : poset.hasse) doc["hasse"].push_back({a, b});
  const BruteForceVerdict verdict = is_lattice_bruteforce(poset);
  doc["is_lattice"] = verdict.is_lattice;
  if (verdict.witness) {
    doc["witness"] = {{"v", verdict.witness->a},
                      {"w", verdict.witness->b},
                      {"maximal_lower_bounds", verdict.witness->maximal_lower_bounds}};
  } else {
    doc["witness"] = nullptr;
  }
  return doc.dump(2);
}

std::string interval_to_dot(const IntervalPoset& poset, LengthCache& lengths) {
  const RootSystem& sys = poset.top.system();
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    os << "  n" << i << " [label=\"lT=" << poset.ranks[i] << "\\n"
       << t_word_to_string(sys, t_word(poset.elements[i], lengths)) << "\"];\n";
  }
  for (auto [a, b] : poset.hasse) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace coxabs
