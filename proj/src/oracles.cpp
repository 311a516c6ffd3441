#include "coxabs/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "coxabs/errors.hpp"

namespace coxabs::oracle {

int dyer_reflection_length(const RootSystemPtr& system, std::span<const int> word) {
  const std::size_t n = word.size();
  if (n > kDyerWordCap) throw CapExceeded("Dyer deletion search word length", kDyerWordCap);
  if (Element::from_word(system, word).coxeter_length() != static_cast<int>(n)) {
    throw std::invalid_argument("dyer_reflection_length: word is not reduced");
  }
  const int rank = system->rank();
  std::vector<bool> deleted(n);
  auto remainder_is_identity = [&] {
    for (int s = 0; s < rank; ++s) {
      RootIndex x = system->simple_root(s);
      for (std::size_t i = n; i-- > 0;) {
        if (!deleted[i]) x = system->simple_reflection(word[i])[x];
      }
      if (x != system->simple_root(s)) return false;
    }
    return true;
  };
  for (std::size_t k = 0; k <= n; ++k) {
    // Walk all k-subsets as permutations of a sorted 0/1 mask.
    std::vector<bool> mask(n, false);
    std::fill(mask.end() - static_cast<long>(k), mask.end(), true);
    do {
      deleted = mask;
      if (remainder_is_identity()) return static_cast<int>(k);
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  throw std::logic_error("deleting every letter always gives the identity");
}

CayleyLengths::CayleyLengths(RootSystemPtr system, bool allow_large) : system_(std::move(system)) {
  const std::size_t cap = allow_large ? group_size_hard_cap() : group_size_cap();
  for (RootIndex t = 0; t < system_->num_positive(); ++t) reflections_.push_back(Element::reflection(system_, t));
  Element id = Element::identity(system_);
  distance_.emplace(id, 0);
  std::vector<Element> frontier{id};
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<Element> next;
    for (const Element& x : frontier) {
      for (const Element& t : reflections_) {
        Element y = x * t;
        if (distance_.contains(y)) continue;
        if (distance_.size() >= cap) throw CapExceeded("Cayley graph enumeration", cap);
        distance_.emplace(y, d);
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
}

int CayleyLengths::operator()(const Element& w) const {
  if (w.system_ptr() != system_) throw std::out_of_range("element of another root system");
  return distance_.at(w);
}

IntervalPoset cayley_interval(const Element& u, const CayleyLengths& d) {
  const int du = d(u);
  auto in_interval = [&](const Element& x) { return d(x) + d(x.inverse() * u) == du; };

  std::vector<Element> found{Element::identity(u.system_ptr())};
  std::unordered_map<Element, int, ElementHash> seen{{found.front(), 0}};
  std::deque<Element> queue{found.front()};
  while (!queue.empty()) {
    Element x = std::move(queue.front());
    queue.pop_front();
    for (const Element& t : d.reflections()) {
      Element y = x * t;
      if (seen.contains(y) || !in_interval(y)) continue;
      seen.emplace(y, 0);
      found.push_back(y);
      queue.push_back(std::move(y));
    }
  }

  std::sort(found.begin(), found.end(), [&](const Element& a, const Element& b) {
    const int da = d(a), db = d(b);
    return da != db ? da < db : a < b;
  });
  IntervalPoset poset;
  poset.top = u;
  poset.elements = std::move(found);
  const std::size_t n = poset.elements.size();
  for (const Element& x : poset.elements) poset.ranks.push_back(d(x));
  poset.below.assign(n, Bitset(n));
  std::vector<Bitset> above(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Element xi_inv = poset.elements[i].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (poset.ranks[i] + d(xi_inv * poset.elements[j]) == poset.ranks[j]) {
        poset.below[j].set(i);
        above[i].set(j);
      }
    }
  }
  // x covers-below y iff x < y with nothing strictly between.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i : poset.below[j].indices()) {
      if (i == j) continue;
      if ((above[i] & poset.below[j]).count() == 2) poset.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::sort(poset.hasse.begin(), poset.hasse.end());
  return poset;
}

IntervalPoset cayley_interval(const Element& u) { return cayley_interval(u, CayleyLengths(u.system_ptr())); }

std::set<ReflectionTuple> t_reduced_expressions(const Element& u, const CayleyLengths& d) {
  const int k = d(u);
  if (k > kExpressionLengthCap) {
    throw CapExceeded("T-reduced expression search reflection length", kExpressionLengthCap);
  }
  std::set<ReflectionTuple> out;
  ReflectionTuple prefix;
  // x is what remains to be written after the chosen prefix.
  auto extend = [&](auto&& self, const Element& x, int remaining) -> void {
    if (remaining == 0) {
      out.insert(prefix);
      return;
    }
    for (RootIndex t = 0; t < d.reflections().size(); ++t) {
      Element y = d.reflections()[t] * x;
      if (d(y) != remaining - 1) continue;
      prefix.push_back(t);
      self(self, y, remaining - 1);
      prefix.pop_back();
    }
  };
  extend(extend, u, k);
  return out;
}

std::set<ReflectionTuple> t_reduced_expressions(const Element& u) {
  return t_reduced_expressions(u, CayleyLengths(u.system_ptr()));
}

std::vector<std::set<ReflectionTuple>> hurwitz_orbits(const RootSystem& system,
                                                      const std::set<ReflectionTuple>& tuples) {
  // Reflection along s_a(alpha_b), i.e. t_a t_b t_a.
  auto conj = [&](RootIndex a, RootIndex b) { return system.positive_of(system.reflect(a, b)); };
  std::vector<std::set<ReflectionTuple>> orbits;
  std::set<ReflectionTuple> assigned;
  for (const ReflectionTuple& start : tuples) {
    if (assigned.contains(start)) continue;
    std::set<ReflectionTuple> orbit{start};
    std::vector<ReflectionTuple> stack{start};
    while (!stack.empty()) {
      ReflectionTuple x = std::move(stack.back());
      stack.pop_back();
      for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        ReflectionTuple forward = x;
        forward[i] = conj(x[i], x[i + 1]);
        forward[i + 1] = x[i];
        ReflectionTuple backward = x;
        backward[i] = x[i + 1];
        backward[i + 1] = conj(x[i + 1], x[i]);
        for (auto* y : {&forward, &backward}) {
          if (orbit.insert(*y).second) stack.push_back(*y);
        }
      }
    }
    assigned.insert(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace coxabs::oracle
