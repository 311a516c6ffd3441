#include "coxabs/dihedral.hpp"

#include <algorithm>
#include <stdexcept>

#include "coxabs/absolute_order.hpp"
#include "coxabs/coxeter_type.hpp"

namespace coxabs::dihedral {

Group::Group(long m) : m_(m) {
  if (m < 2) throw std::invalid_argument("dihedral group needs m >= 2");
}

Element Group::multiply(const Element& a, const Element& b) const {
  // s r^b = r^-b s.
  const long k = a.reflection ? a.k - b.k : a.k + b.k;
  return {mod(k), a.reflection != b.reflection};
}

Element Group::inverse(const Element& a) const {
  if (a.reflection) return a;
  return {mod(-a.k), false};
}

Element Group::from_word(const std::vector<int>& word) const {
  Element w = identity();
  for (int letter : word) {
    if (letter != 0 && letter != 1) throw std::invalid_argument("dihedral word letters must be s1 or s2");
    w = multiply(w, letter == 0 ? s() : t());
  }
  return w;
}

Element Group::longest_element() const {
  if (m_ % 2 == 0) return {m_ / 2, false};
  return {(m_ - 1) / 2, true};
}

std::vector<Element> Group::elements() const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(order()));
  for (long k = 0; k < m_; ++k) out.push_back({k, false});
  for (long k = 0; k < m_; ++k) out.push_back({k, true});
  return out;
}

int Group::coxeter_length(const Element& w) const {
  if (w.reflection) return static_cast<int>(std::min(2 * w.k + 1, 2 * (m_ - w.k) - 1));
  return static_cast<int>(std::min(2 * w.k, 2 * (m_ - w.k)));
}

int Group::reflection_length(const Element& w) const {
  if (w.reflection) return 1;
  return w.k == 0 ? 0 : 2;
}

bool Group::leq_T(const Element& u, const Element& v) const {
  return reflection_length(u) + reflection_length(multiply(inverse(u), v)) == reflection_length(v);
}

bool Group::is_involution(const Element& w) const { return multiply(w, w) == identity(); }

bool Group::is_central(const Element& w) const {
  return multiply(w, s()) == multiply(s(), w) && multiply(w, t()) == multiply(t(), w);
}

std::string Group::word(const Element& w) const {
  if (w == identity()) return "1";
  std::string out;
  auto repeat = [&out](const char* pair, long times) {
    for (long i = 0; i < times; ++i) out += pair;
  };
  if (w.reflection) {
    if (2 * w.k + 1 <= 2 * (m_ - w.k) - 1) {
      repeat("s1s2", w.k);
      out += "s1";
    } else {
      repeat("s2s1", m_ - w.k - 1);
      out += "s2";
    }
  } else if (w.k <= m_ - w.k) {
    repeat("s1s2", w.k);
  } else {
    repeat("s2s1", m_ - w.k);
  }
  return out;
}

Interval interval(const Group& g, const Element& w) {
  Interval iv;
  std::vector<std::pair<int, Element>> keyed;
  for (const Element& x : g.elements()) {
    if (g.leq_T(x, w)) keyed.emplace_back(g.reflection_length(x), x);
  }
  std::sort(keyed.begin(), keyed.end());
  const std::size_t n = keyed.size();
  for (auto& [rank, x] : keyed) {
    iv.ranks.push_back(rank);
    iv.elements.push_back(x);
  }
  iv.below.assign(n, Bitset(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if (g.leq_T(iv.elements[i], iv.elements[j])) {
        iv.below[j].set(i);
        if (iv.ranks[j] == iv.ranks[i] + 1) iv.hasse.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return iv;
}

namespace {

// Parabolic subgroups of I2(m): kind 0 trivial, 1 the reflection r^k s, 2 the whole group.
struct Parabolic {
  int kind;
  long k;
};

Parabolic closure_of(const Element& w) {
  if (w.reflection) return {1, w.k};
  return w.k == 0 ? Parabolic{0, 0} : Parabolic{2, 0};
}

Parabolic intersect(const Parabolic& a, const Parabolic& b) {
  if (a.kind == 2) return b;
  if (b.kind == 2) return a;
  if (a.kind == 1 && b.kind == 1 && a.k == b.k) return a;
  return {0, 0};
}

bool involutive(const Group& g, const Parabolic& p) { return p.kind < 2 || g.m() % 2 == 0; }

bool classification_verdict(const Group& g, const Element& w) {
  const Parabolic p = closure_of(w);
  if (p.kind < 2) return true;
  // Two commuting reflections: A1 x A1.
  if (g.m() == 2) return true;
  return is_lattice_type(TypeLabel::dihedral(static_cast<int>(g.m())));
}

}  // namespace

LatticeVerdicts lattice_verdicts(const Group& g, const Element& w) {
  LatticeVerdicts v;
  v.reflection_length = g.reflection_length(w);
  const Interval iv = interval(g, w);
  v.interval_size = iv.size();
  v.bruteforce = !find_missing_meet(iv.below).has_value();
  if (!g.is_involution(w)) {
    // Outside involutions only the length bound applies: l_T <= 2.
    v.structural = v.classification = v.reflection_length <= 2;
    return v;
  }
  std::vector<Parabolic> closures;
  for (const Element& x : iv.elements) closures.push_back(closure_of(x));
  for (std::size_t i = 0; i < closures.size() && v.structural; ++i) {
    for (std::size_t j = i + 1; j < closures.size(); ++j) {
      if (!involutive(g, intersect(closures[i], closures[j]))) {
        v.structural = false;
        break;
      }
    }
  }
  v.classification = classification_verdict(g, w);
  return v;
}

}  // namespace coxabs::dihedral
