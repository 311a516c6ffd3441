#include "coxabs/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace coxabs {

namespace {

RootMask empty_mask(const RootSystem& sys) { return RootMask(sys.num_positive()); }

std::vector<RootIndex> mask_to_roots(const RootMask& mask) {
  std::vector<RootIndex> out;
  for (auto i = mask.find_first(); i != RootMask::npos; i = mask.find_next(i)) {
    out.push_back(static_cast<RootIndex>(i));
  }
  return out;
}

}  // namespace

int dihedral_order(const RootSystem& system, RootIndex a, RootIndex b) {
  // s_a s_b rotates span(a, b) by 2pi/m; track the image of a.
  RootIndex x = a;
  int k = 0;
  do {
    x = system.reflect(a, system.reflect(b, x));
    ++k;
  } while (x != a);
  return k;
}

std::vector<RootIndex> simple_system(const RootSystem& system, std::span<const RootIndex> positive_roots) {
  RootMask in = empty_mask(system);
  for (RootIndex r : positive_roots) {
    if (!system.is_positive(r)) throw std::invalid_argument("simple_system: expected positive roots");
    in.set(r);
  }
  for (RootIndex a : positive_roots) {
    for (RootIndex b : positive_roots) {
      if (!in.test(system.positive_of(system.reflect(a, b)))) {
        throw std::invalid_argument("simple_system: root set is not closed");
      }
    }
  }
  // s_a(beta) = beta - 2B(a, beta) a. A positive image of lower index means
  // B(a, beta) > 0 and beta is a positive combination of a and s_a(beta).
  std::vector<RootIndex> simple;
  for (RootIndex beta : positive_roots) {
    bool decomposable = false;
    for (RootIndex a : positive_roots) {
      if (a == beta) continue;
      const RootIndex image = system.reflect(a, beta);
      if (system.is_positive(image) && image < beta) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(beta);
  }
  return simple;
}

Parabolic Parabolic::from_closed_mask(RootSystemPtr system, RootMask mask) {
  Parabolic p;
  const RootSystem& sys = *system;
  p.system_ = std::move(system);
  p.mask_ = std::move(mask);
  p.roots_ = mask_to_roots(p.mask_);
  const std::vector<RootIndex> simple = coxabs::simple_system(sys, p.roots_);

  const int k = static_cast<int>(simple.size());
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 1));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) m[i][j] = m[j][i] = dihedral_order(sys, simple[i], simple[j]);
  }
  const CoxeterMatrix full = k > 0 ? CoxeterMatrix(m) : CoxeterMatrix();

  // Components sorted by (type, first simple root) so type() is sorted.
  std::vector<std::pair<TypeLabel, std::vector<int>>> comps;
  if (k > 0) {
    for (auto& nodes : diagram_components(full)) {
      comps.emplace_back(recognize_irreducible(restrict_matrix(full, nodes)), std::move(nodes));
    }
  }
  std::sort(comps.begin(), comps.end());
  std::vector<int> order;
  for (auto& [label, nodes] : comps) {
    p.type_.push_back(label);
    std::vector<RootIndex> roots;
    for (int v : nodes) {
      roots.push_back(simple[v]);
      order.push_back(v);
    }
    p.components_.push_back(std::move(roots));
  }
  for (int v : order) p.simple_.push_back(simple[v]);
  if (k > 0) p.matrix_ = restrict_matrix(full, order);

  FieldMatrix vectors;
  for (RootIndex r : p.simple_) vectors.push_back(sys.root(r));
  p.span_ = Subspace::span(sys.rank(), std::move(vectors));
  if (p.span_.dim() != k) throw std::logic_error("simple system is not linearly independent");
  return p;
}

Parabolic Parabolic::from_roots(RootSystemPtr system, std::vector<RootIndex> positive_roots) {
  RootMask mask = empty_mask(*system);
  FieldMatrix vectors;
  for (RootIndex r : positive_roots) {
    if (!system->is_positive(r)) throw std::invalid_argument("from_roots: expected positive root indices");
    mask.set(r);
    vectors.push_back(system->root(r));
  }
  const Subspace span = Subspace::span(system->rank(), std::move(vectors));
  for (RootIndex t = 0; t < system->num_positive(); ++t) {
    if (span.contains(system->root(t)) != mask.test(t)) {
      throw std::invalid_argument("root set is not closed: it differs from Phi+ cap span");
    }
  }
  return from_closed_mask(std::move(system), std::move(mask));
}

Parabolic Parabolic::from_subspace(RootSystemPtr system, const Subspace& span) {
  RootMask mask = empty_mask(*system);
  for (RootIndex t = 0; t < system->num_positive(); ++t) {
    if (span.contains(system->root(t))) mask.set(t);
  }
  return from_closed_mask(std::move(system), std::move(mask));
}

Parabolic Parabolic::standard(RootSystemPtr system, const std::vector<int>& generators) {
  std::vector<bool> allowed(system->rank(), false);
  for (int s : generators) {
    if (s < 0 || s >= system->rank()) throw std::out_of_range("generator index out of range");
    allowed[s] = true;
  }
  RootMask mask = empty_mask(*system);
  for (RootIndex t = 0; t < system->num_positive(); ++t) {
    const FieldVector& r = system->root(t);
    bool inside = true;
    for (int j = 0; j < system->rank(); ++j) {
      if (!allowed[j] && !r[j].is_zero()) inside = false;
    }
    if (inside) mask.set(t);
  }
  return from_closed_mask(std::move(system), std::move(mask));
}

Parabolic Parabolic::trivial(RootSystemPtr system) {
  RootMask mask = empty_mask(*system);
  return from_closed_mask(std::move(system), std::move(mask));
}

Parabolic Parabolic::whole(RootSystemPtr system) {
  RootMask mask = empty_mask(*system);
  mask.set();
  return from_closed_mask(std::move(system), std::move(mask));
}

bool Parabolic::contains(const Element& w) const {
  if (w.system_ptr() != system_) throw std::invalid_argument("element of a different root system");
  if (!complement_) complement_ = std::make_shared<const Subspace>(span_.orthogonal_complement(system_->gram()));
  const int n = system_->rank();
  for (const FieldVector& x : complement_->basis()) {
    FieldVector image(n);
    for (int s = 0; s < n; ++s) {
      if (x[s].is_zero()) continue;
      const FieldVector& ws = system_->root(w(system_->simple_root(s)));
      for (int i = 0; i < n; ++i) {
        if (!ws[i].is_zero()) image[i] += x[s] * ws[i];
      }
    }
    if (image != x) return false;
  }
  return true;
}

Parabolic Parabolic::conjugate(const Element& x) const {
  RootMask mask = empty_mask(*system_);
  for (RootIndex r : roots_) mask.set(system_->positive_of(x(r)));
  return from_closed_mask(system_, std::move(mask));
}

Parabolic parabolic_closure(const Element& w) {
  const Subspace moved = w.moved_space();
  const RootSystem& sys = w.system();
  RootMask mask = empty_mask(sys);
  if (moved.dim() > 0) {
    for (RootIndex t = 0; t < sys.num_positive(); ++t) {
      if (moved.contains(sys.root(t))) mask.set(t);
    }
  }
  return Parabolic::from_closed_mask(w.system_ptr(), std::move(mask));
}

Parabolic intersect(const Parabolic& p, const Parabolic& q) {
  if (p.system_ptr() != q.system_ptr()) throw std::invalid_argument("parabolics of different root systems");
  return Parabolic::from_closed_mask(p.system_ptr(), p.mask() & q.mask());
}

Parabolic intersect_by_span(const Parabolic& p, const Parabolic& q) {
  if (p.system_ptr() != q.system_ptr()) throw std::invalid_argument("parabolics of different root systems");
  return Parabolic::from_subspace(p.system_ptr(), p.span().intersect(q.span()));
}

Element longest_element(const Parabolic& p) {
  const RootSystemPtr& sys = p.system_ptr();
  Element w = Element::identity(sys);
  for (;;) {
    long ascent = -1;
    for (RootIndex beta : p.simple_system()) {
      if (sys->is_positive(w(beta))) {
        ascent = beta;
        break;
      }
    }
    if (ascent < 0) return w;
    w = w * Element::reflection(sys, static_cast<RootIndex>(ascent));
  }
}

bool is_involutive(const Parabolic& p) {
  const Element w0 = longest_element(p);
  const RootSystem& sys = p.system();
  for (RootIndex beta : p.positive_roots()) {
    if (w0(beta) != sys.negate(beta)) return false;
  }
  return true;
}

bool is_involutive_by_type(const Parabolic& p) {
  return std::all_of(p.type().begin(), p.type().end(), [](const TypeLabel& l) { return is_involutive_type(l); });
}

Element central_involution(const Parabolic& p) {
  if (!is_involutive(p)) {
    throw std::domain_error("parabolic of type " + to_string(p.type()) + " is not involutive");
  }
  return longest_element(p);
}

std::vector<Element> enumerate_involutions(const Parabolic& p) {
  const RootSystemPtr& sys = p.system_ptr();
  std::unordered_set<Element, ElementHash> found;
  const Element id = Element::identity(sys);
  found.insert(id);

  // Depth-first over sets of pairwise orthogonal roots, in increasing order.
  struct Frame {
    Element product;
    std::vector<RootIndex> candidates;
  };
  std::vector<Frame> stack;
  stack.push_back({id, p.positive_roots()});
  while (!stack.empty()) {
    Frame frame = std::move(stack.back());
    stack.pop_back();
    for (std::size_t k = 0; k < frame.candidates.size(); ++k) {
      const RootIndex r = frame.candidates[k];
      Element next = frame.product * Element::reflection(sys, r);
      std::vector<RootIndex> rest;
      for (std::size_t j = k + 1; j < frame.candidates.size(); ++j) {
        if (sys->orthogonal(r, frame.candidates[j])) rest.push_back(frame.candidates[j]);
      }
      found.insert(next);
      if (!rest.empty()) stack.push_back({std::move(next), std::move(rest)});
    }
  }
  std::vector<Element> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coxabs
