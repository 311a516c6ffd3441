#include "coxabs/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace coxabs {

namespace {

struct LexLess {
  bool operator()(const FieldVector& a, const FieldVector& b) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const int c = FieldScalar::lex_compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

using RootMap = std::map<FieldVector, RootIndex, LexLess>;

// Root signs are uniform; the first nonzero coordinate decides.
int root_sign(const FieldVector& v) {
  int s = 0;
  for (const auto& x : v) {
    const int c = x.sign();
    if (c == 0) continue;
    if (s == 0) s = c;
    else if (s != c) throw std::logic_error("root with mixed-sign coordinates");
  }
  return s;
}

FieldScalar coordinate_sum(const FieldVector& v) {
  FieldScalar h;
  for (const auto& x : v) h += x;
  return h;
}

}  // namespace

FieldMatrix gram_matrix(const CoxeterMatrix& matrix) {
  const int n = matrix.rank();
  FieldMatrix g(n, FieldVector(n));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (s == t) {
        g[s][t] = FieldScalar(1);
        continue;
      }
      const int m = matrix(s, t);
      if (m > 6) {
        throw std::invalid_argument("bond label " + std::to_string(m) +
                                    " needs cos(pi/m) outside Q(sqrt2,sqrt3,sqrt5); use the dihedral model");
      }
      g[s][t] = -cos_pi_over(m);
    }
  }
  return g;
}

bool is_positive_definite(const FieldMatrix& gram) {
  FieldMatrix a = gram;
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].sign() <= 0) return false;
    const FieldScalar inv = a[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const FieldScalar f = a[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) {
        if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
      }
    }
  }
  return true;
}

std::shared_ptr<const RootSystem> RootSystem::build(const CoxeterMatrix& matrix) {
  std::shared_ptr<RootSystem> sys(new RootSystem());
  sys->matrix_ = matrix;
  sys->gram_ = gram_matrix(matrix);
  const int n = matrix.rank();
  if (!is_positive_definite(sys->gram_)) {
    throw std::domain_error("infinite type: the bilinear form is not positive definite");
  }
  const FieldMatrix& g = sys->gram_;

  // Orbit closure of the simple roots under simple reflections. Only
  // coordinate s changes under s: b_s -> b_s - 2 B(a_s, b).
  std::vector<FieldVector> orbit;
  RootMap seen;
  for (int s = 0; s < n; ++s) {
    FieldVector e(n);
    e[s] = FieldScalar(1);
    seen.emplace(e, static_cast<RootIndex>(orbit.size()));
    orbit.push_back(std::move(e));
  }
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (int s = 0; s < n; ++s) {
      FieldScalar pairing;
      for (int j = 0; j < n; ++j) {
        if (!orbit[k][j].is_zero() && !g[s][j].is_zero()) pairing += g[s][j] * orbit[k][j];
      }
      if (pairing.is_zero()) continue;
      FieldVector image = orbit[k];
      image[s] -= FieldScalar(2) * pairing;
      if (seen.count(image)) continue;
      if (orbit.size() >= kMaxRoots) {
        throw std::length_error("root system exceeds the cap of " + std::to_string(kMaxRoots) + " roots");
      }
      seen.emplace(image, static_cast<RootIndex>(orbit.size()));
      orbit.push_back(std::move(image));
    }
  }

  // Canonical order: positives by (height, lexicographic coordinates).
  std::vector<FieldVector> positives;
  for (auto& r : orbit) {
    if (root_sign(r) > 0) positives.push_back(r);
  }
  if (positives.size() * 2 != orbit.size()) throw std::logic_error("root system is not symmetric");
  std::vector<std::pair<FieldScalar, FieldVector>> keyed;
  keyed.reserve(positives.size());
  for (auto& r : positives) keyed.emplace_back(coordinate_sum(r), std::move(r));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const int c = compare(a.first, b.first);
    if (c != 0) return c < 0;
    for (std::size_t i = 0; i < a.second.size(); ++i) {
      const int ci = compare(a.second[i], b.second[i]);
      if (ci != 0) return ci < 0;
    }
    return false;
  });
  const std::size_t npos = keyed.size();
  sys->roots_.resize(2 * npos);
  for (std::size_t i = 0; i < npos; ++i) {
    FieldVector neg(n);
    for (int j = 0; j < n; ++j) neg[j] = -keyed[i].second[j];
    sys->roots_[i] = std::move(keyed[i].second);
    sys->roots_[i + npos] = std::move(neg);
  }

  RootMap index;
  for (std::size_t i = 0; i < sys->roots_.size(); ++i) index.emplace(sys->roots_[i], static_cast<RootIndex>(i));
  auto lookup = [&](const FieldVector& v) -> RootIndex {
    auto it = index.find(v);
    if (it == index.end()) throw std::logic_error("root orbit is not closed");
    return it->second;
  };

  sys->simple_.resize(n);
  for (int s = 0; s < n; ++s) {
    FieldVector e(n);
    e[s] = FieldScalar(1);
    sys->simple_[s] = lookup(e);
  }

  // Simple rows geometrically, then every other reflection as a conjugate
  // s t s of a known one.
  const std::size_t total = sys->roots_.size();
  sys->reflections_.assign(npos * total, 0);
  std::vector<bool> known(npos, false);
  std::deque<RootIndex> queue;
  for (int s = 0; s < n; ++s) {
    const RootIndex t = sys->simple_[s];
    RootIndex* row = sys->reflections_.data() + t * total;
    for (std::size_t i = 0; i < total; ++i) {
      const FieldVector& beta = sys->roots_[i];
      FieldScalar pairing;
      for (int j = 0; j < n; ++j) {
        if (!beta[j].is_zero() && !g[s][j].is_zero()) pairing += g[s][j] * beta[j];
      }
      if (pairing.is_zero()) {
        row[i] = static_cast<RootIndex>(i);
        continue;
      }
      FieldVector image = beta;
      image[s] -= FieldScalar(2) * pairing;
      row[i] = lookup(image);
    }
    known[t] = true;
    queue.push_back(t);
  }
  while (!queue.empty()) {
    const RootIndex gamma = queue.front();
    queue.pop_front();
    const RootIndex* grow = sys->reflections_.data() + gamma * total;
    for (int s = 0; s < n; ++s) {
      const RootIndex* srow = sys->reflections_.data() + sys->simple_[s] * total;
      const RootIndex beta = srow[gamma];
      if (beta >= npos || known[beta]) continue;
      RootIndex* brow = sys->reflections_.data() + beta * total;
      for (std::size_t i = 0; i < total; ++i) brow[i] = srow[grow[srow[i]]];
      known[beta] = true;
      queue.push_back(beta);
    }
  }
  if (std::find(known.begin(), known.end(), false) != known.end()) {
    throw std::logic_error("reflection table incomplete");
  }
  return sys;
}

long RootSystem::find_root(std::span<const FieldScalar> coords) const {
  // Linear scan; used only outside hot loops.
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (std::equal(coords.begin(), coords.end(), roots_[i].begin(), roots_[i].end())) {
      return static_cast<long>(i);
    }
  }
  return -1;
}

FieldScalar RootSystem::form(RootIndex i, RootIndex j) const { return bilinear(gram_, roots_[i], roots_[j]); }

FieldScalar RootSystem::height(RootIndex i) const { return coordinate_sum(roots_[i]); }

}  // namespace coxabs
