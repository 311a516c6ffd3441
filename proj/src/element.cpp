#include "coxabs/element.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

#include "coxabs/errors.hpp"

namespace coxabs {

std::size_t group_size_cap() {
  if (const char* env = std::getenv("COXABS_MAX_GROUP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100'000;
}

std::size_t group_size_hard_cap() { return std::max<std::size_t>(5'000'000, group_size_cap()); }

Element::Element(RootSystemPtr system, std::vector<RootIndex> perm)
    : system_(std::move(system)), perm_(std::move(perm)) {
  if (perm_.size() != system_->num_roots()) throw std::invalid_argument("permutation size mismatch");
}

Element::Element(const Element& other)
    : system_(other.system_), perm_(other.perm_), reflection_length_(other.reflection_length_.load()) {}

Element::Element(Element&& other) noexcept
    : system_(std::move(other.system_)),
      perm_(std::move(other.perm_)),
      reflection_length_(other.reflection_length_.load()) {}

Element& Element::operator=(const Element& other) {
  system_ = other.system_;
  perm_ = other.perm_;
  reflection_length_.store(other.reflection_length_.load());
  return *this;
}

Element& Element::operator=(Element&& other) noexcept {
  system_ = std::move(other.system_);
  perm_ = std::move(other.perm_);
  reflection_length_.store(other.reflection_length_.load());
  return *this;
}

Element Element::identity(RootSystemPtr system) {
  std::vector<RootIndex> perm(system->num_roots());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<RootIndex>(i);
  Element e(std::move(system), std::move(perm));
  e.reflection_length_ = 0;
  return e;
}

Element Element::simple(RootSystemPtr system, int s) {
  if (s < 0 || s >= system->rank()) throw std::out_of_range("generator index out of range");
  return reflection(system, system->simple_root(s));
}

Element Element::reflection(RootSystemPtr system, RootIndex t) {
  if (t >= system->num_positive()) throw std::out_of_range("reflection index out of range");
  auto row = system->reflection(t);
  Element e(system, std::vector<RootIndex>(row.begin(), row.end()));
  e.reflection_length_ = 1;
  return e;
}

Element Element::from_word(RootSystemPtr system, std::span<const int> word) {
  Element w = identity(system);
  for (int s : word) {
    if (s < 0 || s >= system->rank()) {
      throw std::out_of_range("generator index " + std::to_string(s + 1) + " exceeds rank " +
                              std::to_string(system->rank()));
    }
    auto row = system->simple_reflection(s);
    // w * s: beta -> w(s(beta)).
    std::vector<RootIndex> next(w.perm_.size());
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = w.perm_[row[i]];
    w.perm_ = std::move(next);
  }
  w.reflection_length_ = word.empty() ? 0 : -1;
  return w;
}

Element Element::operator*(const Element& rhs) const {
  if (system_ != rhs.system_) throw std::invalid_argument("elements of different root systems");
  std::vector<RootIndex> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = perm_[rhs.perm_[i]];
  return Element(system_, std::move(p));
}

Element Element::inverse() const {
  std::vector<RootIndex> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[perm_[i]] = static_cast<RootIndex>(i);
  Element e(system_, std::move(p));
  e.reflection_length_.store(reflection_length_.load());
  return e;
}

Element Element::conjugate_by(const Element& x) const { return x * *this * x.inverse(); }

bool Element::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

bool Element::is_involution() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[perm_[i]] != i) return false;
  }
  return true;
}

bool Element::commutes_with(const Element& other) const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[other.perm_[i]] != other.perm_[perm_[i]]) return false;
  }
  return true;
}

long Element::as_reflection() const {
  // A reflection negates exactly one positive root.
  long found = -1;
  const std::size_t n = system_->num_positive();
  for (std::size_t i = 0; i < n; ++i) {
    if (perm_[i] == system_->negate(static_cast<RootIndex>(i))) {
      if (found >= 0) return -1;
      found = static_cast<long>(i);
    }
  }
  if (found < 0) return -1;
  auto row = system_->reflection(static_cast<RootIndex>(found));
  return std::equal(row.begin(), row.end(), perm_.begin()) ? found : -1;
}

int Element::coxeter_length() const {
  int count = 0;
  const std::size_t n = system_->num_positive();
  for (std::size_t i = 0; i < n; ++i) {
    if (perm_[i] >= n) ++count;
  }
  return count;
}

std::vector<RootIndex> Element::inversion_set() const {
  const std::size_t n = system_->num_positive();
  std::vector<RootIndex> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = static_cast<RootIndex>(i);
  std::vector<RootIndex> out;
  for (std::size_t t = 0; t < n; ++t) {
    if (inv[t] >= n) out.push_back(static_cast<RootIndex>(t));
  }
  return out;
}

std::vector<int> Element::reduced_word() const {
  std::vector<int> reversed;
  std::vector<RootIndex> w = perm_;
  const RootSystem& sys = *system_;
  for (;;) {
    int descent = -1;
    for (int s = 0; s < sys.rank(); ++s) {
      if (!sys.is_positive(w[sys.simple_root(s)])) {
        descent = s;
        break;
      }
    }
    if (descent < 0) break;
    auto row = sys.simple_reflection(descent);
    std::vector<RootIndex> next(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) next[i] = w[row[i]];
    w = std::move(next);
    reversed.push_back(descent);
  }
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

FieldMatrix Element::matrix() const {
  const int n = system_->rank();
  FieldMatrix m(n, FieldVector(n));
  for (int s = 0; s < n; ++s) {
    const FieldVector& image = system_->root(perm_[system_->simple_root(s)]);
    for (int i = 0; i < n; ++i) m[i][s] = image[i];
  }
  return m;
}

Subspace Element::fixed_space() const {
  FieldMatrix m = matrix();
  for (int i = 0; i < system_->rank(); ++i) m[i][i] -= FieldScalar(1);
  return Subspace::kernel(m, system_->rank());
}

Subspace Element::moved_space() const {
  // Im(w - 1) is spanned by w(alpha_s) - alpha_s.
  const int n = system_->rank();
  FieldMatrix columns;
  for (int s = 0; s < n; ++s) {
    FieldVector v = system_->root(perm_[system_->simple_root(s)]);
    v[s] -= FieldScalar(1);
    columns.push_back(std::move(v));
  }
  return Subspace::span(n, std::move(columns));
}

int Element::reflection_length() const {
  int cached = reflection_length_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached;
  const int n = system_->rank();
  FieldMatrix columns;
  columns.reserve(n);
  for (int s = 0; s < n; ++s) {
    if (perm_[system_->simple_root(s)] == system_->simple_root(s)) continue;
    FieldVector v = system_->root(perm_[system_->simple_root(s)]);
    v[s] -= FieldScalar(1);
    columns.push_back(std::move(v));
  }
  cached = matrix_rank(std::move(columns), n);
  reflection_length_.store(cached, std::memory_order_relaxed);
  return cached;
}

std::size_t ElementHash::operator()(const Element& w) const {
  // An element is determined by the images of the simple roots.
  std::size_t h = 0xcbf29ce484222325ull;
  const RootSystem& sys = w.system();
  for (int s = 0; s < sys.rank(); ++s) {
    h ^= w(sys.simple_root(s));
    h *= 0x100000001b3ull;
  }
  return h;
}

Element longest_element(RootSystemPtr system) {
  Element w = Element::identity(system);
  const RootSystem& sys = *system;
  for (;;) {
    int ascent = -1;
    for (int s = 0; s < sys.rank(); ++s) {
      if (sys.is_positive(w(sys.simple_root(s)))) {
        ascent = s;
        break;
      }
    }
    if (ascent < 0) return w;
    w = w * Element::simple(system, ascent);
  }
}

bool validate_T_reduced(const RootSystem& system, std::span<const RootIndex> ts) {
  FieldMatrix rows;
  for (RootIndex t : ts) rows.push_back(system.root(t));
  return matrix_rank(std::move(rows), system.rank()) == static_cast<int>(ts.size());
}

std::vector<Element> enumerate_group(const RootSystemPtr& system, bool allow_large) {
  const std::size_t cap = allow_large ? group_size_hard_cap() : group_size_cap();
  std::vector<Element> elements{Element::identity(system)};
  std::unordered_set<Element, ElementHash> seen{elements.front()};
  std::vector<Element> simples;
  for (int s = 0; s < system->rank(); ++s) simples.push_back(Element::simple(system, s));
  std::size_t layer_begin = 0;
  while (layer_begin < elements.size()) {
    const std::size_t layer_end = elements.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (const Element& s : simples) {
        Element next = elements[k] * s;
        if (seen.contains(next)) continue;
        if (elements.size() >= cap) throw CapExceeded("group enumeration", cap);
        seen.insert(next);
        elements.push_back(std::move(next));
      }
    }
    std::sort(elements.begin() + static_cast<std::ptrdiff_t>(layer_end), elements.end());
    layer_begin = layer_end;
  }
  return elements;
}

std::string word_to_string(std::span<const int> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += "s" + std::to_string(word[i] + 1);
  }
  return out;
}

std::vector<int> parse_word(std::string_view text, int rank) {
  std::vector<int> word;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return word;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = trim(text.substr(start, end - start));
    int s = -1;
    if (tok == "s" && rank <= 2) {
      s = 0;
    } else if (tok == "t" && rank == 2) {
      s = 1;
    } else {
      if (!tok.empty() && tok.front() == 's') tok.remove_prefix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
        throw std::invalid_argument("malformed word letter '" + std::string(text.substr(start, end - start)) + "'");
      }
      s = v - 1;
    }
    if (s < 0 || s >= rank) {
      throw std::invalid_argument("word letter '" + std::string(tok) + "' out of range for rank " + std::to_string(rank));
    }
    word.push_back(s);
    start = end + 1;
  }
  return word;
}

}  // namespace coxabs
