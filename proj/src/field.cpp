#include "coxabs/field.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace coxabs {

namespace {

// A basis element sqrt(2^a 3^b 5^c) is encoded as the mask a | b<<1 | c<<2.
constexpr std::array<int, 8> kIndexToMask = {0, 1, 2, 4, 3, 5, 6, 7};
constexpr std::array<int, 8> kMaskToIndex = {0, 1, 2, 4, 3, 5, 6, 7};

constexpr int shared_factor(int mask) {
  int f = 1;
  if (mask & 1) f *= 2;
  if (mask & 2) f *= 3;
  if (mask & 4) f *= 5;
  return f;
}

struct ProductTable {
  std::array<std::array<int, 8>, 8> index{};
  std::array<std::array<int, 8>, 8> factor{};
};

constexpr ProductTable make_product_table() {
  ProductTable t;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const int mi = kIndexToMask[i];
      const int mj = kIndexToMask[j];
      t.index[i][j] = kMaskToIndex[mi ^ mj];
      t.factor[i][j] = shared_factor(mi & mj);
    }
  }
  return t;
}

constexpr ProductTable kProducts = make_product_table();

int radicand_index(int radicand) {
  for (int i = 0; i < FieldScalar::kDegree; ++i) {
    if (FieldScalar::kRadicands[i] == radicand) return i;
  }
  throw std::invalid_argument("sqrt(" + std::to_string(radicand) + ") is not a basis element");
}

// Solves the square system m * x = rhs over Q; m is assumed invertible.
std::array<Rational, 8> solve8(std::array<std::array<Rational, 8>, 8> m,
                               std::array<Rational, 8> rhs) {
  constexpr int n = 8;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("singular multiplication matrix");
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    const Rational inv = 1 / m[col][col];
    for (int k = col; k < n; ++k) m[col][k] *= inv;
    rhs[col] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == col || sgn(m[row][col]) == 0) continue;
      const Rational f = m[row][col];
      for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  return rhs;
}

}  // namespace

FieldScalar::FieldScalar(long value) {
  coords_[0] = value;
  refresh_support();
}

FieldScalar::FieldScalar(const Rational& value) {
  coords_[0] = value;
  refresh_support();
}

FieldScalar FieldScalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return FieldScalar(q);
}

FieldScalar FieldScalar::basis(int index) {
  if (index < 0 || index >= kDegree) throw std::out_of_range("basis index");
  FieldScalar x;
  x.coords_[index] = 1;
  x.support_ = static_cast<std::uint8_t>(1u << index);
  return x;
}

FieldScalar FieldScalar::sqrt_of(int radicand) { return basis(radicand_index(radicand)); }

FieldScalar FieldScalar::from_coords(const std::array<Rational, kDegree>& coords) {
  FieldScalar x;
  x.coords_ = coords;
  for (auto& c : x.coords_) c.canonicalize();
  x.refresh_support();
  return x;
}

bool FieldScalar::is_one() const { return support_ == 1 && coords_[0] == 1; }

void FieldScalar::refresh_support() {
  support_ = 0;
  for (int i = 0; i < kDegree; ++i) {
    if (sgn(coords_[i]) != 0) support_ |= static_cast<std::uint8_t>(1u << i);
  }
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar r = *this;
  for (int i = 0; i < kDegree; ++i) {
    if (support_ & (1u << i)) r.coords_[i] = -r.coords_[i];
  }
  return r;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& rhs) {
  if (rhs.support_ == 0) return *this;
  for (int i = 0; i < kDegree; ++i) {
    if (rhs.support_ & (1u << i)) coords_[i] += rhs.coords_[i];
  }
  refresh_support();
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& rhs) {
  if (rhs.support_ == 0) return *this;
  for (int i = 0; i < kDegree; ++i) {
    if (rhs.support_ & (1u << i)) coords_[i] -= rhs.coords_[i];
  }
  refresh_support();
  return *this;
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar r;
  if (a.support_ == 0 || b.support_ == 0) return r;
  if (a.support_ == 1 && b.support_ == 1) {
    r.coords_[0] = a.coords_[0] * b.coords_[0];
    r.support_ = 1;
    return r;
  }
  Rational term;
  for (int i = 0; i < FieldScalar::kDegree; ++i) {
    if (!(a.support_ & (1u << i))) continue;
    for (int j = 0; j < FieldScalar::kDegree; ++j) {
      if (!(b.support_ & (1u << j))) continue;
      term = a.coords_[i] * b.coords_[j];
      const int f = kProducts.factor[i][j];
      if (f != 1) term *= f;
      r.coords_[kProducts.index[i][j]] += term;
    }
  }
  r.refresh_support();
  return r;
}

FieldScalar& FieldScalar::operator*=(const FieldScalar& rhs) { return *this = *this * rhs; }

FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) { return a * b.inverse(); }

FieldScalar& FieldScalar::operator/=(const FieldScalar& rhs) { return *this = *this / rhs; }

FieldScalar FieldScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return FieldScalar(Rational(1 / coords_[0]));

  // a + b*sqrt(d): multiply by the conjugate.
  const int irrational = support_ & ~1u;
  if ((irrational & (irrational - 1)) == 0) {
    int idx = 0;
    while (!(irrational & (1 << idx))) ++idx;
    const Rational& p = coords_[0];
    const Rational& q = coords_[idx];
    const Rational norm = p * p - q * q * kRadicands[idx];
    FieldScalar r;
    r.coords_[0] = p / norm;
    r.coords_[idx] = -q / norm;
    r.refresh_support();
    return r;
  }

  // General case: solve (multiplication by this) * x = 1 over the basis.
  std::array<std::array<Rational, 8>, 8> m{};
  for (int j = 0; j < kDegree; ++j) {
    for (int i = 0; i < kDegree; ++i) {
      if (!(support_ & (1u << i))) continue;
      m[kProducts.index[i][j]][j] += coords_[i] * kProducts.factor[i][j];
    }
  }
  std::array<Rational, 8> rhs{};
  rhs[0] = 1;
  FieldScalar r;
  r.coords_ = solve8(std::move(m), std::move(rhs));
  r.refresh_support();
  return r;
}

int FieldScalar::sign() const {
  if (support_ == 0) return 0;
  if (is_rational()) return sgn(coords_[0]);
  const int irrational = support_ & ~1u;
  if ((irrational & (irrational - 1)) == 0) {
    int idx = 0;
    while (!(irrational & (1 << idx))) ++idx;
    const int sp = sgn(coords_[0]);
    const int sq = sgn(coords_[idx]);
    if (sp == 0 || sp == sq) return sq;
    // Opposite signs: compare p^2 against q^2 d.
    const int c = cmp(coords_[0] * coords_[0], coords_[idx] * coords_[idx] * kRadicands[idx]);
    return c > 0 ? sp : sq;
  }
  return sign_by_refinement();
}

int FieldScalar::sign_by_refinement() const {
  // Enclose each radical in [s/2^k, (s+1)/2^k] with s = floor(sqrt(r 4^k)),
  // then bound the linear combination. Doubling k terminates because the
  // value is a nonzero real number.
  for (unsigned long bits = 64;; bits *= 2) {
    if (bits > (1ul << 24)) throw std::logic_error("sign refinement did not terminate");
    Rational lower = coords_[0];
    Rational upper = coords_[0];
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, bits);
    for (int i = 1; i < kDegree; ++i) {
      if (!(support_ & (1u << i))) continue;
      mpz_class s = kRadicands[i] * scale * scale;
      mpz_sqrt(s.get_mpz_t(), s.get_mpz_t());
      Rational lo(s, scale);
      Rational hi(mpz_class(s + 1), scale);
      lo.canonicalize();
      hi.canonicalize();
      const Rational& c = coords_[i];
      if (sgn(c) > 0) {
        lower += c * lo;
        upper += c * hi;
      } else {
        lower += c * hi;
        upper += c * lo;
      }
    }
    if (sgn(lower) > 0) return 1;
    if (sgn(upper) < 0) return -1;
  }
}

double FieldScalar::approx() const {
  double v = 0.0;
  for (int i = 0; i < kDegree; ++i) {
    if (support_ & (1u << i)) v += coords_[i].get_d() * std::sqrt(static_cast<double>(kRadicands[i]));
  }
  return v;
}

std::string FieldScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kDegree; ++i) {
    if (!(support_ & (1u << i))) continue;
    const Rational& c = coords_[i];
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "sqrt" << kRadicands[i];
    }
  }
  return os.str();
}

int FieldScalar::lex_compare(const FieldScalar& a, const FieldScalar& b) {
  for (int i = 0; i < kDegree; ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

FieldScalar invert(const FieldScalar& a) { return a.inverse(); }

int sign(const FieldScalar& a) { return a.sign(); }

FieldScalar cos_pi_over(int m) {
  switch (m) {
    case 1: return FieldScalar(-1);
    case 2: return FieldScalar(0);
    case 3: return FieldScalar::rational(1, 2);
    case 4: return FieldScalar::rational(1, 2) * FieldScalar::sqrt_of(2);
    case 5: return FieldScalar::rational(1, 4) + FieldScalar::rational(1, 4) * FieldScalar::sqrt_of(5);
    case 6: return FieldScalar::rational(1, 2) * FieldScalar::sqrt_of(3);
    default:
      throw std::invalid_argument("cos(pi/" + std::to_string(m) +
                                  ") is outside Q(sqrt2,sqrt3,sqrt5); use the dihedral model");
  }
}

std::ostream& operator<<(std::ostream& os, const FieldScalar& x) { return os << x.to_string(); }

}  // namespace coxabs
