#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic in the real number field Q(sqrt2, sqrt3, sqrt5).
 *
 * Every scalar that appears in the geometric representation of a finite
 * Coxeter group with bond labels m in {2,3,4,5,6} lives in this field:
 * cos(pi/m) is one of 0, 1/2, sqrt2/2, (1+sqrt5)/4, sqrt3/2.
 *
 * An element is stored as eight rational coordinates over the basis
 *
 *     1, sqrt2, sqrt3, sqrt5, sqrt6, sqrt10, sqrt15, sqrt30
 *
 * Coordinates are GMP rationals, always canonical (lowest terms, positive
 * denominator). A bitmask of the nonzero coordinates is kept alongside so
 * that products of sparse elements (the common case: integers for simply
 * laced types, two coordinates for B/F/H) only touch the nonzero terms.
 */

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace coxabs {

using Rational = mpq_class;

class FieldScalar {
 public:
  static constexpr int kDegree = 8;
  /// Radicand of each basis element, in coordinate order.
  static constexpr std::array<int, kDegree> kRadicands = {1, 2, 3, 5, 6, 10, 15, 30};

  FieldScalar() = default;
  FieldScalar(long value);  // NOLINT(google-explicit-constructor)
  explicit FieldScalar(const Rational& value);

  static FieldScalar rational(long num, long den = 1);
  /// The basis element sqrt(kRadicands[index]).
  static FieldScalar basis(int index);
  /// sqrt(r) for r in {1,2,3,5,6,10,15,30}; throws otherwise.
  static FieldScalar sqrt_of(int radicand);
  static FieldScalar from_coords(const std::array<Rational, kDegree>& coords);

  const Rational& coord(int index) const { return coords_[index]; }
  const std::array<Rational, kDegree>& coords() const { return coords_; }

  bool is_zero() const { return support_ == 0; }
  bool is_rational() const { return (support_ & ~1u) == 0; }
  bool is_one() const;

  FieldScalar operator-() const;
  FieldScalar& operator+=(const FieldScalar& rhs);
  FieldScalar& operator-=(const FieldScalar& rhs);
  FieldScalar& operator*=(const FieldScalar& rhs);
  FieldScalar& operator/=(const FieldScalar& rhs);

  friend FieldScalar operator+(FieldScalar a, const FieldScalar& b) { return a += b; }
  friend FieldScalar operator-(FieldScalar a, const FieldScalar& b) { return a -= b; }
  friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b);
  friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b);

  friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
    return a.support_ == b.support_ && a.coords_ == b.coords_;
  }

  /// Multiplicative inverse; throws std::domain_error on zero.
  FieldScalar inverse() const;

  /// Exact sign under the real embedding with all radicals positive.
  int sign() const;

  double approx() const;
  std::string to_string() const;

  /// Total order on coordinate vectors (not the real order). For use as a map key.
  static int lex_compare(const FieldScalar& a, const FieldScalar& b);

 private:
  void refresh_support();
  int sign_by_refinement() const;

  std::array<Rational, kDegree> coords_{};
  std::uint8_t support_ = 0;
};

FieldScalar invert(const FieldScalar& a);
int sign(const FieldScalar& a);

/// Real-order comparison: sign(a - b).
inline int compare(const FieldScalar& a, const FieldScalar& b) { return (a - b).sign(); }

/// cos(pi/m) for m in {1,...,6}; throws std::invalid_argument otherwise.
FieldScalar cos_pi_over(int m);

std::ostream& operator<<(std::ostream& os, const FieldScalar& x);

}  // namespace coxabs
