#pragma once

// Exact arithmetic in the real field Q(sqrt2, sqrt3, sqrt5).
//
// Elements are stored as eight rational coordinates on the basis
//
//     1, r2, r3, r5, r6, r10, r15, r30      (rN = sqrt N)
//
// Internally each basis radical is addressed by a 3-bit mask over the primes
// {2, 3, 5}; the product of two basis radicals is the radical of the xor of
// their masks times the primes in the intersection. That keeps
// multiplication a fixed table and makes the representation canonical.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>

#include "coxlab/rational.hpp"

namespace coxlab {

/// Rational enclosure [lower, upper] of a real number.
struct Interval {
  mpq_class lower;
  mpq_class upper;
};

class FieldElement {
 public:
  static constexpr std::size_t kDimension = 8;
  using Coords = std::array<mpq_class, kDimension>;

  /// Radicands of the basis in coordinate order.
  static constexpr std::array<int, kDimension> kRadicands = {1, 2,  3,  5,
                                                             6, 10, 15, 30};

  FieldElement() = default;
  FieldElement(long value) { coords_[0] = Rational(value); }  // NOLINT: implicit by intent
  FieldElement(const mpq_class& value) { coords_[0] = Rational(value); }  // NOLINT
  explicit FieldElement(Coords coords);

  /// p/q as a field element. Throws DivisionByZero when q == 0.
  static FieldElement rational(long p, long q);
  /// sqrt(radicand) for radicand in kRadicands.
  static FieldElement sqrt(int radicand);

  mpq_class coord(std::size_t i) const { return coords_[i].to_mpq(); }
  Coords coords() const;

  bool is_zero() const;
  bool is_rational() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Multiplicative inverse; throws DivisionByZero for 0.
  FieldElement inverse() const;
  FieldElement pow(unsigned exponent) const;

  /// Exact sign in {-1, 0, +1}.
  int sign() const;

  /// Enclosure of the element's real value using radical approximations
  /// accurate to `bits` binary digits.
  Interval enclose(unsigned bits) const;

  /// Symbolic form "a0 + a1·r2 + ... + a7·r30", zero terms omitted.
  std::string to_string() const;

  /// Decimal rendering with `digits` significant digits, round half to even.
  std::string to_decimal(int digits) const;

 private:
  std::array<Rational, kDimension> coords_{};
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement invert(const FieldElement& a);
int sign(const FieldElement& a);
std::string to_decimal(const FieldElement& a, int digits);

/// cos(pi/m) exactly for m in {2,...,6}; throws UnsupportedLabel otherwise.
FieldElement cos_label(int m);

/// cos(pi/m) rounded to `digits` decimal places, as a rational.
mpq_class cos_pi_over_rational(int m, int digits);

}  // namespace coxlab
