#pragma once

// Rational number with an allocation-free fast path.
//
// Values whose reduced numerator and denominator fit in int64 are stored
// inline; anything larger lives in a heap mpq_class. The representation is
// canonical: a value is heap-backed exactly when it does not fit inline.

#include <gmpxx.h>

#include <cstdint>
#include <memory>

namespace coxlab {

class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT: implicit by intent
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      num_ = other.num_;
      den_ = other.den_;
      big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  int sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }
  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }

  mpq_class to_mpq() const;
  double to_double() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational operator-() const;
  /// 1 / *this; the caller guarantees *this != 0.
  Rational reciprocal() const;

  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational out = a;
    out *= b;
    return out;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }

 private:
  void assign(const mpq_class& value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace coxlab
