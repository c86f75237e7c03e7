#include "coxlab/field.hpp"

#include <mpfr.h>

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "coxlab/error.hpp"

namespace coxlab {
namespace {

constexpr std::size_t kDim = FieldElement::kDimension;

// Coordinate index -> prime mask (bit0 = 2, bit1 = 3, bit2 = 5) and back.
constexpr std::array<unsigned, kDim> kMaskOf = {0, 1, 2, 4, 3, 5, 6, 7};
constexpr std::array<std::size_t, kDim> kIndexOf = {0, 1, 2, 4, 3, 5, 6, 7};
constexpr std::array<long, 3> kPrimes = {2, 3, 5};

struct ProductEntry {
  std::size_t index;
  long factor;
};

constexpr std::array<std::array<ProductEntry, kDim>, kDim> make_product_table() {
  std::array<std::array<ProductEntry, kDim>, kDim> table{};
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      const unsigned common = kMaskOf[i] & kMaskOf[j];
      long factor = 1;
      for (std::size_t p = 0; p < kPrimes.size(); ++p) {
        if (common & (1u << p)) factor *= kPrimes[p];
      }
      table[i][j] = {kIndexOf[kMaskOf[i] ^ kMaskOf[j]], factor};
    }
  }
  return table;
}

constexpr auto kProduct = make_product_table();

// floor(sqrt(d) * 2^bits) for every radicand, cached per precision.
const std::array<mpz_class, kDim>& scaled_roots(unsigned bits) {
  static std::mutex mutex;
  static std::map<unsigned, std::array<mpz_class, kDim>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  std::array<mpz_class, kDim> roots;
  for (std::size_t i = 0; i < kDim; ++i) {
    mpz_class scaled = FieldElement::kRadicands[i];
    scaled <<= 2 * bits;
    mpz_sqrt(roots[i].get_mpz_t(), scaled.get_mpz_t());
  }
  return cache.emplace(bits, std::move(roots)).first->second;
}

// Certified sign from a double evaluation, or 0 when the filter cannot decide.
int sign_filter(const std::array<Rational, kDim>& c) {
  double sum = 0.0;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) {
    if (c[i].is_zero()) continue;
    const double coeff = c[i].to_double();
    if (!std::isnormal(coeff)) return 0;
    const double term = coeff * std::sqrt(static_cast<double>(FieldElement::kRadicands[i]));
    sum += term;
    magnitude += std::fabs(term);
  }
  if (!std::isfinite(magnitude) || magnitude < 1e-280) return 0;
  if (std::fabs(sum) <= 1e-12 * magnitude) return 0;
  return sum > 0 ? 1 : -1;
}

int floor_log10(const mpq_class& positive) {
  const long num_digits = static_cast<long>(mpz_sizeinbase(positive.get_num_mpz_t(), 10));
  const long den_digits = static_cast<long>(mpz_sizeinbase(positive.get_den_mpz_t(), 10));
  int e = static_cast<int>(num_digits - den_digits);
  auto power = [](int exponent) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
    return exponent >= 0 ? mpq_class(p) : mpq_class(mpz_class(1), p);
  };
  while (power(e) > positive) --e;
  while (power(e + 1) <= positive) ++e;
  return e;
}

mpq_class pow10(int exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  return exponent >= 0 ? mpq_class(p) : mpq_class(mpz_class(1), p);
}

mpz_class round_half_even(const mpq_class& x) {
  mpz_class floor_value;
  mpz_fdiv_q(floor_value.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  const mpq_class fraction = x - mpq_class(floor_value);
  const int cmp_half = cmp(fraction, mpq_class(1, 2));
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(floor_value.get_mpz_t()))) {
    return floor_value + 1;
  }
  return floor_value;
}

std::string format_decimal(bool negative, const mpz_class& mantissa, int exponent, int digits) {
  std::string m = mantissa.get_str();
  std::string out = negative ? "-" : "";
  if (exponent >= digits - 1) {
    out += m;
    out.append(static_cast<std::size_t>(exponent - digits + 1), '0');
  } else if (exponent >= 0) {
    out += m.substr(0, static_cast<std::size_t>(exponent + 1));
    out += '.';
    out += m.substr(static_cast<std::size_t>(exponent + 1));
  } else {
    out += "0.";
    out.append(static_cast<std::size_t>(-exponent - 1), '0');
    out += m;
  }
  return out;
}

}  // namespace

FieldElement::FieldElement(Coords coords) {
  for (std::size_t i = 0; i < kDim; ++i) coords_[i] = Rational(coords[i]);
}

FieldElement::Coords FieldElement::coords() const {
  Coords out;
  for (std::size_t i = 0; i < kDim; ++i) out[i] = coords_[i].to_mpq();
  return out;
}

FieldElement FieldElement::rational(long p, long q) {
  if (q == 0) throw DivisionByZero();
  FieldElement out;
  out.coords_[0] = Rational(p);
  out.coords_[0] *= Rational(q).reciprocal();
  return out;
}

FieldElement FieldElement::sqrt(int radicand) {
  for (std::size_t i = 0; i < kDim; ++i) {
    if (kRadicands[i] == radicand) {
      FieldElement e;
      e.coords_[i] = Rational(1L);
      return e;
    }
  }
  throw Error("sqrt(" + std::to_string(radicand) + ") is not a basis radical");
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < kDim; ++i) {
    if (!coords_[i].is_zero()) return false;
  }
  return true;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  for (std::size_t i = 0; i < kDim; ++i) {
    coords_[i] += rhs.coords_[i];
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  for (std::size_t i = 0; i < kDim; ++i) {
    coords_[i] -= rhs.coords_[i];
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  *this = *this * rhs;
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  *this = *this * rhs.inverse();
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement out;
  for (std::size_t i = 0; i < kDim; ++i) {
    if (a.coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (b.coords_[j].is_zero()) continue;
      const ProductEntry& entry = kProduct[i][j];
      Rational term = a.coords_[i] * b.coords_[j];
      if (entry.factor != 1) term *= Rational(entry.factor);
      out.coords_[entry.index] += term;
    }
  }
  return out;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  for (std::size_t i = 0; i < kDim; ++i) {
    if (a.coords_[i] != b.coords_[i]) return false;
  }
  return true;
}

// Multiplying by the conjugate under sqrtp -> -sqrtp removes p from the
// support; after every prime is gone the running product is the norm.
FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  FieldElement reduced = *this;
  FieldElement numerator(1L);
  for (unsigned p = 0; p < 3; ++p) {
    FieldElement conjugate = reduced;
    bool touched = false;
    for (std::size_t i = 0; i < kDim; ++i) {
      if ((kMaskOf[i] & (1u << p)) && !conjugate.coords_[i].is_zero()) {
        conjugate.coords_[i] = -conjugate.coords_[i];
        touched = true;
      }
    }
    if (!touched) continue;
    numerator *= conjugate;
    reduced *= conjugate;
  }
  const Rational scale = reduced.coords_[0].reciprocal();
  for (auto& c : numerator.coords_) c *= scale;
  return numerator;
}

FieldElement FieldElement::pow(unsigned exponent) const {
  FieldElement result(1L);
  FieldElement base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent != 0) base *= base;
  }
  return result;
}

Interval FieldElement::enclose(unsigned bits) const {
  const auto& roots = scaled_roots(bits);
  const Coords c = coords();
  mpz_class scale = 1;
  scale <<= bits;
  mpq_class lower = c[0] * scale;
  mpq_class upper = lower;
  for (std::size_t i = 1; i < kDim; ++i) {
    const int s = sgn(c[i]);
    if (s == 0) continue;
    const mpq_class low_root(roots[i]);
    const mpq_class high_root(roots[i] + 1);
    if (s > 0) {
      lower += c[i] * low_root;
      upper += c[i] * high_root;
    } else {
      lower += c[i] * high_root;
      upper += c[i] * low_root;
    }
  }
  const mpq_class divisor(scale);
  return {lower / divisor, upper / divisor};
}

int FieldElement::sign() const {
  if (is_rational()) return coords_[0].sign();
  if (const int fast = sign_filter(coords_); fast != 0) return fast;
  for (unsigned bits = 20;; bits *= 2) {
    const Interval box = enclose(bits);
    if (sgn(box.lower) > 0) return 1;
    if (sgn(box.upper) < 0) return -1;
  }
}

std::string FieldElement::to_string() const {
  static const std::array<const char*, kDim> kNames = {"",   "r2",  "r3",  "r5",
                                                        "r6", "r10", "r15", "r30"};
  std::string out;
  for (std::size_t i = 0; i < kDim; ++i) {
    if (coords_[i].is_zero()) continue;
    const mpq_class c = coords_[i].to_mpq();
    const bool negative = sgn(c) < 0;
    const mpq_class magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "·";
      out += kNames[i];
    }
  }
  return out.empty() ? "0" : out;
}

std::string FieldElement::to_decimal(int digits) const {
  if (digits < 1) throw Error("to_decimal requires at least one digit");
  const int s = sign();
  if (s == 0) {
    return digits == 1 ? "0" : "0." + std::string(static_cast<std::size_t>(digits - 1), '0');
  }
  const bool negative = s < 0;
  const mpz_class limit = [&] {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    return p;
  }();

  for (unsigned bits = 20;; bits *= 2) {
    mpq_class low;
    mpq_class high;
    if (is_rational()) {
      low = high = abs(coords_[0].to_mpq());
    } else {
      Interval box = enclose(bits);
      if (negative) {
        low = -box.upper;
        high = -box.lower;
      } else {
        low = box.lower;
        high = box.upper;
      }
      if (sgn(low) <= 0) continue;
    }
    const int exponent = floor_log10(low);
    if (floor_log10(high) != exponent) continue;
    const mpq_class scale = pow10(digits - 1 - exponent);
    const mpz_class mantissa = round_half_even(low * scale);
    if (round_half_even(high * scale) != mantissa) continue;
    if (mantissa == limit) {
      return format_decimal(negative, limit / 10, exponent + 1, digits);
    }
    return format_decimal(negative, mantissa, exponent, digits);
  }
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement invert(const FieldElement& a) { return a.inverse(); }
int sign(const FieldElement& a) { return a.sign(); }
std::string to_decimal(const FieldElement& a, int digits) { return a.to_decimal(digits); }

namespace {

FieldElement exact_cosine(int m) {
  switch (m) {
    case 2:
      return FieldElement();
    case 3:
      return FieldElement::rational(1, 2);
    case 4:
      return FieldElement::sqrt(2) * FieldElement::rational(1, 2);
    case 5:
      return (FieldElement(1L) + FieldElement::sqrt(5)) * FieldElement::rational(1, 4);
    case 6:
      return FieldElement::sqrt(3) * FieldElement::rational(1, 2);
    default:
      throw UnsupportedLabel(m);
  }
}

}  // namespace

FieldElement cos_label(int m) {
  static const std::array<FieldElement, 5> kTable = {exact_cosine(2), exact_cosine(3), exact_cosine(4),
                                                     exact_cosine(5), exact_cosine(6)};
  if (m < 2 || m > 6) throw UnsupportedLabel(m);
  return kTable[static_cast<std::size_t>(m - 2)];
}

mpq_class cos_pi_over_rational(int m, int digits) {
  if (m < 2) throw UnsupportedLabel(m);
  const auto precision = static_cast<mpfr_prec_t>(std::ceil(digits * 3.33)) + 64;
  mpfr_t value;
  mpfr_init2(value, precision);
  mpfr_const_pi(value, MPFR_RNDN);
  mpfr_div_ui(value, value, static_cast<unsigned long>(m), MPFR_RNDN);
  mpfr_cos(value, value, MPFR_RNDN);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpfr_mul_z(value, value, scale.get_mpz_t(), MPFR_RNDN);
  mpz_class rounded;
  mpfr_get_z(rounded.get_mpz_t(), value, MPFR_RNDN);
  mpfr_clear(value);
  mpq_class out(rounded, scale);
  out.canonicalize();
  return out;
}

}  // namespace coxlab
