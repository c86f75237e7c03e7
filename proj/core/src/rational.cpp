#include "coxlab/rational.hpp"

#include <cstdlib>
#include <climits>
#include <limits>
#include <numeric>

namespace coxlab {
namespace {

__extension__ typedef __int128 Wide;

constexpr Wide kSmallMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t magnitude(std::int64_t x) {
  return x < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

// gcd(|t|, g) for g > 0.
std::uint64_t gcd_wide(Wide t, std::uint64_t g) {
  const Wide r = t % static_cast<Wide>(g);
  return std::gcd(magnitude(static_cast<std::int64_t>(r)), g);
}

// Narrows a reduced fraction with den > 0 when both parts fit in int64.
bool narrow(Wide num, Wide den, std::int64_t& n, std::int64_t& d) {
  if (num > kSmallMax || -num > kSmallMax || den > kSmallMax) return false;
  n = static_cast<std::int64_t>(num);
  d = static_cast<std::int64_t>(den);
  return true;
}

bool fits(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) && mpz_cmp_si(z.get_mpz_t(), LONG_MIN) != 0; }

}  // namespace

Rational::Rational(long value) : num_(value) {
  if (value == std::numeric_limits<long>::min()) assign(mpq_class(value));
}

Rational::Rational(const mpq_class& value) {
  mpq_class canonical = value;
  canonical.canonicalize();
  assign(canonical);
}

void Rational::assign(const mpq_class& value) {
  if (fits(value.get_num()) && fits(value.get_den())) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(value);
  }
}


mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class out;
  mpq_set_si(out.get_mpq_t(), num_, static_cast<unsigned long>(den_));
  return out;
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (!big_ && !rhs.big_) {
    const auto da = static_cast<std::uint64_t>(den_);
    const auto db = static_cast<std::uint64_t>(rhs.den_);
    const std::uint64_t g = std::gcd(da, db);
    const Wide t = static_cast<Wide>(num_) * static_cast<Wide>(db / g) +
                       static_cast<Wide>(rhs.num_) * static_cast<Wide>(da / g);
    if (t == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    const std::uint64_t g2 = gcd_wide(t, g);
    const Wide den = static_cast<Wide>(da / g) * static_cast<Wide>(db / g2);
    if (narrow(t / static_cast<Wide>(g2), den, num_, den_)) return *this;
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) {
    *this = Rational();
    return *this;
  }
  if (!big_ && !rhs.big_) {
    const std::uint64_t g1 = std::gcd(magnitude(num_), static_cast<std::uint64_t>(rhs.den_));
    const std::uint64_t g2 = std::gcd(magnitude(rhs.num_), static_cast<std::uint64_t>(den_));
    const Wide num = static_cast<Wide>(num_ / static_cast<std::int64_t>(g1)) *
                         static_cast<Wide>(rhs.num_ / static_cast<std::int64_t>(g2));
    const Wide den = static_cast<Wide>(den_ / static_cast<std::int64_t>(g2)) *
                         static_cast<Wide>(rhs.den_ / static_cast<std::int64_t>(g1));
    if (narrow(num, den, num_, den_)) return *this;
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  if (out.big_) {
    *out.big_ = -*out.big_;
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

Rational Rational::reciprocal() const {
  Rational out;
  if (big_) {
    out.assign(mpq_class(1) / *big_);
  } else {
    out.num_ = num_ < 0 ? -den_ : den_;
    out.den_ = num_ < 0 ? -num_ : num_;
  }
  return out;
}

}  // namespace coxlab
