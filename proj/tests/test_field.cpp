#include <doctest.h>
#include <mpfr.h>

#include <limits>
#include <random>
#include <string>
#include <vector>

#include "coxlab/error.hpp"
#include "coxlab/field.hpp"
#include "coxlab/rational.hpp"
#include "oracles.hpp"

using coxlab::FieldElement;

namespace {

const FieldElement r2 = FieldElement::sqrt(2);
const FieldElement r3 = FieldElement::sqrt(3);
const FieldElement r5 = FieldElement::sqrt(5);

FieldElement q(long p, long d) { return FieldElement::rational(p, d); }

// Parses "-0.01475" or "12300" into an exact rational.
mpq_class parse_decimal(const std::string& text) {
  std::string digits;
  long scale = 0;
  bool after_point = false;
  for (char ch : text) {
    if (ch == '.') {
      after_point = true;
    } else if (ch != '-') {
      digits += ch;
      if (after_point) ++scale;
    }
  }
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, static_cast<unsigned long>(scale));
  mpq_class value(mpz_class(digits, 10), denominator);
  value.canonicalize();
  return text[0] == '-' ? mpq_class(-value) : value;
}

}  // namespace

TEST_CASE("add") {
  CHECK(FieldElement(1L) + FieldElement(-1L) == FieldElement());
  CHECK((FieldElement(2L) - r5) + r5 == FieldElement(2L));
  const FieldElement d1 = (FieldElement(2L) - r5) * q(1, 16);
  CHECK(d1 + d1 == (FieldElement(2L) - r5) * q(1, 8));
}

TEST_CASE("mul") {
  const FieldElement golden = (FieldElement(1L) + r5) * q(1, 4);
  CHECK(golden * golden == (FieldElement(3L) + r5) * q(1, 8));

  const FieldElement minus_cos = (FieldElement(-1L) - r5) * q(1, 4);
  const FieldElement h4 = (FieldElement(7L) - FieldElement(3L) * r5) * q(1, 32);
  CHECK(minus_cos * h4 == (FieldElement(2L) - r5) * q(1, 32));

  CHECK(r2 * r3 == FieldElement::sqrt(6));
  CHECK(r2 * FieldElement::sqrt(6) == FieldElement(2L) * r3);
  CHECK(FieldElement::sqrt(15) * FieldElement::sqrt(10) == FieldElement(5L) * FieldElement::sqrt(6));
  CHECK(FieldElement::sqrt(30) * FieldElement::sqrt(30) == FieldElement(30L));
}

TEST_CASE("invert") {
  CHECK(invert(FieldElement(1L)) == FieldElement(1L));
  CHECK(invert((FieldElement(1L) + r5) * q(1, 4)) == r5 - FieldElement(1L));
  CHECK(invert(FieldElement(2L) - r5) == -(FieldElement(2L) + r5));
  CHECK_THROWS_AS(invert(FieldElement()), coxlab::DivisionByZero);
  CHECK_THROWS_AS(FieldElement(1L) / FieldElement(), coxlab::DivisionByZero);

  // Full eight-dimensional element.
  const FieldElement x = FieldElement(1L) + r2 + r3 + r5 + FieldElement::sqrt(30);
  CHECK(x * x.inverse() == FieldElement(1L));
}

TEST_CASE("sign") {
  CHECK(sign(FieldElement()) == 0);
  CHECK(sign(FieldElement(2L) - r5) == -1);
  CHECK(sign(FieldElement(7L) - FieldElement(3L) * r5) == 1);
  // Close cancellations beyond the double filter:
  // 1351/780 is a convergent of sqrt3 (error ~ 5e-7) and
  // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6.
  CHECK(sign(r3 - q(1351, 780)) == -1);
  const FieldElement tiny = (FieldElement(5L) + FieldElement(2L) * FieldElement::sqrt(6)) -
                            (r2 + r3) * (r2 + r3);
  CHECK(tiny.is_zero());
  // 665857/470832 approximates sqrt2 to ~1.6e-12.
  CHECK(sign(r2 - q(665857, 470832)) == -1);
  CHECK(sign(q(665857, 470832) - r2) == 1);
}

TEST_CASE("cos_label") {
  CHECK(coxlab::cos_label(2) == FieldElement());
  CHECK(coxlab::cos_label(3) == q(1, 2));
  CHECK(coxlab::cos_label(4) == r2 * q(1, 2));
  CHECK(coxlab::cos_label(5) == (FieldElement(1L) + r5) * q(1, 4));
  CHECK(coxlab::cos_label(6) == r3 * q(1, 2));
  CHECK_THROWS_AS(coxlab::cos_label(7), coxlab::UnsupportedLabel);
  CHECK_THROWS_AS(coxlab::cos_label(1), coxlab::UnsupportedLabel);
}

TEST_CASE("cos_label agrees with a 30-digit numeric cosine") {
  for (int m = 2; m <= 6; ++m) {
    mpfr_t value;
    mpfr_init2(value, 256);
    mpfr_const_pi(value, MPFR_RNDN);
    mpfr_div_ui(value, value, static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_cos(value, value, MPFR_RNDN);
    mpq_class reference;
    mpfr_get_q(reference.get_mpq_t(), value);
    mpfr_clear(value);

    const coxlab::Interval box = coxlab::cos_label(m).enclose(160);
    const mpq_class mid = (box.lower + box.upper) / 2;
    CHECK(abs(mid - reference) < mpq_class(1, mpz_class("1000000000000000000000000000000")));
  }
}

TEST_CASE("to_decimal") {
  CHECK(to_decimal(q(1, 2), 3) == "0.500");
  CHECK(to_decimal((FieldElement(2L) - r5) * q(1, 16), 4) == "-0.01475");
  CHECK(to_decimal(r2, 5) == "1.4142");
  CHECK(to_decimal(FieldElement(), 3) == "0.00");
  CHECK(to_decimal(FieldElement(12345L), 3) == "12300");
  // Rounding carries into a new leading digit.
  CHECK(to_decimal(q(99996, 10000), 4) == "10.00");
  // Ties round to even.
  CHECK(to_decimal(q(25, 1000), 1) == "0.02");
  CHECK(to_decimal(q(35, 1000), 1) == "0.04");
  CHECK_THROWS(to_decimal(r2, 0));
}

TEST_CASE("to_string renders the radical basis") {
  CHECK(((FieldElement(2L) - r5) * q(1, 16)).to_string() == "1/8 - 1/16·r5");
  CHECK(FieldElement().to_string() == "0");
  CHECK((-r2 + FieldElement::sqrt(30) * q(3, 2)).to_string() == "-r2 + 3/2·r30");
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldElement a = oracle::random_element(rng);
    const FieldElement b = oracle::random_element(rng);
    const FieldElement c = oracle::random_element(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * invert(a) == FieldElement(1L));
  }
}

TEST_CASE("sign is multiplicative") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const FieldElement a = oracle::random_element(rng);
    const FieldElement b = oracle::random_element(rng);
    CHECK(sign(a * b) == sign(a) * sign(b));
    CHECK(sign(-a) == -sign(a));
  }
}

TEST_CASE("to_decimal is within one unit in the last place") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> digits(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldElement a = oracle::random_element(rng);
    if (a.is_zero()) continue;
    const int d = digits(rng);
    const std::string text = to_decimal(a, d);
    CAPTURE(text);
    const mpq_class parsed = parse_decimal(text);
    const coxlab::Interval box = a.enclose(256);
    const mpq_class mid = (box.lower + box.upper) / 2;

    // Unit in the last place from the printed digit count.
    const auto point = text.find('.');
    const long fraction_digits = point == std::string::npos ? 0 : static_cast<long>(text.size() - point - 1);
    mpz_class ulp_den;
    mpz_ui_pow_ui(ulp_den.get_mpz_t(), 10, static_cast<unsigned long>(fraction_digits));
    mpq_class ulp(mpz_class(1), ulp_den);
    if (point == std::string::npos) {
      // Integer output may carry trailing zeros beyond the significant digits.
      std::size_t significant = 0;
      for (char ch : text) significant += (ch >= '0' && ch <= '9') ? 1 : 0;
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, significant - static_cast<std::size_t>(d));
      ulp = mpq_class(scale);
    }
    CHECK(abs(parsed - mid) < ulp);
  }
}

TEST_CASE("inline rationals agree with GMP across the overflow boundary") {
  using coxlab::Rational;
  std::mt19937_64 rng(97);
  const std::vector<long> edges{0, 1, -1, 2, 3, 7, 1L << 31, (1L << 31) + 1, (1L << 62) - 1, 1L << 62,
                                std::numeric_limits<long>::max(), -std::numeric_limits<long>::max(),
                                std::numeric_limits<long>::min()};
  auto pick = [&](std::mt19937_64& g) -> long {
    if (g() % 3 == 0) return edges[g() % edges.size()];
    const int bits = static_cast<int>(g() % 63);
    const long v = static_cast<long>(g() >> (64 - bits - 1) >> 1);
    return g() % 2 ? v : -v;
  };
  for (int trial = 0; trial < 4000; ++trial) {
    long den_a = pick(rng);
    long den_b = pick(rng);
    if (den_a == 0) den_a = 1;
    if (den_b == 0) den_b = 3;
    mpq_class a(mpz_class(pick(rng)), mpz_class(den_a));
    mpq_class b(mpz_class(pick(rng)), mpz_class(den_b));
    a.canonicalize();
    b.canonicalize();
    Rational ra(a);
    const Rational rb(b);
    CHECK(ra.to_mpq() == a);
    CHECK((ra == rb) == (a == b));
    CHECK((ra * rb).to_mpq() == a * b);
    CHECK((-ra).to_mpq() == -a);
    Rational sum = ra;
    sum += rb;
    CHECK(sum.to_mpq() == a + b);
    Rational difference = ra;
    difference -= rb;
    CHECK(difference.to_mpq() == a - b);
    CHECK(difference.sign() == sgn(a - b));
    // Equal values compare equal whichever path produced them.
    Rational restored = difference;
    restored += rb;
    CHECK(restored == ra);
  }
}
