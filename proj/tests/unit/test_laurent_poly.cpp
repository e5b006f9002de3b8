#include <doctest.h>

#include "generators.hpp"
#include "printers.hpp"
#include "ggp/error.hpp"
#include "ggp/laurent_poly.hpp"

using namespace ggp;

namespace {

const LaurentPoly q = LaurentPoly::q();

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected ggp::Error");
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_rational("1.5"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_rational(""); }) == ErrorCode::parse_error);
}

TEST_CASE("addition") {
  CHECK((q - 1) + (q + 1) == 2 * q);
  CHECK(LaurentPoly() + LaurentPoly::q(-1) == LaurentPoly::q(-1));
  CHECK(((q * q - 1) + (1 - q * q)).is_zero());
  CHECK(((q * q - 1) + (1 - q * q)).terms().empty());
}

TEST_CASE("multiplication") {
  CHECK((q - 1) * (q + 1) == q * q - 1);
  CHECK(LaurentPoly::q(-1) * q == LaurentPoly(1));
  CHECK((q * q - 1) * LaurentPoly(1) == q * q - 1);
  CHECK((q + 1).pow(3) == q.pow(3) + 3 * q * q + 3 * q + 1);
}

TEST_CASE("exact division") {
  CHECK(exact_div(q * q - 1, q - 1) == q + 1);
  const LaurentPoly qi = LaurentPoly::q(-1);
  CHECK(exact_div(1 - qi * qi, 1 - qi) == 1 + qi);
  // Monomial shifts in both directions.
  CHECK(exact_div(q.pow(5) - q.pow(3), q.pow(4)) == q - LaurentPoly::q(-1));
  CHECK(code_of([&] { exact_div(q + 1, q - 1); }) == ErrorCode::not_divisible);
  CHECK(code_of([&] { exact_div(q, LaurentPoly()); }) == ErrorCode::divide_by_zero);
  CHECK(code_of([&] { exact_div(LaurentPoly(1), q + 1); }) == ErrorCode::not_divisible);
  CHECK(exact_div(LaurentPoly(), q + 1).is_zero());
}

TEST_CASE("falling binomial") {
  CHECK(falling_binomial(q - 1, 1) == q - 1);
  CHECK(falling_binomial(q - 1, 2) == (q * q - 3 * q + 2) * Rational(1, 2));
  CHECK(falling_binomial(q * q + LaurentPoly::q(-3), 0) == LaurentPoly(1));
  // Integer binomials at integer points.
  for (int x = 0; x <= 9; ++x) {
    for (unsigned m = 0; m <= static_cast<unsigned>(x); ++m) {
      Integer expected;
      mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(x), m);
      CHECK(eval(falling_binomial(q, m), x) == Rational(expected));
    }
  }
}

TEST_CASE("evaluation") {
  CHECK(eval(q - 1, 2) == 1);
  CHECK(eval(q * q - 1, 3) == 8);
  CHECK(eval(LaurentPoly::q(-2) + 3, Rational(1, 2)) == 7);
  CHECK(eval(q * q + 5, 0) == 5);
  CHECK(code_of([] { eval(LaurentPoly::q(-1), 0); }) == ErrorCode::eval_at_zero);
}

TEST_CASE("rendering") {
  CHECK(to_string(q * q - 1) == "q^2-1");
  CHECK(to_string(-q + 1) == "-q+1");
  CHECK(to_string(LaurentPoly::q(-1)) == "q^-1");
  CHECK(to_string((q * q - q) * Rational(1, 2)) == "1/2*q^2-1/2*q");
  CHECK(to_string(LaurentPoly()) == "0");
}

TEST_CASE("ring laws on random triples") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = gen.laurent();
    const LaurentPoly b = gen.laurent();
    const LaurentPoly c = gen.laurent();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    const LaurentPoly ab = a * b;
    for (const auto& [e, coefficient] : ab.terms()) CHECK(coefficient != 0);
  }
}

TEST_CASE("exact division inverts multiplication") {
  testing::Gen gen(12);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = gen.laurent(4);
    const LaurentPoly b = gen.nonzero_laurent(3);
    CHECK(exact_div(a * b, b) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  testing::Gen gen(13);
  for (int trial = 0; trial < 200; ++trial) {
    const LaurentPoly a = gen.laurent();
    const LaurentPoly b = gen.laurent();
    const Rational x = gen.nonzero_rational();
    CHECK(eval(a * b, x) == eval(a, x) * eval(b, x));
    CHECK(eval(a + b, x) == eval(a, x) + eval(b, x));
  }
}
