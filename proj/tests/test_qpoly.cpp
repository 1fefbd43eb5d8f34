#include "klq/qpoly.hpp"

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "klq/perm.hpp"

using klq::QPoly;

TEST_CASE("arithmetic") {
  const QPoly a = QPoly::parse("1 + q");
  const QPoly b = QPoly::parse("1 + 3q + q^2");
  CHECK(a * b == QPoly::parse("1 + 4q + 4q^2 + q^3"));
  CHECK(QPoly::one().shift(4) == QPoly::q_power(4));
  CHECK((QPoly::parse("1 + q").shift(4)).coeff(5) == 1);
  CHECK(a + QPoly() == a);
  CHECK((a - a).is_zero());
  CHECK(QPoly().degree() == -1);
}

TEST_CASE("parse and display") {
  const char* printed[] = {
      "1 + q",
      "1 + 3q + q^2",
      "1 + 4q + 4q^2 + q^3",
      "1 + 7q + 19q^2 + 26q^3 + 17q^4 + 4q^5",
      "1 + 14q + 92q^2 + 365q^3 + 931q^4 + 1536q^5 + 1610q^6 + 1039q^7 + 387q^8 + 72q^9 + 5q^10",
      "1 + 12q + 67q^2 + 226q^3 + 501q^4 + 755q^5 + 776q^6 + 533q^7 + 231q^8 + 56q^9 + 5q^10",
  };
  for (const char* s : printed) CHECK(QPoly::parse(s).str() == s);
  CHECK(QPoly::parse("0").is_zero());
  CHECK(QPoly::parse("0").str() == "0");
  CHECK(QPoly::parse("q^4 + q^5") == QPoly::parse("1 + q").shift(4));
  CHECK(QPoly::parse("2q - q").str() == "q");
  CHECK_THROWS_AS(QPoly::parse("1 + + q"), klq::parse_error);
  CHECK_THROWS_AS(QPoly::parse("q^"), klq::parse_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 5);
  const auto random_poly = [&] {
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return QPoly(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const QPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("overflow aborts loudly") {
  const QPoly huge(std::int64_t{1} << 62);
  CHECK_THROWS_AS(huge * huge, std::overflow_error);
  CHECK_THROWS_AS(huge + huge + huge, std::overflow_error);
}
