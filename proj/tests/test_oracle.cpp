#include <doctest.h>

#include <random>

#include "longmul/oracle.hpp"
#include "reference.hpp"

using namespace longmul;

TEST_CASE("oracle_multiply on printed products") {
  CHECK(format_decimal(oracle_multiply(parse_decimal("689"), parse_decimal("997"))) == "686933");
  CHECK(format_decimal(oracle_multiply(parse_decimal("0"), parse_decimal("98414"))) == "0");
  CHECK(format_decimal(oracle_multiply(parse_decimal("99410597"), parse_decimal("89687949"))) ==
        "8915932553795553");
}

TEST_CASE("oracle_multiply identities and agreement with the column reference") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto x = ref::random_numeral(rng, 64), y = ref::random_numeral(rng, 64);
    const auto a = parse_decimal(x), b = parse_decimal(y);
    const DigitVector p = oracle_multiply(a, b);
    REQUIRE(format_decimal(p) == ref::mul(x, y));
    CHECK(p == oracle_multiply(b, a));
    CHECK(oracle_multiply(a, parse_decimal("1")) == a);
    CHECK(oracle_multiply(a, DigitVector{}) == DigitVector{});
  }
}

TEST_CASE("golden_check") {
  SUBCASE("correct build") {
    const GoldenReport r = golden_check();
    REQUIRE(r.results.size() == 8);
    CHECK(r.passed());
    for (const auto& c : r.results) {
      CAPTURE(c.golden.label);
      CHECK(c.main_product == c.golden.expected);
      CHECK(c.oracle_product == c.golden.expected);
    }
  }
  SUBCASE("6-digit sample frozen from the oracle") {
    const auto& cases = golden_cases();
    const auto it = std::find_if(cases.begin(), cases.end(), [](const GoldenCase& g) { return g.left == "594105"; });
    REQUIRE(it != cases.end());
    CHECK(it->expected == "473429798295");
    CHECK(format_decimal(oracle_multiply(parse_decimal("594105"), parse_decimal("796879"))) == it->expected);
  }
  SUBCASE("corrupted table cell is reported") {
    // 9 x 9 occurs in 689 x 997 and 99410597 x 89687949.
    const GoldenReport r = golden_check(MultiplicationTable::build().with_fault(9, 9, 80));
    CHECK_FALSE(r.passed());
    CHECK(r.failures() >= 1);
    for (const auto& c : r.results) CHECK(c.oracle_product == c.golden.expected);
  }
  SUBCASE("every single-cell fault used by the golden set is caught") {
    const auto base = MultiplicationTable::build();
    int caught = 0;
    for (Digit i = 0; i <= 9; ++i)
      for (Digit j = 0; j <= 9; ++j) {
        const int bad = (i * j + 1) % 82;
        if (!golden_check(base.with_fault(i, j, bad)).passed()) ++caught;
      }
    CHECK(caught >= 1);
  }
}
