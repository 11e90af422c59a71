#pragma once

// Reference multiplier for differential testing. It never touches the
// multiplication table or the partial-product matrix: the product is built
// by a most-significant-first scan of `b` where each digit d contributes d
// repeated additions of `a` into a shifted accumulator.

#include <string>
#include <vector>

#include "longmul/digit_core.hpp"

namespace longmul {

DigitVector oracle_multiply(const DigitVector& a, const DigitVector& b);

struct GoldenCase {
  std::string label;
  std::string left;
  std::string right;
  std::string expected;
};

/// The eight reference products: six worked examples of mixed shape, one
/// 8x8-digit product, and the 6x6-digit sample operands 594105 x 796879.
const std::vector<GoldenCase>& golden_cases();

struct GoldenResult {
  GoldenCase golden;
  std::string main_product;
  std::string oracle_product;
  bool passed = false;
};

struct GoldenReport {
  std::vector<GoldenResult> results;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Runs `multiply` (with the given table) and `oracle_multiply` on every
/// golden case. Mismatches are report entries, not exceptions.
GoldenReport golden_check();
GoldenReport golden_check(const MultiplicationTable& table);

}  // namespace longmul
