#include "longmul/oracle.hpp"

#include <algorithm>

namespace longmul {

DigitVector oracle_multiply(const DigitVector& a, const DigitVector& b) {
  DigitVector acc;
  for (Digit d : b.digits()) {
    acc = shift_pow10(acc, 1);
    for (Digit k = 0; k < d; ++k) acc = add(acc, a);
  }
  return acc;
}

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"3-digit x 3-digit", "689", "997", "686933"},
      {"4-digit x 4-digit", "9247", "9019", "83398693"},
      {"5-digit x 5-digit", "10231", "48199", "493123969"},
      {"3-digit x 4-digit", "987", "8765", "8651055"},
      {"3-digit x 5-digit", "761", "98414", "74893054"},
      {"4-digit x 5-digit", "3812", "18520", "70598240"},
      {"8-digit x 8-digit", "99410597", "89687949", "8915932553795553"},
      {"6-digit sample arrays", "594105", "796879", "473429798295"},
  };
  return cases;
}

std::size_t GoldenReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const GoldenResult& r) { return !r.passed; }));
}

GoldenReport golden_check() { return golden_check(MultiplicationTable::build()); }

GoldenReport golden_check(const MultiplicationTable& table) {
  GoldenReport report;
  for (const GoldenCase& g : golden_cases()) {
    const DigitVector a = parse_decimal(g.left);
    const DigitVector b = parse_decimal(g.right);
    GoldenResult r{g, format_decimal(multiply(a, b, table)), format_decimal(oracle_multiply(a, b)), false};
    r.passed = r.main_product == g.expected && r.oracle_product == g.expected;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace longmul
