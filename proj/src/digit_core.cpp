#include "longmul/digit_core.hpp"

#include <algorithm>

namespace longmul {

DigitVector DigitVector::from_digits(std::vector<Digit> digits) {
  if (digits.empty()) throw ContractViolation("digit vector must hold at least one digit");
  for (Digit d : digits)
    if (d > 9) throw ContractViolation("digit out of range: " + std::to_string(int{d}));
  if (digits.size() > 1 && digits.front() == 0)
    throw ContractViolation("digit vector has a leading zero");
  return DigitVector(Trusted{}, std::move(digits));
}

MultiplicationTable MultiplicationTable::build() {
  MultiplicationTable t;
  for (int i = 0; i <= 9; ++i)
    for (int j = 0; j <= 9; ++j) t.products_[i][j] = static_cast<std::uint8_t>(i * j);
  return t;
}

MultiplicationTable MultiplicationTable::with_fault(Digit i, Digit j, int value) const {
  if (i > 9 || j > 9) throw DomainError("table index out of range");
  if (value < 0 || value > 81) throw DomainError("table value must lie in [0, 81]");
  MultiplicationTable t = *this;
  t.products_[i][j] = static_cast<std::uint8_t>(value);
  return t;
}

bool MultiplicationTable::is_valid() const noexcept {
  for (int i = 0; i <= 9; ++i)
    for (int j = 0; j <= 9; ++j)
      if (products_[i][j] != i * j) return false;
  return true;
}

MultiplicationTable build_table() { return MultiplicationTable::build(); }

PartialProductMatrix::PartialProductMatrix(std::size_t rows, std::size_t width)
    : rows_(rows), width_(width), cells_(rows * width, 0) {
  if (rows == 0 || width < 2) throw ContractViolation("partial-product matrix needs >= 1 row and >= 2 columns");
}

std::span<const Digit> PartialProductMatrix::row(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("partial-product row index");
  return std::span<const Digit>(cells_).subspan(i * width_, width_);
}

std::span<Digit> PartialProductMatrix::row(std::size_t i) {
  if (i >= rows_) throw std::out_of_range("partial-product row index");
  return std::span<Digit>(cells_).subspan(i * width_, width_);
}

DigitVector parse_decimal(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && text.front() == '+') start = 1;
  if (text.size() == start)
    throw ParseError(text.empty() ? "empty numeral" : "sign without digits", start);

  std::vector<Digit> raw;
  raw.reserve(text.size() - start);
  for (std::size_t i = start; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      std::string what = "invalid character at position " + std::to_string(i);
      if (c == '+' || c == '-') what += " (signs are not accepted here)";
      else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') what += " (whitespace)";
      throw ParseError(what, i);
    }
    raw.push_back(static_cast<Digit>(c - '0'));
  }
  return normalize(std::move(raw));
}

std::string format_decimal(std::span<const Digit> digits) {
  if (digits.empty()) throw ContractViolation("cannot format an empty digit sequence");
  if (digits.size() > 1 && digits.front() == 0)
    throw ContractViolation("cannot format a non-canonical digit sequence (leading zero)");
  std::string out;
  out.reserve(digits.size());
  for (Digit d : digits) {
    if (d > 9) throw ContractViolation("cannot format digit " + std::to_string(int{d}));
    out.push_back(static_cast<char>('0' + d));
  }
  return out;
}

std::string format_decimal(const DigitVector& v) { return format_decimal(v.digits()); }

DigitVector normalize(std::vector<Digit> raw) {
  if (raw.empty()) throw ContractViolation("cannot normalize an empty digit sequence");
  for (Digit d : raw)
    if (d > 9) throw DomainError("digit out of range: " + std::to_string(int{d}));
  auto first = std::find_if(raw.begin(), raw.end(), [](Digit d) { return d != 0; });
  if (first == raw.end()) return DigitVector{};
  raw.erase(raw.begin(), first);
  return DigitVector(DigitVector::Trusted{}, std::move(raw));
}

DigitVector shift_pow10(const DigitVector& v, std::size_t k) {
  if (v.is_zero() || k == 0) return v;
  std::vector<Digit> out;
  out.reserve(v.size() + k);
  out.assign(v.digits_.begin(), v.digits_.end());
  out.resize(v.size() + k, 0);
  return DigitVector(DigitVector::Trusted{}, std::move(out));
}

DigitVector add(const DigitVector& x, const DigitVector& y) {
  const auto& lx = x.size() >= y.size() ? x.digits_ : y.digits_;
  const auto& sy = x.size() >= y.size() ? y.digits_ : x.digits_;

  // Built least significant first, reversed at the end.
  std::vector<Digit> out;
  out.reserve(lx.size() + 1);
  int carry = 0;
  auto li = lx.rbegin();
  for (auto si = sy.rbegin(); si != sy.rend(); ++si, ++li) {
    const int s = *li + *si + carry;
    out.push_back(static_cast<Digit>(s % 10));
    carry = s / 10;
  }
  for (; li != lx.rend(); ++li) {
    const int s = *li + carry;
    out.push_back(static_cast<Digit>(s % 10));
    carry = s / 10;
  }
  if (carry != 0) out.push_back(static_cast<Digit>(carry));
  std::reverse(out.begin(), out.end());
  return DigitVector(DigitVector::Trusted{}, std::move(out));
}

namespace {

void fill_row(Digit d, std::span<const Digit> b, const MultiplicationTable& table,
              std::span<Digit> row) {
  int carry = 0;
  for (std::size_t j = b.size(); j-- > 0;) {
    const int t = table.at(d, b[j]) + carry;
    row[j + 1] = static_cast<Digit>(t % 10);
    carry = t / 10;
  }
  row[0] = static_cast<Digit>(carry);
}

const MultiplicationTable& default_table() {
  static const MultiplicationTable table = MultiplicationTable::build();
  return table;
}

}  // namespace

std::vector<Digit> row_multiply(Digit d, const DigitVector& b, const MultiplicationTable& table) {
  if (d > 9) throw DomainError("multiplier digit out of range: " + std::to_string(int{d}));
  std::vector<Digit> row(b.size() + 1, 0);
  fill_row(d, b.digits(), table, row);
  return row;
}

PartialProductMatrix compute_partial_matrix(const DigitVector& a, const DigitVector& b,
                                            const MultiplicationTable& table) {
  PartialProductMatrix m(a.size(), b.size() + 1);
  for (std::size_t i = a.size(); i-- > 0;) fill_row(a[i], b.digits(), table, m.row(i));
  return m;
}

DigitVector row_value(std::span<const Digit> row) {
  if (row.size() < 2) throw ContractViolation("row needs a carry cell and at least one digit cell");
  return normalize(std::vector<Digit>(row.begin(), row.end()));
}

DigitVector multiply(const DigitVector& a, const DigitVector& b) {
  return multiply(a, b, default_table());
}

DigitVector multiply(const DigitVector& a, const DigitVector& b, const MultiplicationTable& table) {
  if (a.is_zero() || b.is_zero()) return DigitVector{};
  const PartialProductMatrix m = compute_partial_matrix(a, b, table);
  DigitVector result;
  for (std::size_t i = 0; i < m.rows(); ++i)
    result = add(result, shift_pow10(row_value(m.row(i)), m.rows() - 1 - i));
  return result;
}

}  // namespace longmul
