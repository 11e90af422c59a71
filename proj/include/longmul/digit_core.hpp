#pragma once

// Decimal digit vectors and the table-driven schoolbook multiplier.
//
// A product a x b is formed the way it is done on paper: every digit of `a`
// multiplies all of `b` through a 10x10 lookup table, producing one row of a
// partial-product matrix (a carry cell followed by len(b) digit cells). Each
// row is read back as an integer, shifted by a power of ten according to the
// position of its digit in `a`, and the shifted rows are summed. All shifts
// and sums are exact digit operations, so operand length is unbounded.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace longmul {

using Digit = std::uint8_t;

/// Malformed decimal numeral. `position()` is the 0-based offset of the
/// offending character (or 0 for an empty string).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A digit outside [0, 9], or a table value outside [0, 81].
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller handed in a value that breaks an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Non-negative integer as base-10 digits, most significant first. Always
/// canonical: no leading zeros, and zero is the single digit [0].
class DigitVector {
 public:
  /// Canonical zero.
  DigitVector() : digits_{0} {}

  /// Checked construction from digits that must already be canonical.
  static DigitVector from_digits(std::vector<Digit> digits);

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const noexcept { return digits_[i]; }
  bool is_zero() const noexcept { return digits_.size() == 1 && digits_[0] == 0; }

  friend bool operator==(const DigitVector&, const DigitVector&) = default;

 private:
  struct Trusted {};
  DigitVector(Trusted, std::vector<Digit> digits) : digits_(std::move(digits)) {}

  std::vector<Digit> digits_;

  friend DigitVector normalize(std::vector<Digit> raw);
  friend DigitVector shift_pow10(const DigitVector& v, std::size_t k);
  friend DigitVector add(const DigitVector& x, const DigitVector& y);
};

/// Single-digit products, cell (i, j) = i * j. The only source of digit
/// products used by the multiplier.
class MultiplicationTable {
 public:
  /// The correct 10x10 table.
  static MultiplicationTable build();

  /// Copy of this table with one cell replaced. For fault-injection tests;
  /// `value` must stay in [0, 81] so row carries remain single digits.
  MultiplicationTable with_fault(Digit i, Digit j, int value) const;

  int at(Digit i, Digit j) const noexcept { return products_[i][j]; }

  /// True iff every cell holds i * j.
  bool is_valid() const noexcept;

  friend bool operator==(const MultiplicationTable&, const MultiplicationTable&) = default;

 private:
  MultiplicationTable() = default;
  std::array<std::array<std::uint8_t, 10>, 10> products_{};
};

/// Shorthand for MultiplicationTable::build().
MultiplicationTable build_table();

/// One row per digit of the first operand; each row is a carry cell
/// followed by one cell per digit of the second operand.
class PartialProductMatrix {
 public:
  PartialProductMatrix(std::size_t rows, std::size_t width);

  std::size_t rows() const noexcept { return rows_; }
  /// Cells per row: 1 + len(b).
  std::size_t width() const noexcept { return width_; }

  std::span<const Digit> row(std::size_t i) const;
  std::span<Digit> row(std::size_t i);
  Digit carry(std::size_t i) const { return row(i)[0]; }

 private:
  std::size_t rows_;
  std::size_t width_;
  std::vector<Digit> cells_;
};

/// Parses ASCII decimal digits, with an optional single leading '+'.
/// Leading zeros are stripped. Throws ParseError.
DigitVector parse_decimal(std::string_view text);

/// Renders a canonical digit sequence. Throws ContractViolation if the
/// sequence is empty, has a leading zero, or holds a non-digit.
std::string format_decimal(std::span<const Digit> digits);
std::string format_decimal(const DigitVector& v);

/// Strips leading zeros. Throws DomainError on an element > 9 and
/// ContractViolation on an empty sequence.
DigitVector normalize(std::vector<Digit> raw);

/// v * 10^k by appending k zeros; zero stays zero.
DigitVector shift_pow10(const DigitVector& v, std::size_t k);

/// Exact x + y.
DigitVector add(const DigitVector& x, const DigitVector& y);

/// d * b as one partial-product row, scanning b right to left with a
/// running carry. Cell 0 holds the final carry.
std::vector<Digit> row_multiply(Digit d, const DigitVector& b, const MultiplicationTable& table);

PartialProductMatrix compute_partial_matrix(const DigitVector& a, const DigitVector& b,
                                            const MultiplicationTable& table);

/// Integer value of a row: the carry cell followed by the digit cells.
DigitVector row_value(std::span<const Digit> row);

/// Exact a * b through the partial-product matrix.
DigitVector multiply(const DigitVector& a, const DigitVector& b);
DigitVector multiply(const DigitVector& a, const DigitVector& b, const MultiplicationTable& table);

}  // namespace longmul
