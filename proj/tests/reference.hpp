#pragma once

// Test-only reference arithmetic on decimal strings. Deliberately shares no
// code with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace ref {

inline std::string strip(std::string s) {
  const auto nz = s.find_first_not_of('0');
  return nz == std::string::npos ? "0" : s.substr(nz);
}

/// Column addition, right to left.
inline std::string add(const std::string& a, const std::string& b) {
  std::string out;
  int carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    const int da = i < a.size() ? a[a.size() - 1 - i] - '0' : 0;
    const int db = i < b.size() ? b[b.size() - 1 - i] - '0' : 0;
    const int s = da + db + carry;
    out.push_back(char('0' + s % 10));
    carry = s / 10;
  }
  if (carry) out.push_back(char('0' + carry));
  std::reverse(out.begin(), out.end());
  return strip(out);
}

/// Column convolution followed by one carry pass.
inline std::string mul(const std::string& a, const std::string& b) {
  std::vector<std::uint64_t> col(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      col[(a.size() - 1 - i) + (b.size() - 1 - j)] += std::uint64_t(a[i] - '0') * std::uint64_t(b[j] - '0');
  std::string out;
  std::uint64_t carry = 0;
  for (std::uint64_t c : col) {
    const std::uint64_t s = c + carry;
    out.push_back(char('0' + s % 10));
    carry = s / 10;
  }
  while (carry) {
    out.push_back(char('0' + carry % 10));
    carry /= 10;
  }
  std::reverse(out.begin(), out.end());
  return strip(out);
}

inline std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

/// Random canonical numeral with 1..max_digits digits; zero appears now and then.
inline std::string random_numeral(std::mt19937_64& rng, std::size_t max_digits) {
  std::uniform_int_distribution<std::size_t> len(1, max_digits);
  std::uniform_int_distribution<int> digit(0, 9);
  std::uniform_int_distribution<int> lead(1, 9);
  if (rng() % 64 == 0) return "0";
  std::string s(len(rng), '0');
  s[0] = char('0' + lead(rng));
  for (std::size_t i = 1; i < s.size(); ++i) s[i] = char('0' + digit(rng));
  return s;
}

}  // namespace ref
