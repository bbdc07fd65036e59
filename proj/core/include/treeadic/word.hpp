#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace treeadic {

/// A single digit in {0, ..., d-1}. Rendered 0-9 then a-z, so d <= 36.
using Digit = std::uint8_t;

/// A finite digit word, little-endian: position k holds the coefficient of d^k.
using Word = std::vector<Digit>;

inline constexpr int kMinRadix = 2;
inline constexpr int kMaxRadix = 36;

/// Throws std::invalid_argument unless kMinRadix <= d <= kMaxRadix.
void check_radix(int radix);

char digit_char(Digit x);

/// Value of a digit character, or -1 if the character is not a digit.
int digit_value(char c);

/// Parses a digit string; throws ParseError on a bad character or a digit >= radix.
Word parse_word(std::string_view text, int radix);

std::string word_str(const Word& w);

/// The numeric value of w read in base `radix` (trailing zeros allowed).
std::uint64_t word_value(const Word& w, int radix);

/// Base-radix expansion of n, least significant digit first; base_word(0) is the word "0".
Word base_word(std::uint64_t n, int radix);

/// Number of digits of base_word(n, radix); equals floor(log_radix n) + 1 for n >= 1.
std::size_t base_length(std::uint64_t n, int radix);

}  // namespace treeadic
