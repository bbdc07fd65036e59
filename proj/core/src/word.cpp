#include "treeadic/word.hpp"

#include <stdexcept>

#include "treeadic/errors.hpp"

namespace treeadic {

void check_radix(int radix) {
  if (radix < kMinRadix || radix > kMaxRadix)
    throw std::invalid_argument("radix must be between 2 and 36, got " + std::to_string(radix));
}

char digit_char(Digit x) {
  return x < 10 ? static_cast<char>('0' + x) : static_cast<char>('a' + (x - 10));
}

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  return -1;
}

Word parse_word(std::string_view text, int radix) {
  check_radix(radix);
  Word w;
  w.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    int v = digit_value(text[i]);
    if (v < 0)
      throw ParseError("invalid digit character '" + std::string(1, text[i]) + "'", 0, i + 1);
    if (v >= radix)
      throw ParseError("digit '" + std::string(1, text[i]) + "' out of range for radix " +
                           std::to_string(radix),
                       0, i + 1);
    w.push_back(static_cast<Digit>(v));
  }
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Digit x : w) s.push_back(digit_char(x));
  return s;
}

std::uint64_t word_value(const Word& w, int radix) {
  std::uint64_t value = 0;
  std::uint64_t power = 1;
  for (Digit x : w) {
    value += power * x;
    power *= static_cast<std::uint64_t>(radix);
  }
  return value;
}

Word base_word(std::uint64_t n, int radix) {
  check_radix(radix);
  Word w;
  do {
    w.push_back(static_cast<Digit>(n % static_cast<std::uint64_t>(radix)));
    n /= static_cast<std::uint64_t>(radix);
  } while (n > 0);
  return w;
}

std::size_t base_length(std::uint64_t n, int radix) {
  std::size_t len = 1;
  while (n >= static_cast<std::uint64_t>(radix)) {
    n /= static_cast<std::uint64_t>(radix);
    ++len;
  }
  return len;
}

}  // namespace treeadic
