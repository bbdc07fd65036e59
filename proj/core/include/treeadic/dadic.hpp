#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <set>
#include <string>
#include <string_view>

#include "treeadic/word.hpp"

namespace treeadic {

using Int = boost::multiprecision::cpp_int;

/// Exact rational with denominator coprime to the working radix; the image of an
/// eventually periodic d-adic integer under the inverse digit embedding.
using Rational = boost::multiprecision::cpp_rational;

/// An eventually periodic d-adic integer u·v^inf: the digit stream consists of the
/// preperiod u followed by the period v repeated forever, little-endian (position k
/// holds the coefficient of d^k).
///
/// Values are always kept canonical: the period has minimal length and the preperiod
/// is as short as possible, so two EPWords denote the same d-adic integer exactly
/// when they compare equal. The textual literal is `u(v)`, e.g. `10(1)` for the
/// 2-adic stream 1,0,1,1,1,... (the integer -3).
class EPWord {
 public:
  /// Canonicalizes u·v^inf. Throws std::invalid_argument on an empty period or a
  /// digit out of range.
  EPWord(int radix, Word preperiod, Word period);

  static EPWord zero(int radix) { return EPWord(radix, {}, {0}); }

  /// The embedding of a nonnegative integer: its base-d digits followed by zeros.
  static EPWord from_integer(std::uint64_t n, int radix);

  /// Inverse of to_rational. Requires gcd(denominator, radix) = 1; computed by
  /// iterating x -> (x - (x mod d)) / d and detecting the repeating remainder.
  static EPWord from_rational(const Rational& q, int radix);

  /// Parses the literal `u(v)`.
  static EPWord parse(std::string_view text, int radix);

  int radix() const { return radix_; }
  const Word& preperiod() const { return preperiod_; }
  const Word& period() const { return period_; }

  /// Digit at stream position k.
  Digit digit_at(std::size_t k) const;

  /// The value mod d: digit at position 0.
  Digit first_digit() const { return digit_at(0); }

  /// Rational value: ubar + vbar * d^|u| / (1 - d^|v|), in lowest terms.
  Rational to_rational() const;

  /// Drops the first digit (the map a -> (a - (a mod d)) / d).
  EPWord shift() const;

  /// Division by d^k. Throws NotDivisibleError if any of the k low digits is nonzero.
  EPWord div_power(std::size_t k) const;

  /// Multiplication by d^k (prepends k zero digits).
  EPWord mul_power(std::size_t k) const;

  std::string str() const;

  bool is_zero() const { return preperiod_.empty() && period_.size() == 1 && period_[0] == 0; }

  friend bool operator==(const EPWord& a, const EPWord& b) = default;
  friend bool operator<(const EPWord& a, const EPWord& b);

  /// Exact digitwise sum/difference with carry; both operands must share a radix.
  friend EPWord add(const EPWord& a, const EPWord& b);
  friend EPWord sub(const EPWord& a, const EPWord& b);

 private:
  int radix_;
  Word preperiod_;
  Word period_;
};

/// First digit of the digit stream of a rational with denominator coprime to d.
Digit rational_first_digit(const Rational& q, int radix);

/// The shift map on rationals: (q - (q mod d)) / d.
Rational rational_shift(const Rational& q, int radix);

/// Values of all streams u·v^inf with |u| = l and |v| = m:
/// { i + j*d^l/(1 - d^m) : 0 <= i < d^l, 0 <= j < d^m }, a subset of [-d^l, d^l - 1].
std::set<Rational> preperiodic_values(int l, int m, int radix);

/// Bound (d^(l+1) + d - 1) / (d - 1) on the shift-add closure of preperiodic_values.
Rational closure_bound(int l, int m, int radix);

/// Least set containing preperiodic_values(l, m, d) and closed under
/// x, p -> shift(x) + p for p in preperiodic_values(l, m, d). Every element stays
/// within closure_bound and keeps a denominator dividing d^m - 1; a violation
/// throws InternalError.
std::set<Rational> shift_add_closure(int l, int m, int radix);

/// Parses `n` or `n/m` in base 10 with optional sign.
Rational parse_rational(std::string_view text);

std::string rational_str(const Rational& q);

}  // namespace treeadic
