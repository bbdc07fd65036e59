#include "treeadic/dadic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "treeadic/errors.hpp"

namespace treeadic {

namespace {

Int int_pow(int base, std::size_t exp) {
  Int result = 1;
  Int b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

// cpp_rational rejects negative denominators outright; fix the sign first.
Rational make_rational(Int num, Int den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

int mod_inverse(int a, int m) {
  // extended Euclid; gcd(a, m) must be 1
  int old_r = a % m, r = m;
  int old_s = 1, s = 0;
  while (r != 0) {
    int q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1 && old_r != -1) throw std::invalid_argument("denominator shares a factor with the radix");
  int inv = old_r == 1 ? old_s : -old_s;
  return ((inv % m) + m) % m;
}

}  // namespace

EPWord::EPWord(int radix, Word preperiod, Word period)
    : radix_(radix), preperiod_(std::move(preperiod)), period_(std::move(period)) {
  check_radix(radix_);
  if (period_.empty()) throw std::invalid_argument("period must be nonempty");
  for (Digit x : preperiod_)
    if (x >= radix_) throw std::invalid_argument("preperiod digit out of range");
  for (Digit x : period_)
    if (x >= radix_) throw std::invalid_argument("period digit out of range");

  // Minimal period: smallest divisor p of |v| with v[i] == v[i mod p].
  for (std::size_t p = 1; p < period_.size(); ++p) {
    if (period_.size() % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < period_.size() && periodic; ++i)
      periodic = period_[i] == period_[i % p];
    if (periodic) {
      period_.resize(p);
      break;
    }
  }
  // Minimal preperiod: absorb trailing preperiod digits that match the stream one
  // period earlier, rotating the period to keep the tail aligned.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
}

EPWord EPWord::from_integer(std::uint64_t n, int radix) {
  return EPWord(radix, base_word(n, radix), {0});
}

EPWord EPWord::from_rational(const Rational& q, int radix) {
  check_radix(radix);
  if (boost::multiprecision::gcd(denominator(q), Int(radix)) != 1)
    throw std::invalid_argument("denominator of " + rational_str(q) +
                                " shares a factor with radix " + std::to_string(radix));
  std::map<Rational, std::size_t> seen;
  Word digits;
  Rational x = q;
  for (;;) {
    auto [it, fresh] = seen.emplace(x, digits.size());
    if (!fresh) {
      std::size_t start = it->second;
      Word pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(start));
      Word per(digits.begin() + static_cast<std::ptrdiff_t>(start), digits.end());
      return EPWord(radix, std::move(pre), std::move(per));
    }
    Digit digit = rational_first_digit(x, radix);
    digits.push_back(digit);
    x = (x - digit) / radix;
  }
}

EPWord EPWord::parse(std::string_view text, int radix) {
  auto open = text.find('(');
  if (open == std::string_view::npos)
    throw ParseError("expected '(' in eventually periodic literal '" + std::string(text) + "'");
  auto close = text.find(')', open);
  if (close == std::string_view::npos || close != text.size() - 1)
    throw ParseError("expected literal to end with ')': '" + std::string(text) + "'");
  if (close == open + 1)
    throw ParseError("period must be nonempty in '" + std::string(text) + "'");
  Word pre = parse_word(text.substr(0, open), radix);
  Word per = parse_word(text.substr(open + 1, close - open - 1), radix);
  return EPWord(radix, std::move(pre), std::move(per));
}

Digit EPWord::digit_at(std::size_t k) const {
  if (k < preperiod_.size()) return preperiod_[k];
  return period_[(k - preperiod_.size()) % period_.size()];
}

Rational EPWord::to_rational() const {
  Int ubar = 0;
  Int power = 1;
  for (Digit x : preperiod_) {
    ubar += power * x;
    power *= radix_;
  }
  Int vbar = 0;
  Int vpower = 1;
  for (Digit x : period_) {
    vbar += vpower * x;
    vpower *= radix_;
  }
  // power = d^|u|, vpower = d^|v|
  Int den = 1 - vpower;
  return make_rational(ubar * den + vbar * power, den);
}

EPWord EPWord::shift() const {
  if (!preperiod_.empty()) return EPWord(radix_, Word(preperiod_.begin() + 1, preperiod_.end()), period_);
  Word rotated(period_.begin() + 1, period_.end());
  rotated.push_back(period_.front());
  return EPWord(radix_, {}, std::move(rotated));
}

EPWord EPWord::div_power(std::size_t k) const {
  for (std::size_t j = 0; j < k; ++j)
    if (digit_at(j) != 0)
      throw NotDivisibleError("value " + str() + " is not divisible by " +
                              std::to_string(radix_) + "^" + std::to_string(k) +
                              " (digit " + std::to_string(j) + " is nonzero)");
  if (k <= preperiod_.size())
    return EPWord(radix_, Word(preperiod_.begin() + static_cast<std::ptrdiff_t>(k), preperiod_.end()),
                  period_);
  std::size_t r = (k - preperiod_.size()) % period_.size();
  Word rotated(period_.begin() + static_cast<std::ptrdiff_t>(r), period_.end());
  rotated.insert(rotated.end(), period_.begin(), period_.begin() + static_cast<std::ptrdiff_t>(r));
  return EPWord(radix_, {}, std::move(rotated));
}

EPWord EPWord::mul_power(std::size_t k) const {
  Word pre(k, 0);
  pre.insert(pre.end(), preperiod_.begin(), preperiod_.end());
  return EPWord(radix_, std::move(pre), period_);
}

std::string EPWord::str() const {
  return word_str(preperiod_) + "(" + word_str(period_) + ")";
}

bool operator<(const EPWord& a, const EPWord& b) {
  if (a.radix_ != b.radix_) return a.radix_ < b.radix_;
  if (a.preperiod_ != b.preperiod_) return a.preperiod_ < b.preperiod_;
  return a.period_ < b.period_;
}

namespace {

// Digitwise a +/- b. Aligns both operands to a common preperiod length and period
// length, runs the carry over the preperiod and then over one period; if the carry
// entering the period does not reproduce itself the preperiod is extended by one
// period and the pass repeats (at most one extension is ever needed, see the cap).
EPWord add_sub(const EPWord& a, const EPWord& b, bool subtract) {
  if (a.radix() != b.radix())
    throw std::invalid_argument("radix mismatch: " + std::to_string(a.radix()) + " vs " +
                                std::to_string(b.radix()));
  int d = a.radix();
  std::size_t pre_len = std::max(a.preperiod().size(), b.preperiod().size());
  std::size_t per_len = std::lcm(a.period().size(), b.period().size());

  for (int attempt = 0; attempt < 4; ++attempt) {
    Word pre(pre_len), per(per_len);
    int carry = 0;
    auto step = [&](std::size_t k) {
      int t = subtract ? static_cast<int>(a.digit_at(k)) - static_cast<int>(b.digit_at(k)) - carry
                       : static_cast<int>(a.digit_at(k)) + static_cast<int>(b.digit_at(k)) + carry;
      if (subtract) {
        carry = t < 0 ? 1 : 0;
        if (t < 0) t += d;
      } else {
        carry = t >= d ? 1 : 0;
        if (t >= d) t -= d;
      }
      return static_cast<Digit>(t);
    };
    for (std::size_t k = 0; k < pre_len; ++k) pre[k] = step(k);
    int entering = carry;
    for (std::size_t k = 0; k < per_len; ++k) per[k] = step(pre_len + k);
    if (carry == entering) return EPWord(d, std::move(pre), std::move(per));
    pre_len += per_len;
  }
  throw InternalError("carry failed to stabilize in add/sub");
}

}  // namespace

EPWord add(const EPWord& a, const EPWord& b) { return add_sub(a, b, false); }
EPWord sub(const EPWord& a, const EPWord& b) { return add_sub(a, b, true); }

Digit rational_first_digit(const Rational& q, int radix) {
  check_radix(radix);
  Int num = numerator(q) % radix;
  Int den = denominator(q) % radix;
  int n = static_cast<int>(num);
  int m = static_cast<int>(den);
  n = ((n % radix) + radix) % radix;
  return static_cast<Digit>((n * mod_inverse(m, radix)) % radix);
}

Rational rational_shift(const Rational& q, int radix) {
  return (q - rational_first_digit(q, radix)) / radix;
}

std::set<Rational> preperiodic_values(int l, int m, int radix) {
  check_radix(radix);
  if (l < 0 || m < 1) throw std::invalid_argument("need l >= 0 and m >= 1");
  Int dl = int_pow(radix, static_cast<std::size_t>(l));
  Int dm = int_pow(radix, static_cast<std::size_t>(m));
  std::set<Rational> values;
  for (Int i = 0; i < dl; ++i)
    for (Int j = 0; j < dm; ++j) values.insert(Rational(i) + make_rational(j * dl, 1 - dm));
  return values;
}

Rational closure_bound(int l, int m, int radix) {
  (void)m;
  return Rational(int_pow(radix, static_cast<std::size_t>(l) + 1) + radix - 1, radix - 1);
}

std::set<Rational> shift_add_closure(int l, int m, int radix) {
  std::set<Rational> base = preperiodic_values(l, m, radix);
  Rational bound = closure_bound(l, m, radix);
  Int modulus = int_pow(radix, static_cast<std::size_t>(m)) - 1;
  auto admit = [&](const Rational& x) {
    if (abs(x) > bound)
      throw InternalError("shift-add closure escaped its bound: " + rational_str(x));
    if (modulus % denominator(x) != 0)
      throw InternalError("shift-add closure produced a foreign denominator: " + rational_str(x));
  };
  for (const Rational& x : base) admit(x);

  std::set<Rational> total = base;
  std::deque<Rational> work(base.begin(), base.end());
  while (!work.empty()) {
    Rational shifted = rational_shift(work.front(), radix);
    work.pop_front();
    for (const Rational& p : base) {
      Rational next = shifted + p;
      admit(next);
      if (total.insert(next).second) work.push_back(next);
    }
  }
  return total;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(Int(std::string(text)));
    Int num(std::string(text.substr(0, slash)));
    Int den(std::string(text.substr(slash + 1)));
    return make_rational(std::move(num), std::move(den));
  } catch (const std::exception&) {
    throw ParseError("invalid rational literal '" + std::string(text) + "'");
  }
}

std::string rational_str(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

}  // namespace treeadic
