#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "treeadic/dadic.hpp"
#include "treeadic/mealy.hpp"
#include "treeadic/moore.hpp"

namespace treeadic {

/// The two numbering conventions for the index 0: `mahler` reads it as the
/// one-letter word "0" (the default throughout), `schikhof` as the empty word.
/// They produce the same coefficients from index d on.
enum class Variant { mahler, schikhof };

enum class OutputFormat { text, dot };

/// n with its most significant base-d digit removed (the label of the nearest
/// labelled ancestor in the tree). Undefined for n = 0, which is rejected.
std::uint64_t drop_top_digit(std::uint64_t n, int radix);

/// Reduced van der Put coefficient b_n of the endomorphism given by state q.
///
/// Mahler: b_n = g(n·0^inf) for n < d, otherwise
/// (g(n·0^inf) - g(n_·0^inf)) / d^(len(n)-1) where len(n) is the base-d digit count.
/// Schikhof: the same difference formula for every n >= 1 and b~_0 = g(0^inf);
/// coefficients agree with Mahler's from index d on.
EPWord vdp_coefficient(const MealyMachine& m, int q, std::uint64_t n,
                       Variant variant = Variant::mahler);

/// The start-up table of both conversions: the first d^2 Mahler coefficients of
/// every state's endomorphism.
struct CoefficientTable {
  int radix = 2;
  std::vector<std::vector<EPWord>> entries;  // [state][n], n < d^2

  const EPWord& at(int state, std::uint64_t n) const;
};

CoefficientTable build_table(const MealyMachine& m);

/// Coefficient b_n of the section at digit x, computed from the coefficients of
/// state q by the three-case recursion
///   n = 0:       shift(b_x)
///   0 < n < d:   b_{x+nd} + shift(b_x)
///   n >= d:      b_{x+nd};
/// equals vdp_coefficient(m, next(q, x), n).
EPWord section_coefficient(const MealyMachine& m, int q, Digit x, std::uint64_t n);

/// Schikhof analogue of section_coefficient:
///   n = 0, x = 0:     shift(b~_0)
///   n = 0, 0 < x < d: shift(b~_x + b_0)   (= shift of g(x·0^inf))
///   n >= 1:           b~_{x+nd};
/// equals vdp_coefficient(m, next(q, x), n, schikhof).
EPWord schikhof_section_coefficient(const MealyMachine& m, int q, Digit x, std::uint64_t n);

/// A total coefficient sequence n -> b_n; portraits and series evaluation accept
/// machines, Moore machines, or stored lists through this one interface.
using CoefficientSource = std::function<EPWord(std::uint64_t)>;

CoefficientSource coefficients_of(const MealyMachine& m, int q, Variant variant = Variant::mahler);
CoefficientSource coefficients_of(const MooreMachine& m);
CoefficientSource coefficients_of(std::vector<EPWord> list);  // repeats the last entry beyond it

/// Partial sum of the van der Put series sum_n b_n d^(len(n)-1) chi_n(x) over
/// n < d^k, where chi_n(x) = 1 iff the base-d word of n is a prefix of x's digit
/// stream. Returns the first k digits, which for the coefficients of an
/// endomorphism are the first k digits of its image of x.
Word evaluate_series(const CoefficientSource& coeffs, int radix, const EPWord& x, std::size_t k);

/// Tree labelling of a coefficient sequence: vertex "0" and every word of length
/// <= depth ending in a nonzero digit carry the coefficient at their index.
struct Portrait {
  int radix = 2;
  std::size_t depth = 1;
  std::map<Word, EPWord> labels;
};

Portrait portrait_of(const CoefficientSource& coeffs, int radix, std::size_t depth);

/// text: one vertex per line, indented, `vertex-word: label-or-·`.
/// dot: the tree with labelled nodes; unlabelled vertices are blank.
std::string render_portrait(const Portrait& p, OutputFormat format);

}  // namespace treeadic
