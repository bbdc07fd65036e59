#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treeadic/dadic.hpp"
#include "treeadic/word.hpp"

namespace treeadic {

/// A Mealy automaton over the alphabet {0, ..., d-1} acting on the rooted d-ary
/// tree: each initial state induces an endomorphism (a 1-Lipschitz self-map of the
/// d-adic integers). Transition and output are total, every state is reachable from
/// the initial one, and machines are immutable once validated.
struct MealyMachine {
  int radix = 2;
  std::vector<std::string> names;
  std::vector<std::vector<int>> next;  // [state][digit] -> state
  std::vector<std::vector<Digit>> out; // [state][digit] -> digit
  int initial = 0;

  int size() const { return static_cast<int>(names.size()); }

  /// Index of a named state; throws SemanticError if absent.
  int state_index(std::string_view name) const;

  /// Checks shape, digit ranges, and reachability from the initial state;
  /// unreachable states are reported by name. Throws SemanticError.
  void validate() const;

  friend bool operator==(const MealyMachine&, const MealyMachine&) = default;
};

/// Parses a wreath recursion such as `p = (p,q) [1,0]; q = (p,q)`. Sections are
/// listed in digit order; the bracketed image list gives the first-level map and
/// may be omitted for the identity. Statements are separated by ';' or newlines;
/// the first defined state is the initial one. The alphabet size is the section
/// count, which must be uniform.
MealyMachine parse_wreath(std::string_view text);

/// Inverse of parse_wreath up to isomorphism; one state per line, identity maps omitted.
std::string print_wreath(const MealyMachine& m);

/// Runs the machine from state q over a finite word; the output has equal length.
Word apply_finite(const MealyMachine& m, int q, const Word& w);

/// Exact image of an eventually periodic point under the endomorphism of state q.
/// The result's preperiod is at most |u| + |Q|*|v| and its period at most |Q|*|v|.
EPWord apply_ep(const MealyMachine& m, int q, const EPWord& a);

/// The state reached from q reading w (the section of q's endomorphism at vertex w).
int section_at(const MealyMachine& m, int q, const Word& w);

/// True iff every state's output row is a permutation of the alphabet.
bool is_invertible(const MealyMachine& m);

/// Partition-refinement minimization seeded by output rows. The result realizes the
/// same transformation from its initial state with the fewest states.
MealyMachine minimize_mealy(const MealyMachine& m);

/// True iff a state bijection preserving initial state, transitions and outputs
/// exists. Intended for minimized machines.
bool mealy_isomorphic(const MealyMachine& a, const MealyMachine& b);

}  // namespace treeadic
