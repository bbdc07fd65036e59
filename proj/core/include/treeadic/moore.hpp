#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treeadic/dadic.hpp"

namespace treeadic {

/// A d-DFAO: deterministic automaton over {0, ..., d-1} with one eventually
/// periodic d-adic output per state. Reading the base-d digits of n (least
/// significant first) and applying the output map to the final state generates a
/// d-automatic sequence of d-adic values.
struct MooreMachine {
  int radix = 2;
  std::vector<std::string> names;
  std::vector<std::vector<int>> next;  // [state][digit] -> state
  std::vector<EPWord> output;          // per-state output, radix matching the machine
  int initial = 0;

  int size() const { return static_cast<int>(names.size()); }
  int state_index(std::string_view name) const;

  /// Shape, ranges, reachability; throws SemanticError.
  void validate() const;

  friend bool operator==(const MooreMachine&, const MooreMachine&) = default;
};

/// Term n of the generated sequence: the output of the state reached from the
/// initial state reading the base-d digits of n (the word "0" for n = 0).
EPWord evaluate(const MooreMachine& m, std::uint64_t n);

/// Term n of the section sequence attached to state q.
EPWord evaluate_from(const MooreMachine& m, int q, std::uint64_t n);

/// The first `count` terms of the generated sequence.
std::vector<EPWord> sequence_prefix(const MooreMachine& m, std::size_t count);

/// True iff the output is invariant under trailing zeros: every reachable state
/// has the same output as its 0-successor (hence as its whole 0-chain).
bool is_zero_stable(const MooreMachine& m);

/// Partition-refinement minimization seeded by outputs; the generated sequence is
/// unchanged.
MooreMachine minimize_moore(const MooreMachine& m);

/// True iff a state bijection preserving initial state, transitions and outputs
/// exists. Intended for minimized machines.
bool moore_isomorphic(const MooreMachine& a, const MooreMachine& b);

}  // namespace treeadic
