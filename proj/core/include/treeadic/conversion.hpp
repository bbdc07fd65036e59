#pragma once

#include <string>
#include <vector>

#include "treeadic/dadic.hpp"
#include "treeadic/mealy.hpp"
#include "treeadic/moore.hpp"

namespace treeadic {

/// BFS label of the Mealy-to-Moore construction: the section state reached by the
/// generating vertex together with the d coefficients of the vertex's children.
/// tuple[0] is the coefficient at the vertex itself (appending 0 keeps the index).
struct MealyToMooreLabel {
  int section = 0;
  std::vector<EPWord> tuple;

  friend bool operator==(const MealyToMooreLabel&, const MealyToMooreLabel&) = default;
  friend bool operator<(const MealyToMooreLabel& a, const MealyToMooreLabel& b) {
    if (a.section != b.section) return a.section < b.section;
    return a.tuple < b.tuple;
  }
};

/// BFS label of the Moore-to-Mealy construction: the kernel state (the Moore state
/// generating the section's tail) together with the first d coefficients of the
/// section's endomorphism.
struct MooreToMealyLabel {
  int kernel_state = 0;
  std::vector<EPWord> tuple;

  friend bool operator==(const MooreToMealyLabel&, const MooreToMealyLabel&) = default;
  friend bool operator<(const MooreToMealyLabel& a, const MooreToMealyLabel& b) {
    if (a.kernel_state != b.kernel_state) return a.kernel_state < b.kernel_state;
    return a.tuple < b.tuple;
  }
};

/// Transition digraph of either machine kind: one node per state and one
/// digit-labelled edge per transition (out-degree exactly d).
struct LabeledDigraph {
  struct Edge {
    int from;
    Digit label;
    int to;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  std::vector<std::string> nodes;
  std::vector<Edge> edges;
};

/// Runtime bound justifying termination of moore_to_mealy: over outputs with
/// preperiod length <= l and period length dividing m, every tuple value stays in
/// [-bound, bound] with a denominator dividing d^m - 1.
struct TerminationGuard {
  int max_preperiod = 0;     // l
  int period_lcm = 1;        // m
  Rational bound;            // (d^(l+1) + d - 1) / (d - 1)
  Int denominator_modulus;   // d^m - 1
};

TerminationGuard termination_guard(const MooreMachine& b);

struct MealyToMooreResult {
  /// The requested machine: the label automaton, minimized when asked.
  MooreMachine machine;
  /// BFS labels of the (unminimized) label automaton, parallel to its states.
  std::vector<MealyToMooreLabel> labels;
  /// Vertex word that first discovered each label ("ε", "0", "1", "01", ...).
  std::vector<std::string> vertices;
};

/// Builds the Moore automaton generating the reduced van der Put coefficient
/// sequence of the endomorphism given by m's initial state. The BFS explores
/// labels in digit order; a child at digit x inherits tuple[0] from the parent's
/// entry x and takes the remaining entries from the start-up table of the parent's
/// section. Output of a label is its tuple[0]. The result is zero-stable.
MealyToMooreResult mealy_to_moore(const MealyMachine& m, bool minimize = false);

struct MooreToMealyResult {
  /// The requested machine: the label automaton, minimized when asked.
  MealyMachine machine;
  std::vector<MooreToMealyLabel> labels;
  std::vector<std::string> vertices;
  TerminationGuard guard;
};

/// Builds a Mealy automaton whose endomorphism has b's generated sequence as its
/// reduced van der Put coefficients. Requires is_zero_stable(b); throws
/// NotZeroStableError otherwise. A child at digit x has tuple[0] = shift(t[x]) and
/// tuple[i] = evaluate_from(b, parent_kernel, x + i*d) + shift(t[x]); the output at
/// (label, x) is the first digit of t[x]. Every tuple value is checked against the
/// termination guard; a violation throws InternalError.
MooreToMealyResult moore_to_mealy(const MooreMachine& b, bool minimize = false);

LabeledDigraph underlying_graph(const MealyMachine& m);
LabeledDigraph underlying_graph(const MooreMachine& m);

/// True iff `projection` (big node -> small node) is surjective on nodes, maps
/// every big edge onto a small edge with the same digit, and hits every small edge.
bool verify_covering(const LabeledDigraph& big, const LabeledDigraph& small,
                     const std::vector<int>& projection);

/// Audit text for a projection: one `big-state -> small-state` line per node.
std::string covering_witness(const LabeledDigraph& big, const LabeledDigraph& small,
                             const std::vector<int>& projection);

std::string render_dot(const LabeledDigraph& g);

/// minimize(moore_to_mealy(mealy_to_moore(m))) is isomorphic to minimize(m).
bool roundtrip_check(const MealyMachine& m);

}  // namespace treeadic
