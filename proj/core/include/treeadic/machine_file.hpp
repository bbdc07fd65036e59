#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "treeadic/mealy.hpp"
#include "treeadic/moore.hpp"

namespace treeadic {

/// A parsed machine file of either kind, plus any validation warnings
/// (currently: a Moore machine that is not zero-stable).
struct MachineFile {
  std::variant<MealyMachine, MooreMachine> machine;
  std::vector<std::string> warnings;

  bool is_mealy() const { return std::holds_alternative<MealyMachine>(machine); }
  const MealyMachine& mealy() const;
  const MooreMachine& moore() const;
};

/// Line-oriented format, '#' comments.
///
/// Mealy: header `mealy d=<int> start=<name>`, then per state either
///   `<name>: <digit> -> <state> / <digit> ; ...`   (transition / output per digit)
/// or the wreath sugar
///   `<name> = (<s0>,...,<s_{d-1}>) [o0,...,o_{d-1}]`.
///
/// Moore: header `moore d=<int> start=<name>`, then
///   `<name> [out=<EPWord-literal>]: <digit> -> <state> ; ...`.
///
/// Parse errors carry line/column; semantic errors name the offending state or
/// digit. parse_machine_file(print_machine_file(m)) is structurally equal to m.
MachineFile parse_machine_file(std::string_view text);

std::string print_machine_file(const MealyMachine& m);
std::string print_machine_file(const MooreMachine& m);

/// Moore-diagram DOT: edge labels `x|y` for Mealy, `x` for Moore; Moore nodes show
/// the state name and its output.
std::string render_dot(const MealyMachine& m);
std::string render_dot(const MooreMachine& m);

}  // namespace treeadic
