#include "treeadic/machine_file.hpp"

#include <map>
#include <optional>
#include <utility>

#include "treeadic/errors.hpp"
#include "wreath_def.hpp"

namespace treeadic {

const MealyMachine& MachineFile::mealy() const {
  if (!is_mealy()) throw SemanticError("expected a Mealy machine file");
  return std::get<MealyMachine>(machine);
}

const MooreMachine& MachineFile::moore() const {
  if (is_mealy()) throw SemanticError("expected a Moore machine file");
  return std::get<MooreMachine>(machine);
}

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i, ++number) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) lines.push_back({line, number});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

struct Header {
  bool mealy;
  int radix;
  std::string start;
};

Header parse_header(const Line& line) {
  detail::TextCursor cur{line.text, 0, line.number};
  std::string kind = cur.name("machine kind ('mealy' or 'moore')");
  if (kind != "mealy" && kind != "moore")
    throw ParseError("expected header to start with 'mealy' or 'moore', got '" + kind + "'",
                     line.number, 1);
  Header header;
  header.mealy = kind == "mealy";
  std::string key = cur.name("'d'");
  if (key != "d") throw ParseError("expected 'd=<int>' in header", line.number, cur.column());
  cur.expect('=', "after 'd'");
  cur.skip_ws();
  std::size_t start = cur.pos;
  while (!cur.done() && cur.peek() >= '0' && cur.peek() <= '9') ++cur.pos;
  if (cur.pos == start) throw ParseError("expected a radix after 'd='", line.number, cur.column());
  header.radix = std::stoi(std::string(line.text.substr(start, cur.pos - start)));
  check_radix(header.radix);
  key = cur.name("'start'");
  if (key != "start") throw ParseError("expected 'start=<name>' in header", line.number, cur.column());
  cur.expect('=', "after 'start'");
  header.start = cur.name("initial state name");
  cur.skip_ws();
  if (!cur.done()) throw ParseError("unexpected trailing input in header", line.number, cur.column());
  return header;
}

std::string defined_name(const Line& line) {
  detail::TextCursor cur{line.text, 0, line.number};
  return cur.name("state name");
}

int resolve(const std::map<std::string, int>& index, const std::string& name,
            const std::string& in_state) {
  auto it = index.find(name);
  if (it == index.end())
    throw SemanticError("state '" + in_state + "' references undefined state '" + name + "'");
  return it->second;
}

/// `<digit> -> <state> [/ <digit>]` items separated by ';'. Fills one row of the
/// transition table (and output table when with_output).
template <typename PerDigit>
void parse_transition_list(detail::TextCursor& cur, int radix, const std::string& state,
                           PerDigit per_digit) {
  std::vector<bool> defined(static_cast<std::size_t>(radix), false);
  for (;;) {
    Digit x = cur.digit(radix);
    if (defined[x])
      throw SemanticError("state '" + state + "' defines digit " +
                          std::string(1, digit_char(x)) + " twice");
    defined[x] = true;
    cur.expect('-', "in '->'");
    cur.expect('>', "in '->'");
    std::string target = cur.name("target state");
    per_digit(x, target, cur);
    if (!cur.consume(';')) break;
  }
  cur.skip_ws();
  if (!cur.done())
    throw ParseError("unexpected trailing input '" + std::string(cur.text.substr(cur.pos)) + "'",
                     cur.line, cur.column());
  for (int x = 0; x < radix; ++x)
    if (!defined[static_cast<std::size_t>(x)])
      throw SemanticError("state '" + state + "' is missing a transition for digit " +
                          std::string(1, digit_char(static_cast<Digit>(x))));
}

MealyMachine parse_mealy_body(const Header& header, const std::vector<Line>& lines) {
  std::map<std::string, int> index;
  std::vector<std::string> names;
  for (const Line& line : lines) {
    std::string name = defined_name(line);
    if (!index.emplace(name, static_cast<int>(names.size())).second)
      throw SemanticError("duplicate definition of state '" + name + "'");
    names.push_back(name);
  }

  MealyMachine m;
  m.radix = header.radix;
  m.names = names;
  m.next.assign(names.size(), {});
  m.out.assign(names.size(), {});

  for (const Line& line : lines) {
    detail::TextCursor cur{line.text, 0, line.number};
    std::string name = cur.name("state name");
    int q = index.at(name);
    cur.skip_ws();
    if (!cur.done() && cur.peek() == '=') {
      auto def = detail::parse_wreath_def(line.text, line.number, header.radix);
      std::vector<int> row;
      for (const std::string& s : def.sections) row.push_back(resolve(index, s, name));
      m.next[static_cast<std::size_t>(q)] = std::move(row);
      if (def.map.empty()) {
        for (int x = 0; x < header.radix; ++x)
          m.out[static_cast<std::size_t>(q)].push_back(static_cast<Digit>(x));
      } else {
        m.out[static_cast<std::size_t>(q)] = def.map;
      }
      continue;
    }
    cur.expect(':', "after state name");
    m.next[static_cast<std::size_t>(q)].assign(static_cast<std::size_t>(header.radix), 0);
    m.out[static_cast<std::size_t>(q)].assign(static_cast<std::size_t>(header.radix), 0);
    parse_transition_list(cur, header.radix, name,
                          [&](Digit x, const std::string& target, detail::TextCursor& c) {
                            c.expect('/', "before the output digit");
                            Digit y = c.digit(header.radix);
                            m.next[static_cast<std::size_t>(q)][x] = resolve(index, target, name);
                            m.out[static_cast<std::size_t>(q)][x] = y;
                          });
  }
  m.initial = resolve(index, header.start, header.start);
  m.validate();
  return m;
}

MooreMachine parse_moore_body(const Header& header, const std::vector<Line>& lines) {
  std::map<std::string, int> index;
  std::vector<std::string> names;
  for (const Line& line : lines) {
    std::string name = defined_name(line);
    if (!index.emplace(name, static_cast<int>(names.size())).second)
      throw SemanticError("duplicate definition of state '" + name + "'");
    names.push_back(name);
  }

  MooreMachine m;
  m.radix = header.radix;
  m.names = names;
  m.next.assign(names.size(), {});

  for (const Line& line : lines) {
    detail::TextCursor cur{line.text, 0, line.number};
    std::string name = cur.name("state name");
    int q = index.at(name);
    cur.expect('[', "before the output");
    std::string key = cur.name("'out'");
    if (key != "out") throw ParseError("expected 'out=' in state line", line.number, cur.column());
    cur.expect('=', "after 'out'");
    cur.skip_ws();
    std::size_t close = line.text.find(']', cur.pos);
    if (close == std::string_view::npos)
      throw ParseError("expected ']' after the output literal", line.number, cur.column());
    std::string_view literal = line.text.substr(cur.pos, close - cur.pos);
    EPWord value = [&] {
      try {
        return EPWord::parse(literal, header.radix);
      } catch (const ParseError& e) {
        throw ParseError(std::string("in output of state '") + name + "': " + e.what(),
                         line.number, cur.column());
      }
    }();
    // Lines were indexed in order, so q always equals the number of outputs so far.
    m.output.push_back(value);
    cur.pos = close + 1;
    cur.expect(':', "after the output");
    m.next[static_cast<std::size_t>(q)].assign(static_cast<std::size_t>(header.radix), 0);
    parse_transition_list(cur, header.radix, name,
                          [&](Digit x, const std::string& target, detail::TextCursor&) {
                            m.next[static_cast<std::size_t>(q)][x] = resolve(index, target, name);
                          });
  }
  m.initial = resolve(index, header.start, header.start);
  m.validate();
  return m;
}

}  // namespace

MachineFile parse_machine_file(std::string_view text) {
  std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty machine file");
  Header header = parse_header(lines.front());
  std::vector<Line> body(lines.begin() + 1, lines.end());
  if (body.empty()) throw ParseError("machine file defines no states", lines.front().number, 1);

  MachineFile file;
  if (header.mealy) {
    file.machine = parse_mealy_body(header, body);
  } else {
    MooreMachine m = parse_moore_body(header, body);
    if (!is_zero_stable(m))
      file.warnings.push_back(
          "machine is not zero-stable: its sequence is not well defined over trailing zeros");
    file.machine = std::move(m);
  }
  return file;
}

std::string print_machine_file(const MealyMachine& m) {
  std::string out = "mealy d=" + std::to_string(m.radix) + " start=" +
                    m.names[static_cast<std::size_t>(m.initial)] + "\n";
  std::string wreath = print_wreath(m);
  std::size_t start = 0;
  while (start < wreath.size()) {
    std::size_t end = wreath.find('\n', start);
    if (end == std::string::npos) end = wreath.size();
    out += "# wreath: " + wreath.substr(start, end - start) + "\n";
    start = end + 1;
  }
  for (int q = 0; q < m.size(); ++q) {
    out += m.names[static_cast<std::size_t>(q)] + ":";
    for (int x = 0; x < m.radix; ++x) {
      out += x == 0 ? " " : " ; ";
      out += std::string(1, digit_char(static_cast<Digit>(x))) + " -> " +
             m.names[static_cast<std::size_t>(m.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)])] +
             " / " + digit_char(m.out[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)]);
    }
    out += "\n";
  }
  return out;
}

std::string print_machine_file(const MooreMachine& m) {
  std::string out = "moore d=" + std::to_string(m.radix) + " start=" +
                    m.names[static_cast<std::size_t>(m.initial)] + "\n";
  for (int q = 0; q < m.size(); ++q) {
    out += m.names[static_cast<std::size_t>(q)] + " [out=" +
           m.output[static_cast<std::size_t>(q)].str() + "]:";
    for (int x = 0; x < m.radix; ++x) {
      out += x == 0 ? " " : " ; ";
      out += std::string(1, digit_char(static_cast<Digit>(x))) + " -> " +
             m.names[static_cast<std::size_t>(m.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)])];
    }
    out += "\n";
  }
  return out;
}

namespace {

std::string dot_header(const std::string& initial) {
  return "digraph machine {\n  rankdir=LR;\n  node [shape=circle];\n  __start [shape=none, label=\"\"];\n  __start -> \"" +
         initial + "\";\n";
}

}  // namespace

std::string render_dot(const MealyMachine& m) {
  std::string out = dot_header(m.names[static_cast<std::size_t>(m.initial)]);
  for (const std::string& name : m.names) out += "  \"" + name + "\";\n";
  for (int q = 0; q < m.size(); ++q)
    for (int x = 0; x < m.radix; ++x) {
      out += "  \"" + m.names[static_cast<std::size_t>(q)] + "\" -> \"" +
             m.names[static_cast<std::size_t>(m.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)])] +
             "\" [label=\"" + digit_char(static_cast<Digit>(x)) + "|" +
             digit_char(m.out[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)]) + "\"];\n";
    }
  out += "}\n";
  return out;
}

std::string render_dot(const MooreMachine& m) {
  std::string out = dot_header(m.names[static_cast<std::size_t>(m.initial)]);
  for (int q = 0; q < m.size(); ++q)
    out += "  \"" + m.names[static_cast<std::size_t>(q)] + "\" [label=\"" +
           m.names[static_cast<std::size_t>(q)] + "\\n" +
           m.output[static_cast<std::size_t>(q)].str() + "\"];\n";
  for (int q = 0; q < m.size(); ++q)
    for (int x = 0; x < m.radix; ++x)
      out += "  \"" + m.names[static_cast<std::size_t>(q)] + "\" -> \"" +
             m.names[static_cast<std::size_t>(m.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)])] +
             "\" [label=\"" + digit_char(static_cast<Digit>(x)) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace treeadic
