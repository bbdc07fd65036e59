#pragma once

// Parser for one wreath-recursion definition `name = (s0,...,s_{d-1}) [o0,...,o_{d-1}]`.
// Shared between parse_wreath and the machine-file reader; not installed.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "treeadic/errors.hpp"
#include "treeadic/word.hpp"

namespace treeadic::detail {

inline bool is_name_char(char c) {
  switch (c) {
    case ' ':
    case '\t':
    case '\r':
    case '\n':
    case ':':
    case ';':
    case '(':
    case ')':
    case '[':
    case ']':
    case '=':
    case ',':
    case '/':
    case '#':
    case '-':
    case '>':
      return false;
    default:
      return true;
  }
}

struct TextCursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 0;

  std::size_t column() const { return pos + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_ws() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (done() || peek() != c)
      throw ParseError(std::string("expected '") + c + "' " + what, line, column());
    ++pos;
  }

  bool consume(char c) {
    skip_ws();
    if (!done() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string name(const char* what) {
    skip_ws();
    std::size_t start = pos;
    while (!done() && is_name_char(peek())) ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, line, column());
    return std::string(text.substr(start, pos - start));
  }

  Digit digit(int radix) {
    skip_ws();
    if (done()) throw ParseError("expected a digit", line, column());
    int v = digit_value(peek());
    if (v < 0)
      throw ParseError("expected a digit, got '" + std::string(1, peek()) + "'", line, column());
    if (v >= radix)
      throw ParseError("digit '" + std::string(1, peek()) + "' out of range for radix " +
                           std::to_string(radix),
                       line, column());
    ++pos;
    return static_cast<Digit>(v);
  }
};

struct WreathDef {
  std::string name;
  std::vector<std::string> sections;
  std::vector<Digit> map;  // empty when the first-level map is omitted (identity)
};

/// `stmt` must hold exactly one definition. When `radix` is 0 the alphabet size is
/// inferred from the section count; otherwise both the section count and the map
/// entries are checked against it.
inline WreathDef parse_wreath_def(std::string_view stmt, std::size_t line, int radix = 0) {
  TextCursor cur{stmt, 0, line};
  WreathDef def;
  def.name = cur.name("state name");
  cur.expect('=', "after state name");
  cur.expect('(', "before section list");
  def.sections.push_back(cur.name("section name"));
  while (cur.consume(',')) def.sections.push_back(cur.name("section name"));
  cur.expect(')', "after section list");
  int d = radix == 0 ? static_cast<int>(def.sections.size()) : radix;
  if (cur.consume('[')) {
    def.map.push_back(cur.digit(d));
    while (cur.consume(',')) def.map.push_back(cur.digit(d));
    cur.expect(']', "after first-level map");
    if (def.map.size() != def.sections.size())
      throw ParseError("first-level map of state '" + def.name + "' lists " +
                           std::to_string(def.map.size()) + " images for " +
                           std::to_string(def.sections.size()) + " sections",
                       line, cur.column());
  }
  cur.skip_ws();
  if (!cur.done())
    throw ParseError("unexpected trailing input '" + std::string(stmt.substr(cur.pos)) + "'", line,
                     cur.column());
  if (radix != 0 && static_cast<int>(def.sections.size()) != radix)
    throw ParseError("state '" + def.name + "' lists " + std::to_string(def.sections.size()) +
                         " sections, expected " + std::to_string(radix),
                     line, 1);
  return def;
}

}  // namespace treeadic::detail
