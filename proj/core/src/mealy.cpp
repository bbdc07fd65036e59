#include "treeadic/mealy.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

#include "automaton_util.hpp"
#include "treeadic/errors.hpp"
#include "wreath_def.hpp"

namespace treeadic {

int MealyMachine::state_index(std::string_view name) const {
  for (int q = 0; q < size(); ++q)
    if (names[static_cast<std::size_t>(q)] == name) return q;
  throw SemanticError("unknown state '" + std::string(name) + "'");
}

void MealyMachine::validate() const {
  check_radix(radix);
  std::size_t n = names.size();
  if (n == 0) throw SemanticError("machine has no states");
  if (next.size() != n || out.size() != n)
    throw SemanticError("transition/output tables do not match the state count");
  for (std::size_t q = 0; q < n; ++q) {
    if (next[q].size() != static_cast<std::size_t>(radix) ||
        out[q].size() != static_cast<std::size_t>(radix))
      throw SemanticError("state '" + names[q] + "' is missing transitions");
    for (int x = 0; x < radix; ++x) {
      int t = next[q][static_cast<std::size_t>(x)];
      if (t < 0 || t >= static_cast<int>(n))
        throw SemanticError("state '" + names[q] + "' has a dangling transition");
      if (out[q][static_cast<std::size_t>(x)] >= radix)
        throw SemanticError("state '" + names[q] + "' has an output digit out of range");
    }
  }
  if (initial < 0 || initial >= static_cast<int>(n)) throw SemanticError("initial state out of range");

  auto order = detail::reachable_order(static_cast<int>(n), radix, next, initial);
  if (order.size() != n) {
    std::vector<bool> seen(n, false);
    for (int q : order) seen[static_cast<std::size_t>(q)] = true;
    std::string missing;
    for (std::size_t q = 0; q < n; ++q)
      if (!seen[q]) missing += (missing.empty() ? "" : ", ") + names[q];
    throw SemanticError("states unreachable from '" + names[static_cast<std::size_t>(initial)] +
                        "': " + missing);
  }
}

MealyMachine parse_wreath(std::string_view text) {
  // Statements are separated by ';' or newlines; '#' starts a comment.
  std::vector<detail::WreathDef> defs;
  std::size_t line = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    bool at_end = i == text.size();
    if (!at_end && text[i] == '#') {
      std::size_t eol = text.find('\n', i);
      std::string_view stmt = text.substr(start, i - start);
      if (stmt.find_first_not_of(" \t\r") != std::string_view::npos)
        defs.push_back(detail::parse_wreath_def(stmt, line));
      if (eol == std::string_view::npos) {
        start = text.size();
        break;
      }
      i = eol;
      ++line;
      start = i + 1;
      continue;
    }
    if (at_end || text[i] == ';' || text[i] == '\n') {
      std::string_view stmt = text.substr(start, i - start);
      if (stmt.find_first_not_of(" \t\r") != std::string_view::npos)
        defs.push_back(detail::parse_wreath_def(stmt, line));
      if (!at_end && text[i] == '\n') ++line;
      start = i + 1;
    }
  }
  if (defs.empty()) throw ParseError("no state definitions found");

  int radix = static_cast<int>(defs.front().sections.size());
  check_radix(radix);
  std::map<std::string, int> index;
  for (std::size_t q = 0; q < defs.size(); ++q) {
    if (!index.emplace(defs[q].name, static_cast<int>(q)).second)
      throw SemanticError("duplicate definition of state '" + defs[q].name + "'");
  }

  MealyMachine m;
  m.radix = radix;
  m.initial = 0;
  for (const auto& def : defs) {
    if (static_cast<int>(def.sections.size()) != radix)
      throw SemanticError("state '" + def.name + "' lists " +
                          std::to_string(def.sections.size()) + " sections, expected " +
                          std::to_string(radix));
    m.names.push_back(def.name);
    std::vector<int> row;
    for (const std::string& s : def.sections) {
      auto it = index.find(s);
      if (it == index.end())
        throw SemanticError("state '" + def.name + "' references undefined state '" + s + "'");
      row.push_back(it->second);
    }
    m.next.push_back(std::move(row));
    std::vector<Digit> outs;
    if (def.map.empty()) {
      for (int x = 0; x < radix; ++x) outs.push_back(static_cast<Digit>(x));
    } else {
      outs = def.map;
    }
    m.out.push_back(std::move(outs));
  }
  m.validate();
  return m;
}

std::string print_wreath(const MealyMachine& m) {
  std::string s;
  for (int q = 0; q < m.size(); ++q) {
    s += m.names[static_cast<std::size_t>(q)] + " = (";
    for (int x = 0; x < m.radix; ++x) {
      if (x > 0) s += ",";
      s += m.names[static_cast<std::size_t>(m.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)])];
    }
    s += ")";
    bool identity = true;
    for (int x = 0; x < m.radix; ++x)
      identity = identity && m.out[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)] == x;
    if (!identity) {
      s += " [";
      for (int x = 0; x < m.radix; ++x) {
        if (x > 0) s += ",";
        s += digit_char(m.out[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)]);
      }
      s += "]";
    }
    s += "\n";
  }
  return s;
}

namespace {

void check_state(const MealyMachine& m, int q) {
  if (q < 0 || q >= m.size()) throw SemanticError("state index out of range");
}

}  // namespace

Word apply_finite(const MealyMachine& m, int q, const Word& w) {
  check_state(m, q);
  Word result;
  result.reserve(w.size());
  int s = q;
  for (Digit x : w) {
    if (x >= m.radix) throw std::invalid_argument("input digit out of range");
    result.push_back(m.out[static_cast<std::size_t>(s)][x]);
    s = m.next[static_cast<std::size_t>(s)][x];
  }
  return result;
}

EPWord apply_ep(const MealyMachine& m, int q, const EPWord& a) {
  check_state(m, q);
  if (a.radix() != m.radix) throw std::invalid_argument("radix mismatch between machine and input");
  const Word& u = a.preperiod();
  const Word& v = a.period();
  Word emitted;
  emitted.reserve(u.size() + static_cast<std::size_t>(m.size()) * v.size() + 1);
  int s = q;
  for (Digit x : u) {
    emitted.push_back(m.out[static_cast<std::size_t>(s)][x]);
    s = m.next[static_cast<std::size_t>(s)][x];
  }
  // Over the periodic tail the run is driven by (state, phase) pairs, of which
  // there are at most |Q|*|v|; the output repeats once a pair does.
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_visit(static_cast<std::size_t>(m.size()) * v.size(), kUnseen);
  std::size_t phase = 0;
  for (;;) {
    std::size_t key = static_cast<std::size_t>(s) * v.size() + phase;
    if (first_visit[key] != kUnseen) {
      std::size_t split = first_visit[key];
      Word pre(emitted.begin(), emitted.begin() + static_cast<std::ptrdiff_t>(split));
      Word per(emitted.begin() + static_cast<std::ptrdiff_t>(split), emitted.end());
      return EPWord(m.radix, std::move(pre), std::move(per));
    }
    first_visit[key] = emitted.size();
    Digit x = v[phase];
    emitted.push_back(m.out[static_cast<std::size_t>(s)][x]);
    s = m.next[static_cast<std::size_t>(s)][x];
    phase = (phase + 1) % v.size();
  }
}

int section_at(const MealyMachine& m, int q, const Word& w) {
  check_state(m, q);
  int s = q;
  for (Digit x : w) {
    if (x >= m.radix) throw std::invalid_argument("input digit out of range");
    s = m.next[static_cast<std::size_t>(s)][x];
  }
  return s;
}

bool is_invertible(const MealyMachine& m) {
  for (int q = 0; q < m.size(); ++q) {
    std::vector<bool> hit(static_cast<std::size_t>(m.radix), false);
    for (int x = 0; x < m.radix; ++x) {
      Digit y = m.out[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)];
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

MealyMachine minimize_mealy(const MealyMachine& m) {
  int n = m.size();
  std::map<std::vector<Digit>, int> row_ids;
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    auto [it, fresh] = row_ids.emplace(m.out[static_cast<std::size_t>(q)], static_cast<int>(row_ids.size()));
    cls[static_cast<std::size_t>(q)] = it->second;
  }
  cls = detail::refine_partition(n, m.radix, std::move(cls), m.next);

  // One representative per class: the lowest-index member.
  int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> rep(static_cast<std::size_t>(nclasses), -1);
  for (int q = 0; q < n; ++q)
    if (rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] < 0)
      rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] = q;

  // Order the quotient states by BFS from the initial class.
  std::vector<int> position(static_cast<std::size_t>(nclasses), -1);
  std::vector<int> order;
  std::queue<int> queue;
  int start = cls[static_cast<std::size_t>(m.initial)];
  position[static_cast<std::size_t>(start)] = 0;
  order.push_back(start);
  queue.push(start);
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop();
    int r = rep[static_cast<std::size_t>(c)];
    for (int x = 0; x < m.radix; ++x) {
      int t = cls[static_cast<std::size_t>(m.next[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)])];
      if (position[static_cast<std::size_t>(t)] < 0) {
        position[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push(t);
      }
    }
  }

  MealyMachine result;
  result.radix = m.radix;
  result.initial = 0;
  for (int c : order) {
    int r = rep[static_cast<std::size_t>(c)];
    result.names.push_back(m.names[static_cast<std::size_t>(r)]);
    std::vector<int> row;
    for (int x = 0; x < m.radix; ++x) {
      int t = cls[static_cast<std::size_t>(m.next[static_cast<std::size_t>(r)][static_cast<std::size_t>(x)])];
      row.push_back(position[static_cast<std::size_t>(t)]);
    }
    result.next.push_back(std::move(row));
    result.out.push_back(m.out[static_cast<std::size_t>(r)]);
  }
  return result;
}

bool mealy_isomorphic(const MealyMachine& a, const MealyMachine& b) {
  if (a.radix != b.radix || a.size() != b.size()) return false;
  std::vector<int> to_b(static_cast<std::size_t>(a.size()), -1);
  std::vector<int> to_a(static_cast<std::size_t>(b.size()), -1);
  std::queue<std::pair<int, int>> queue;
  to_b[static_cast<std::size_t>(a.initial)] = b.initial;
  to_a[static_cast<std::size_t>(b.initial)] = a.initial;
  queue.emplace(a.initial, b.initial);
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop();
    if (a.out[static_cast<std::size_t>(x)] != b.out[static_cast<std::size_t>(y)]) return false;
    for (int dig = 0; dig < a.radix; ++dig) {
      int xs = a.next[static_cast<std::size_t>(x)][static_cast<std::size_t>(dig)];
      int ys = b.next[static_cast<std::size_t>(y)][static_cast<std::size_t>(dig)];
      if (to_b[static_cast<std::size_t>(xs)] == -1 && to_a[static_cast<std::size_t>(ys)] == -1) {
        to_b[static_cast<std::size_t>(xs)] = ys;
        to_a[static_cast<std::size_t>(ys)] = xs;
        queue.emplace(xs, ys);
      } else if (to_b[static_cast<std::size_t>(xs)] != ys || to_a[static_cast<std::size_t>(ys)] != xs) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace treeadic
