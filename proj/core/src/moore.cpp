#include "treeadic/moore.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <utility>

#include "automaton_util.hpp"
#include "treeadic/errors.hpp"

namespace treeadic {

int MooreMachine::state_index(std::string_view name) const {
  for (int q = 0; q < size(); ++q)
    if (names[static_cast<std::size_t>(q)] == name) return q;
  throw SemanticError("unknown state '" + std::string(name) + "'");
}

void MooreMachine::validate() const {
  check_radix(radix);
  std::size_t n = names.size();
  if (n == 0) throw SemanticError("machine has no states");
  if (next.size() != n || output.size() != n)
    throw SemanticError("transition/output tables do not match the state count");
  for (std::size_t q = 0; q < n; ++q) {
    if (next[q].size() != static_cast<std::size_t>(radix))
      throw SemanticError("state '" + names[q] + "' is missing transitions");
    for (int x = 0; x < radix; ++x) {
      int t = next[q][static_cast<std::size_t>(x)];
      if (t < 0 || t >= static_cast<int>(n))
        throw SemanticError("state '" + names[q] + "' has a dangling transition");
    }
    if (output[q].radix() != radix)
      throw SemanticError("output of state '" + names[q] + "' has a foreign radix");
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

EPWord evaluate(const MooreMachine& m, std::uint64_t n) { return evaluate_from(m, m.initial, n); }

EPWord evaluate_from(const MooreMachine& m, int q, std::uint64_t n) {
  if (q < 0 || q >= m.size()) throw SemanticError("state index out of range");
  int s = q;
  for (Digit x : base_word(n, m.radix)) s = m.next[static_cast<std::size_t>(s)][x];
  return m.output[static_cast<std::size_t>(s)];
}

std::vector<EPWord> sequence_prefix(const MooreMachine& m, std::size_t count) {
  std::vector<EPWord> terms;
  terms.reserve(count);
  for (std::size_t n = 0; n < count; ++n) terms.push_back(evaluate(m, n));
  return terms;
}

bool is_zero_stable(const MooreMachine& m) {
  for (int q : detail::reachable_order(m.size(), m.radix, m.next, m.initial)) {
    int t = m.next[static_cast<std::size_t>(q)][0];
    if (!(m.output[static_cast<std::size_t>(t)] == m.output[static_cast<std::size_t>(q)]))
      return false;
  }
  return true;
}

MooreMachine minimize_moore(const MooreMachine& m) {
  int n = m.size();
  std::map<EPWord, int> out_ids;
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    auto [it, fresh] =
        out_ids.emplace(m.output[static_cast<std::size_t>(q)], static_cast<int>(out_ids.size()));
    cls[static_cast<std::size_t>(q)] = it->second;
  }
  cls = detail::refine_partition(n, m.radix, std::move(cls), m.next);

  int nclasses = *std::max_element(cls.begin(), cls.end()) + 1;
  std::vector<int> rep(static_cast<std::size_t>(nclasses), -1);
  for (int q = 0; q < n; ++q)
    if (rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] < 0)
      rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] = q;

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

  MooreMachine result;
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
    result.output.push_back(m.output[static_cast<std::size_t>(r)]);
  }
  return result;
}

bool moore_isomorphic(const MooreMachine& a, const MooreMachine& b) {
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
    if (!(a.output[static_cast<std::size_t>(x)] == b.output[static_cast<std::size_t>(y)])) return false;
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
