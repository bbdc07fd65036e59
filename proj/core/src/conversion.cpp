#include "treeadic/conversion.hpp"

#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "treeadic/errors.hpp"
#include "treeadic/vanderput.hpp"

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

std::string vertex_name(const Word& w) { return w.empty() ? "ε" : word_str(w); }

void check_guard(const TerminationGuard& guard, const EPWord& value) {
  Rational r = value.to_rational();
  if (abs(r) > guard.bound)
    throw InternalError("conversion tuple value " + value.str() + " = " + rational_str(r) +
                        " escaped the bound " + rational_str(guard.bound));
  if (guard.denominator_modulus % denominator(r) != 0)
    throw InternalError("conversion tuple value " + value.str() + " = " + rational_str(r) +
                        " has a denominator not dividing " + guard.denominator_modulus.str());
}

}  // namespace

TerminationGuard termination_guard(const MooreMachine& b) {
  TerminationGuard guard;
  for (const EPWord& w : b.output) {
    guard.max_preperiod = std::max(guard.max_preperiod, static_cast<int>(w.preperiod().size()));
    guard.period_lcm = static_cast<int>(
        std::lcm<std::size_t>(static_cast<std::size_t>(guard.period_lcm), w.period().size()));
  }
  guard.bound = Rational(int_pow(b.radix, static_cast<std::size_t>(guard.max_preperiod) + 1) +
                             b.radix - 1,
                         b.radix - 1);
  guard.denominator_modulus = int_pow(b.radix, static_cast<std::size_t>(guard.period_lcm)) - 1;
  return guard;
}

MealyToMooreResult mealy_to_moore(const MealyMachine& m, bool minimize) {
  int d = m.radix;
  CoefficientTable table = build_table(m);

  MealyToMooreResult result;
  std::map<MealyToMooreLabel, int> index;
  std::vector<Word> pending_vertex;
  std::vector<std::vector<int>> next;

  auto intern = [&](MealyToMooreLabel label, const Word& vertex) {
    auto [it, fresh] = index.emplace(std::move(label), static_cast<int>(result.labels.size()));
    if (fresh) {
      result.labels.push_back(it->first);
      result.vertices.push_back(vertex_name(vertex));
      pending_vertex.push_back(vertex);
      next.emplace_back();
    }
    return it->second;
  };

  MealyToMooreLabel start;
  start.section = m.initial;
  for (int y = 0; y < d; ++y) start.tuple.push_back(table.at(m.initial, static_cast<std::uint64_t>(y)));
  intern(std::move(start), {});

  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    MealyToMooreLabel parent = result.labels[i];  // copy: result.labels grows below
    Word vertex = pending_vertex[i];
    next[i].resize(static_cast<std::size_t>(d));
    for (int x = 0; x < d; ++x) {
      MealyToMooreLabel child;
      child.section = m.next[static_cast<std::size_t>(parent.section)][static_cast<std::size_t>(x)];
      child.tuple.reserve(static_cast<std::size_t>(d));
      // Appending 0 to a vertex keeps its index, so the child's own coefficient is
      // the parent's entry x; deeper entries come from the start-up table of the
      // parent's section (indices x + y*d, words of length two).
      child.tuple.push_back(parent.tuple[static_cast<std::size_t>(x)]);
      for (int y = 1; y < d; ++y)
        child.tuple.push_back(table.at(parent.section,
                                       static_cast<std::uint64_t>(x) +
                                           static_cast<std::uint64_t>(y) * static_cast<std::uint64_t>(d)));
      Word child_vertex = vertex;
      child_vertex.push_back(static_cast<Digit>(x));
      next[i][static_cast<std::size_t>(x)] = intern(std::move(child), child_vertex);
    }
  }

  MooreMachine automaton;
  automaton.radix = d;
  automaton.initial = 0;
  automaton.names = result.vertices;
  automaton.next = std::move(next);
  for (const auto& label : result.labels) automaton.output.push_back(label.tuple[0]);

  result.machine = minimize ? minimize_moore(automaton) : std::move(automaton);
  return result;
}

MooreToMealyResult moore_to_mealy(const MooreMachine& b, bool minimize) {
  if (!is_zero_stable(b))
    throw NotZeroStableError(
        "input Moore machine is not zero-stable: its sequence is not well defined over "
        "trailing zeros");
  int d = b.radix;

  MooreToMealyResult result;
  result.guard = termination_guard(b);
  std::map<MooreToMealyLabel, int> index;
  std::vector<Word> pending_vertex;
  std::vector<std::vector<int>> next;

  auto intern = [&](MooreToMealyLabel label, const Word& vertex) {
    for (const EPWord& value : label.tuple) check_guard(result.guard, value);
    auto [it, fresh] = index.emplace(std::move(label), static_cast<int>(result.labels.size()));
    if (fresh) {
      result.labels.push_back(it->first);
      result.vertices.push_back(vertex_name(vertex));
      pending_vertex.push_back(vertex);
      next.emplace_back();
    }
    return it->second;
  };

  MooreToMealyLabel start;
  start.kernel_state = b.initial;
  for (int i = 0; i < d; ++i) start.tuple.push_back(evaluate(b, static_cast<std::uint64_t>(i)));
  intern(std::move(start), {});

  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    MooreToMealyLabel parent = result.labels[i];
    Word vertex = pending_vertex[i];
    next[i].resize(static_cast<std::size_t>(d));
    for (int x = 0; x < d; ++x) {
      MooreToMealyLabel child;
      child.kernel_state =
          b.next[static_cast<std::size_t>(parent.kernel_state)][static_cast<std::size_t>(x)];
      EPWord shifted = parent.tuple[static_cast<std::size_t>(x)].shift();
      child.tuple.reserve(static_cast<std::size_t>(d));
      child.tuple.push_back(shifted);
      // Section recursion: entries 0 < i < d are the section's tail coefficients
      // (read off the kernel state) plus the shifted head.
      for (int i2 = 1; i2 < d; ++i2)
        child.tuple.push_back(add(evaluate_from(b, parent.kernel_state,
                                                static_cast<std::uint64_t>(x) +
                                                    static_cast<std::uint64_t>(i2) *
                                                        static_cast<std::uint64_t>(d)),
                                  shifted));
      Word child_vertex = vertex;
      child_vertex.push_back(static_cast<Digit>(x));
      next[i][static_cast<std::size_t>(x)] = intern(std::move(child), child_vertex);
    }
  }

  MealyMachine automaton;
  automaton.radix = d;
  automaton.initial = 0;
  automaton.names = result.vertices;
  automaton.next = std::move(next);
  for (const auto& label : result.labels) {
    std::vector<Digit> row;
    for (int x = 0; x < d; ++x) row.push_back(label.tuple[static_cast<std::size_t>(x)].first_digit());
    automaton.out.push_back(std::move(row));
  }

  result.machine = minimize ? minimize_mealy(automaton) : std::move(automaton);
  return result;
}

namespace {

template <typename Machine>
LabeledDigraph graph_of(const Machine& m) {
  LabeledDigraph g;
  g.nodes = m.names;
  for (int q = 0; q < m.size(); ++q)
    for (int x = 0; x < m.radix; ++x)
      g.edges.push_back({q, static_cast<Digit>(x),
                         m.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)]});
  return g;
}

}  // namespace

LabeledDigraph underlying_graph(const MealyMachine& m) { return graph_of(m); }
LabeledDigraph underlying_graph(const MooreMachine& m) { return graph_of(m); }

bool verify_covering(const LabeledDigraph& big, const LabeledDigraph& small,
                     const std::vector<int>& projection) {
  if (projection.size() != big.nodes.size()) return false;
  std::vector<bool> node_hit(small.nodes.size(), false);
  for (int img : projection) {
    if (img < 0 || static_cast<std::size_t>(img) >= small.nodes.size()) return false;
    node_hit[static_cast<std::size_t>(img)] = true;
  }
  for (bool hit : node_hit)
    if (!hit) return false;

  std::set<LabeledDigraph::Edge> small_edges(small.edges.begin(), small.edges.end());
  std::set<LabeledDigraph::Edge> edge_hit;
  for (const auto& e : big.edges) {
    LabeledDigraph::Edge image{projection[static_cast<std::size_t>(e.from)], e.label,
                               projection[static_cast<std::size_t>(e.to)]};
    if (!small_edges.contains(image)) return false;
    edge_hit.insert(image);
  }
  return edge_hit.size() == small_edges.size();
}

std::string covering_witness(const LabeledDigraph& big, const LabeledDigraph& small,
                             const std::vector<int>& projection) {
  std::string out;
  for (std::size_t q = 0; q < big.nodes.size(); ++q)
    out += big.nodes[q] + " -> " + small.nodes[static_cast<std::size_t>(projection[q])] + "\n";
  return out;
}

std::string render_dot(const LabeledDigraph& g) {
  std::string out = "digraph machine {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto& name : g.nodes) out += "  \"" + name + "\";\n";
  for (const auto& e : g.edges)
    out += "  \"" + g.nodes[static_cast<std::size_t>(e.from)] + "\" -> \"" +
           g.nodes[static_cast<std::size_t>(e.to)] + "\" [label=\"" + digit_char(e.label) + "\"];\n";
  out += "}\n";
  return out;
}

bool roundtrip_check(const MealyMachine& m) {
  MealyToMooreResult forward = mealy_to_moore(m);
  MooreToMealyResult back = moore_to_mealy(forward.machine);
  return mealy_isomorphic(minimize_mealy(back.machine), minimize_mealy(m));
}

}  // namespace treeadic
