#include "treeadic/vanderput.hpp"

#include <stdexcept>
#include <utility>

#include "treeadic/errors.hpp"

namespace treeadic {

std::uint64_t drop_top_digit(std::uint64_t n, int radix) {
  check_radix(radix);
  if (n == 0) throw std::invalid_argument("drop_top_digit is undefined for n = 0");
  std::uint64_t top = 1;
  while (n / top >= static_cast<std::uint64_t>(radix)) top *= static_cast<std::uint64_t>(radix);
  return n - (n / top) * top;
}

EPWord vdp_coefficient(const MealyMachine& m, int q, std::uint64_t n, Variant variant) {
  int d = m.radix;
  auto image = [&](std::uint64_t k) {
    return apply_ep(m, q, EPWord(d, base_word(k, d), {0}));
  };
  if (variant == Variant::mahler && n < static_cast<std::uint64_t>(d)) return image(n);
  if (variant == Variant::schikhof && n == 0) return image(0);
  std::uint64_t ancestor = drop_top_digit(n, d);
  return sub(image(n), image(ancestor)).div_power(base_length(n, d) - 1);
}

const EPWord& CoefficientTable::at(int state, std::uint64_t n) const {
  if (state < 0 || static_cast<std::size_t>(state) >= entries.size())
    throw SemanticError("state index out of range");
  std::uint64_t limit = static_cast<std::uint64_t>(radix) * static_cast<std::uint64_t>(radix);
  if (n >= limit) throw std::invalid_argument("coefficient table holds indices below d^2 only");
  return entries[static_cast<std::size_t>(state)][static_cast<std::size_t>(n)];
}

CoefficientTable build_table(const MealyMachine& m) {
  CoefficientTable table;
  table.radix = m.radix;
  std::uint64_t limit = static_cast<std::uint64_t>(m.radix) * static_cast<std::uint64_t>(m.radix);
  table.entries.reserve(static_cast<std::size_t>(m.size()));
  for (int q = 0; q < m.size(); ++q) {
    std::vector<EPWord> row;
    row.reserve(static_cast<std::size_t>(limit));
    for (std::uint64_t n = 0; n < limit; ++n) row.push_back(vdp_coefficient(m, q, n));
    table.entries.push_back(std::move(row));
  }
  return table;
}

EPWord section_coefficient(const MealyMachine& m, int q, Digit x, std::uint64_t n) {
  if (x >= m.radix) throw std::invalid_argument("digit out of range");
  std::uint64_t d = static_cast<std::uint64_t>(m.radix);
  if (n == 0) return vdp_coefficient(m, q, x).shift();
  if (n < d) return add(vdp_coefficient(m, q, x + n * d), vdp_coefficient(m, q, x).shift());
  return vdp_coefficient(m, q, x + n * d);
}

EPWord schikhof_section_coefficient(const MealyMachine& m, int q, Digit x, std::uint64_t n) {
  if (x >= m.radix) throw std::invalid_argument("digit out of range");
  std::uint64_t d = static_cast<std::uint64_t>(m.radix);
  if (n == 0) {
    if (x == 0) return vdp_coefficient(m, q, 0, Variant::schikhof).shift();
    // b~_x + b_0 = (g(x·0^inf) - g(0^inf)) + g(0^inf) = g(x·0^inf)
    return add(vdp_coefficient(m, q, x, Variant::schikhof), vdp_coefficient(m, q, 0)).shift();
  }
  return vdp_coefficient(m, q, x + n * d, Variant::schikhof);
}

CoefficientSource coefficients_of(const MealyMachine& m, int q, Variant variant) {
  if (q < 0 || q >= m.size()) throw SemanticError("state index out of range");
  return [m, q, variant](std::uint64_t n) { return vdp_coefficient(m, q, n, variant); };
}

CoefficientSource coefficients_of(const MooreMachine& m) {
  return [m](std::uint64_t n) { return evaluate(m, n); };
}

CoefficientSource coefficients_of(std::vector<EPWord> list) {
  if (list.empty()) throw std::invalid_argument("coefficient list must be nonempty");
  return [list = std::move(list)](std::uint64_t n) {
    return n < list.size() ? list[static_cast<std::size_t>(n)] : list.back();
  };
}

Word evaluate_series(const CoefficientSource& coeffs, int radix, const EPWord& x, std::size_t k) {
  check_radix(radix);
  if (x.radix() != radix) throw std::invalid_argument("radix mismatch between point and series");
  // Of the n < d^k, only those whose base-d word is a prefix of x contribute: one
  // candidate per prefix length, kept when the prefix is a valid vertex numbering
  // (last digit nonzero, or the one-letter word "0").
  EPWord total = EPWord::zero(radix);
  std::uint64_t nbar = 0;
  std::uint64_t power = 1;
  for (std::size_t len = 1; len <= k; ++len) {
    Digit dig = x.digit_at(len - 1);
    nbar += power * dig;
    if (dig != 0 || len == 1) total = add(total, coeffs(nbar).mul_power(len - 1));
    power *= static_cast<std::uint64_t>(radix);
  }
  Word result(k);
  for (std::size_t i = 0; i < k; ++i) result[i] = total.digit_at(i);
  return result;
}

Portrait portrait_of(const CoefficientSource& coeffs, int radix, std::size_t depth) {
  check_radix(radix);
  if (depth < 1) throw std::invalid_argument("portrait depth must be at least 1");
  Portrait p;
  p.radix = radix;
  p.depth = depth;
  std::uint64_t limit = 1;
  for (std::size_t i = 0; i < depth; ++i) limit *= static_cast<std::uint64_t>(radix);
  for (std::uint64_t n = 0; n < limit; ++n) p.labels.emplace(base_word(n, radix), coeffs(n));
  return p;
}

namespace {

void render_text_vertex(const Portrait& p, const Word& w, std::string& out) {
  out.append(2 * w.size(), ' ');
  out += w.empty() ? "ε" : word_str(w);
  out += ": ";
  auto it = p.labels.find(w);
  out += it == p.labels.end() ? "·" : it->second.str();
  out += "\n";
  if (w.size() < p.depth) {
    Word child = w;
    child.push_back(0);
    for (int x = 0; x < p.radix; ++x) {
      child.back() = static_cast<Digit>(x);
      render_text_vertex(p, child, out);
    }
  }
}

void render_dot_vertex(const Portrait& p, const Word& w, std::string& out) {
  std::string id = w.empty() ? "ε" : word_str(w);
  auto it = p.labels.find(w);
  out += "  \"" + id + "\" [label=\"" + (it == p.labels.end() ? "" : it->second.str()) + "\"];\n";
  if (w.size() < p.depth) {
    Word child = w;
    child.push_back(0);
    for (int x = 0; x < p.radix; ++x) {
      child.back() = static_cast<Digit>(x);
      out += "  \"" + id + "\" -> \"" + word_str(child) + "\" [label=\"" +
             digit_char(static_cast<Digit>(x)) + "\"];\n";
      render_dot_vertex(p, child, out);
    }
  }
}

}  // namespace

std::string render_portrait(const Portrait& p, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::text) {
    render_text_vertex(p, {}, out);
    return out;
  }
  out += "digraph portrait {\n  node [shape=circle];\n";
  render_dot_vertex(p, {}, out);
  out += "}\n";
  return out;
}

}  // namespace treeadic
