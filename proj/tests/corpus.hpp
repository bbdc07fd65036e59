#pragma once

// Machines and generators shared by the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "treeadic/treeadic.hpp"

namespace corpus {

using namespace treeadic;

inline MealyMachine lamplighter() { return parse_wreath("p = (p,q) [1,0]; q = (p,q)"); }

inline MealyMachine identity_machine() { return parse_wreath("e = (e,e)"); }

inline MealyMachine thue_morse_endomorphism() { return parse_wreath("t = (t,s); s = (s,t) [0,0]"); }

inline MealyMachine constant_zero_endomorphism() { return parse_wreath("c = (c,c) [0,0]"); }

inline MooreMachine thue_morse_dfao() {
  MooreMachine m;
  m.radix = 2;
  m.names = {"a", "b"};
  m.next = {{0, 1}, {1, 0}};
  m.output = {EPWord::zero(2), EPWord(2, {1}, {0})};
  m.initial = 0;
  m.validate();
  return m;
}

/// Two states generating 0,1,1,1,...: the coefficient sequence of the identity map.
inline MooreMachine identity_coefficient_dfao() {
  MooreMachine m;
  m.radix = 2;
  m.names = {"z", "o"};
  m.next = {{0, 1}, {1, 1}};
  m.output = {EPWord::zero(2), EPWord(2, {1}, {0})};
  m.initial = 0;
  m.validate();
  return m;
}

inline MooreMachine constant_zero_dfao() {
  MooreMachine m;
  m.radix = 2;
  m.names = {"z"};
  m.next = {{0, 0}};
  m.output = {EPWord::zero(2)};
  m.initial = 0;
  m.validate();
  return m;
}

/// Uniform pick without relying on distribution internals, for stable streams.
inline std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

/// Random Mealy machine restricted to its reachable part; at most max_states states.
inline MealyMachine random_mealy(std::mt19937_64& rng, int radix, int max_states) {
  int n = 1 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_states)));
  std::vector<std::vector<int>> next(static_cast<std::size_t>(n));
  std::vector<std::vector<Digit>> out(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    for (int x = 0; x < radix; ++x) {
      next[static_cast<std::size_t>(q)].push_back(
          static_cast<int>(pick(rng, static_cast<std::uint64_t>(n))));
      out[static_cast<std::size_t>(q)].push_back(
          static_cast<Digit>(pick(rng, static_cast<std::uint64_t>(radix))));
    }

  std::vector<int> order;
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  order.push_back(0);
  position[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int x = 0; x < radix; ++x) {
      int t = next[static_cast<std::size_t>(order[i])][static_cast<std::size_t>(x)];
      if (position[static_cast<std::size_t>(t)] < 0) {
        position[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }

  MealyMachine m;
  m.radix = radix;
  m.initial = 0;
  for (int q : order) {
    m.names.push_back("s" + std::to_string(m.names.size()));
    std::vector<int> row;
    for (int x = 0; x < radix; ++x)
      row.push_back(position[static_cast<std::size_t>(
          next[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)])]);
    m.next.push_back(std::move(row));
    m.out.push_back(out[static_cast<std::size_t>(q)]);
  }
  m.validate();
  return m;
}

inline EPWord random_epword(std::mt19937_64& rng, int radix, int max_pre = 4, int max_per = 4) {
  Word pre(pick(rng, static_cast<std::uint64_t>(max_pre) + 1));
  Word per(1 + pick(rng, static_cast<std::uint64_t>(max_per)));
  for (Digit& x : pre) x = static_cast<Digit>(pick(rng, static_cast<std::uint64_t>(radix)));
  for (Digit& x : per) x = static_cast<Digit>(pick(rng, static_cast<std::uint64_t>(radix)));
  return EPWord(radix, std::move(pre), std::move(per));
}

inline Word random_word(std::mt19937_64& rng, int radix, std::size_t length) {
  Word w(length);
  for (Digit& x : w) x = static_cast<Digit>(pick(rng, static_cast<std::uint64_t>(radix)));
  return w;
}

/// The shared machine corpus: named machines plus `count` random ones per radix.
inline std::vector<MealyMachine> mealy_corpus(std::size_t count_per_radix, std::uint64_t seed = 20260810) {
  std::mt19937_64 rng(seed);
  std::vector<MealyMachine> machines = {lamplighter(), identity_machine(),
                                        thue_morse_endomorphism(), constant_zero_endomorphism()};
  for (int radix : {2, 3})
    for (std::size_t i = 0; i < count_per_radix; ++i)
      machines.push_back(random_mealy(rng, radix, 3));
  return machines;
}

}  // namespace corpus
