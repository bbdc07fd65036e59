#pragma once

// Internal helpers shared by the machine modules; not installed.

#include <functional>
#include <map>
#include <queue>
#include <vector>

namespace treeadic::detail {

/// States reachable from `initial`, in BFS discovery order (digits ascending).
inline std::vector<int> reachable_order(int nstates, int radix,
                                        const std::vector<std::vector<int>>& next, int initial) {
  std::vector<bool> seen(static_cast<std::size_t>(nstates), false);
  std::vector<int> order;
  std::queue<int> queue;
  seen[static_cast<std::size_t>(initial)] = true;
  queue.push(initial);
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop();
    order.push_back(q);
    for (int x = 0; x < radix; ++x) {
      int t = next[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)];
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        queue.push(t);
      }
    }
  }
  return order;
}

/// Moore-style partition refinement. Starts from `cls` (class ids in first-occurrence
/// numbering) and refines by successor classes until stable; returns the final
/// class id per state, again numbered by first occurrence.
inline std::vector<int> refine_partition(int nstates, int radix, std::vector<int> cls,
                                         const std::vector<std::vector<int>>& next) {
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> refined(static_cast<std::size_t>(nstates));
    for (int q = 0; q < nstates; ++q) {
      std::vector<int> sig;
      sig.reserve(static_cast<std::size_t>(radix) + 1);
      sig.push_back(cls[static_cast<std::size_t>(q)]);
      for (int x = 0; x < radix; ++x)
        sig.push_back(cls[static_cast<std::size_t>(
            next[static_cast<std::size_t>(q)][static_cast<std::size_t>(x)])]);
      auto [it, fresh] = ids.emplace(std::move(sig), static_cast<int>(ids.size()));
      refined[static_cast<std::size_t>(q)] = it->second;
    }
    if (refined == cls) return cls;
    cls = std::move(refined);
  }
}

}  // namespace treeadic::detail
