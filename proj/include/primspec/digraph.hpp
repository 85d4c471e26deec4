#ifndef PRIMSPEC_DIGRAPH_HPP
#define PRIMSPEC_DIGRAPH_HPP

#include <algorithm>
#include <vector>

#include "primspec/types.hpp"

namespace primspec {

/// Support digraph of a semigroup: edge x -> y iff some generator moves mass
/// from x to y. Forward-closed vertex sets are exactly the self-supporting
/// sets of the semigroup.
struct SupportDigraph {
  int n = 0;
  std::vector<std::vector<int>> succ;  // sorted adjacency lists, no duplicates

  bool has_edge(int x, int y) const {
    return std::binary_search(succ[x].begin(), succ[x].end(), y);
  }
};

inline bool is_forward_closed(const SupportDigraph& g, const Subset& L) {
  for (int x : L)
    for (int y : g.succ[x])
      if (!subset_contains(L, y)) return false;
  return true;
}

/// Strongly connected components, iterative Tarjan. Components are returned
/// with members sorted and the component list ordered by smallest member.
inline std::vector<Subset> strongly_connected_components(const SupportDigraph& g) {
  const int n = g.n;
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
  std::vector<int> stack;
  std::vector<Subset> comps;
  int counter = 0;

  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (child < g.succ[v].size()) {
        int w = g.succ[v][child++];
        if (index[w] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], index[w]);
      }
      if (descended) continue;
      if (low[v] == index[v]) {
        Subset comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[finished]);
    }
  }
  std::sort(comps.begin(), comps.end(),
            [](const Subset& a, const Subset& b) { return a.front() < b.front(); });
  return comps;
}

/// Components with no edge leaving them; the minimal self-supporting sets.
inline std::vector<Subset> terminal_components(const SupportDigraph& g) {
  std::vector<Subset> result;
  for (const Subset& comp : strongly_connected_components(g)) {
    bool terminal = true;
    for (int x : comp) {
      for (int y : g.succ[x])
        if (!subset_contains(comp, y)) {
          terminal = false;
          break;
        }
      if (!terminal) break;
    }
    if (terminal) result.push_back(comp);
  }
  return result;
}

}  // namespace primspec

#endif  // PRIMSPEC_DIGRAPH_HPP
