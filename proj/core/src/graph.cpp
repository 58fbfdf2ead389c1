#include "graph.hpp"

#include <algorithm>
#include <limits>

namespace realreg::detail {

SccResult strongly_connected_components(const std::vector<std::vector<std::uint32_t>>& successors) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = successors.size();
  SccResult result;
  result.component.assign(n, kUnvisited);
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0;

  struct Frame {
    std::uint32_t node;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = successors[f.node];
      if (f.child < succ.size()) {
        const std::uint32_t w = succ[f.child++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      const std::uint32_t v = f.node;
      call.pop_back();
      if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
      if (low[v] != index[v]) continue;
      const std::uint32_t id = result.count++;
      std::size_t size = 0;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        result.component[w] = id;
        ++size;
      } while (w != v);
      bool cyclic = size > 1;
      if (!cyclic)
        cyclic = std::find(successors[v].begin(), successors[v].end(), v) != successors[v].end();
      result.nontrivial.push_back(cyclic);
    }
  }
  return result;
}

std::vector<bool> reachable(const std::vector<std::vector<std::uint32_t>>& successors,
                            const std::vector<std::uint32_t>& sources) {
  std::vector<bool> seen(successors.size(), false);
  std::vector<std::uint32_t> work;
  for (auto s : sources)
    if (!seen[s]) { seen[s] = true; work.push_back(s); }
  while (!work.empty()) {
    const auto v = work.back();
    work.pop_back();
    for (auto w : successors[v])
      if (!seen[w]) { seen[w] = true; work.push_back(w); }
  }
  return seen;
}

}  // namespace realreg::detail
