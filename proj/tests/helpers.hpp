#pragma once

// Shared test helpers: seeded random instances and brute-force oracles
// that deliberately take the slow, definitional route.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "berge/bigraph.hpp"
#include "berge/circumference.hpp"
#include "berge/hypergraph.hpp"

namespace testutil {

using berge::BipartiteGraph;
using berge::MultiHypergraph;

inline BipartiteGraph random_bipartite(std::mt19937_64& rng, int nx, int ny,
                                       double p) {
  BipartiteGraph g(nx, ny);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

// Keeps sampling until the graph is 2-connected (parts sized in [2, max_part]).
inline BipartiteGraph random_2connected(std::mt19937_64& rng, int max_part,
                                        double p = 0.55) {
  for (;;) {
    int nx = 2 + static_cast<int>(rng() % (max_part - 1));
    int ny = 2 + static_cast<int>(rng() % (max_part - 1));
    BipartiteGraph g = random_bipartite(rng, nx, ny, p);
    if (berge::is_2_connected(g)) return g;
  }
}

inline MultiHypergraph random_hypergraph(std::mt19937_64& rng, int n,
                                         int max_edges, int size_lo,
                                         int size_hi) {
  MultiHypergraph h(n);
  int m = 1 + static_cast<int>(rng() % max_edges);
  for (int e = 0; e < m; ++e) {
    int sz = size_lo + static_cast<int>(rng() % (size_hi - size_lo + 1));
    sz = std::min(sz, n);
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(sz);
    h.add_edge(std::move(verts));
  }
  return h;
}

// Longest path by plain recursion over all starting nodes; node count.
inline int brute_longest_path_nodes(const BipartiteGraph& g) {
  int n = g.nodes();
  int best = n > 0 ? 1 : 0;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> go = [&](int v, int len) {
    best = std::max(best, len);
    auto nb = g.adj(v);
    for (int u = nb.first(); u >= 0; u = nb.next(u))
      if (!used[u]) {
        used[u] = 1;
        go(u, len + 1);
        used[u] = 0;
      }
  };
  for (int v = 0; v < n; ++v) {
    // Skip isolated starts only when something else exists; a lone node
    // still counts as a length-1 path.
    used[v] = 1;
    go(v, 1);
    used[v] = 0;
  }
  return best;
}

// Every simple cycle as a node sequence, rooted at its minimal node.
// Each cycle shows up twice (once per direction); callers that union
// edges over cycles do not care.
inline std::vector<std::vector<int>> brute_all_cycles(
    const BipartiteGraph& g) {
  int n = g.nodes();
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  std::vector<char> used(n, 0);
  std::function<void(int, int)> go = [&](int v, int start) {
    auto m = g.adj(v);
    for (;;) {
      int u = m.pop_first();
      if (u < 0) break;
      if (u == start && stack.size() >= 4) out.push_back(stack);
      if (u > start && !used[u]) {
        used[u] = 1;
        stack.push_back(u);
        go(u, start);
        stack.pop_back();
        used[u] = 0;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    stack = {s};
    go(s, s);
    used[s] = 0;
  }
  return out;
}

}  // namespace testutil
