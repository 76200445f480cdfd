#include "berge/circumference.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace berge {

bool validate_cycle(const BipartiteGraph& g, const CycleWitness& w) {
  size_t n = w.nodes.size();
  if (n < 4) return false;
  std::vector<int> sorted = w.nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (int v : w.nodes)
    if (v < 0 || v >= g.nodes()) return false;
  for (size_t i = 0; i < n; ++i)
    if (!g.adj(w.nodes[i]).test(w.nodes[(i + 1) % n])) return false;
  return true;
}

bool validate_path(const BipartiteGraph& g, const PathWitness& w) {
  size_t n = w.nodes.size();
  if (n == 0) return false;
  std::vector<int> sorted = w.nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (int v : w.nodes)
    if (v < 0 || v >= g.nodes()) return false;
  for (size_t i = 0; i + 1 < n; ++i)
    if (!g.adj(w.nodes[i]).test(w.nodes[i + 1])) return false;
  return true;
}

namespace {

// Shared search scaffolding: unified adjacency masks plus a free-region BFS
// used for upper bounds and dead-end pruning.
struct SearchBase {
  const BipartiteGraph& g;
  int N;
  std::vector<Mask128> adj;
  Mask128 allnodes;

  explicit SearchBase(const BipartiteGraph& g_) : g(g_), N(g_.nodes()) {
    adj.resize(N);
    for (int v = 0; v < N; ++v) {
      adj[v] = g.adj(v);
      allnodes.set(v);
    }
  }

  Mask128 reach_from(int head, Mask128 allowed) const {
    Mask128 seen = Mask128::single(head);
    Mask128 frontier = seen;
    while (frontier.any()) {
      Mask128 next;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v))
        next |= adj[v];
      next = (next & allowed).and_not(seen);
      seen |= next;
      frontier = next;
    }
    return seen;
  }
};

// Longest-cycle branch and bound. Each cycle is found once, rooted at its
// smallest node id; the path length plus the reachable free region bounds
// any extension, and a head that cannot reach a neighbor of the root
// through free nodes can never close.
struct CycleEngine : SearchBase {
  int threshold;  // > 0: stop as soon as a cycle this long is found
  int best = 0;
  std::vector<int> best_nodes;
  std::vector<int> path;
  int start = 0;
  int maxcap;
  bool stop = false;

  CycleEngine(const BipartiteGraph& g_, int thr)
      : SearchBase(g_), threshold(thr),
        maxcap(2 * std::min(g_.nx, g_.ny)) {}

  void dfs(int head, Mask128 visited) {
    int len = static_cast<int>(path.size());
    if (len >= 4 && adj[head].test(start) && len > best) {
      best = len;
      best_nodes = path;
      if ((threshold > 0 && best >= threshold) || best == maxcap) {
        stop = true;
        return;
      }
    }
    Mask128 free = allnodes.and_not(visited);
    Mask128 reach = reach_from(head, free);
    // reach always contains head, so this also covers a direct head-start
    // edge; when false no extension can ever close back to the root.
    if (!(reach & adj[start]).any()) return;
    int ub = len + reach.and_not(Mask128::single(head)).count();
    int target = threshold > 0 ? std::max(threshold, best + 1) : best + 1;
    if (ub < target) return;
    Mask128 cand = adj[head] & free;
    for (int u = cand.first(); u >= 0; u = cand.next(u)) {
      path.push_back(u);
      Mask128 v2 = visited;
      v2.set(u);
      dfs(u, v2);
      path.pop_back();
      if (stop) return;
    }
  }

  void run() {
    for (int s = 0; s < N && !stop; ++s) {
      if (g.deg(s) < 2) continue;
      int target = threshold > 0 ? std::max(threshold, best + 1) : best + 1;
      if (N - s < target) break;
      Mask128 visited;
      for (int v = 0; v <= s; ++v) visited.set(v);
      start = s;
      path.assign(1, s);
      dfs(s, visited);
    }
  }
};

// Longest-path search: same bounding idea, optionally constrained to end
// on the X side or to reach a fixed target with a minimum node count.
struct PathEngine : SearchBase {
  enum class Mode { any, ends_in_x, to_target } mode = Mode::any;
  int target = -1, min_nodes = 0;
  bool found = false;
  int best = 0;
  std::vector<int> best_nodes;
  std::vector<int> path;
  bool start_in_x = false;

  explicit PathEngine(const BipartiteGraph& g_) : SearchBase(g_) {}

  void record(int head) {
    int len = static_cast<int>(path.size());
    switch (mode) {
      case Mode::any:
        if (len > best) {
          best = len;
          best_nodes = path;
        }
        break;
      case Mode::ends_in_x:
        if (start_in_x && g.is_x(head) && len > best) {
          best = len;
          best_nodes = path;
        }
        break;
      case Mode::to_target:
        if (head == target && len >= min_nodes) {
          found = true;
          best = len;
          best_nodes = path;
        }
        break;
    }
  }

  void dfs(int head, Mask128 visited) {
    record(head);
    if (found) return;
    Mask128 free = allnodes.and_not(visited);
    Mask128 reach = reach_from(head, free);
    int ub = static_cast<int>(path.size()) +
             reach.and_not(Mask128::single(head)).count();
    if (mode == Mode::to_target) {
      if (head != target && !reach.test(target)) return;
      if (ub < min_nodes) return;
    } else {
      if (ub <= best) return;
    }
    Mask128 cand = adj[head] & free;
    for (int u = cand.first(); u >= 0; u = cand.next(u)) {
      path.push_back(u);
      Mask128 v2 = visited;
      v2.set(u);
      dfs(u, v2);
      path.pop_back();
      if (found) return;
    }
  }

  void run_from(int s) {
    start_in_x = g.is_x(s);
    path.assign(1, s);
    dfs(s, Mask128::single(s));
  }
};

}  // namespace

int circumference(const BipartiteGraph& g) {
  CycleEngine e(g, 0);
  e.run();
  return e.best;
}

CycleWitness longest_cycle(const BipartiteGraph& g) {
  CycleEngine e(g, 0);
  e.run();
  return CycleWitness{e.best_nodes};
}

bool has_cycle_at_least(const BipartiteGraph& g, int len) {
  CycleEngine e(g, std::max(len, 4));
  e.run();
  return e.best >= std::max(len, 4);
}

PathWitness longest_path(const BipartiteGraph& g) {
  PathEngine e(g);
  e.mode = PathEngine::Mode::any;
  for (int s = 0; s < e.N; ++s) {
    if (e.N <= e.best) break;
    e.run_from(s);
  }
  return PathWitness{e.best_nodes};
}

PathWitness longest_path_ends_in_x(const BipartiteGraph& g) {
  PathEngine e(g);
  e.mode = PathEngine::Mode::ends_in_x;
  for (int s = 0; s < g.nx; ++s) {
    if (e.N <= e.best) break;
    e.run_from(s);
  }
  return PathWitness{e.best_nodes};
}

bool has_path_at_least(const BipartiteGraph& g, int a, int b, int min_nodes) {
  if (a == b) return min_nodes <= 1;
  PathEngine e(g);
  e.mode = PathEngine::Mode::to_target;
  e.target = b;
  e.min_nodes = min_nodes;
  e.run_from(a);
  return e.found;
}

int berge_circumference(const MultiHypergraph& h) {
  return circumference(incidence_graph(h)) / 2;
}

std::optional<BergeWitness> berge_circumference_witness(
    const MultiHypergraph& h) {
  CycleWitness c = longest_cycle(incidence_graph(h));
  if (c.empty()) return std::nullopt;
  // Incidence cycles alternate vertex/slot and start at the smallest id,
  // which lies on the vertex side.
  BergeWitness w;
  for (size_t i = 0; i < c.nodes.size(); i += 2) {
    w.vertices.push_back(c.nodes[i]);
    w.slots.push_back(c.nodes[i + 1] - h.n);
  }
  return w;
}

bool has_berge_cycle_at_least(const MultiHypergraph& h, int k) {
  return has_cycle_at_least(incidence_graph(h), 2 * k);
}

int longest_berge_path(const MultiHypergraph& h) {
  if (h.n == 0) return 0;
  PathWitness p = longest_path_ends_in_x(incidence_graph(h));
  return p.nodes.empty() ? 0 : static_cast<int>(p.nodes.size()) / 2;
}

std::optional<BergeWitness> longest_berge_path_witness(
    const MultiHypergraph& h) {
  if (h.n == 0) return std::nullopt;
  PathWitness p = longest_path_ends_in_x(incidence_graph(h));
  if (p.nodes.empty()) return std::nullopt;
  BergeWitness w;
  for (size_t i = 0; i < p.nodes.size(); ++i) {
    if (i % 2 == 0)
      w.vertices.push_back(p.nodes[i]);
    else
      w.slots.push_back(p.nodes[i] - h.n);
  }
  return w;
}

int direct_berge_circumference(const MultiHypergraph& h) {
  int n = h.n, m = h.edge_count();
  if (n < 2 || m < 2) return 0;
  // Slots shared by each vertex pair; a vertex sequence is a Berge cycle
  // exactly when its consecutive-pair demands admit distinct slots, which
  // is a bipartite matching question (checked exactly at every prefix).
  std::vector<std::vector<std::uint64_t>> ps(
      n, std::vector<std::uint64_t>(n, 0));
  for (int s = 0; s < m; ++s)
    for (size_t i = 0; i < h.edges[s].size(); ++i)
      for (size_t j = i + 1; j < h.edges[s].size(); ++j) {
        int a = h.edges[s][i], b = h.edges[s][j];
        ps[a][b] |= std::uint64_t(1) << s;
        ps[b][a] |= std::uint64_t(1) << s;
      }

  std::vector<std::uint64_t> demands;
  std::vector<int> slot_of;  // demand index -> matched slot
  auto feasible = [&](std::uint64_t extra) {
    std::vector<std::uint64_t> d = demands;
    if (extra) d.push_back(extra);
    std::vector<int> owner(m, -1);
    std::function<bool(int, std::uint64_t&)> tryd =
        [&](int di, std::uint64_t& vis) {
          std::uint64_t opts = d[di] & ~vis;
          while (opts) {
            int s = std::countr_zero(opts);
            opts &= opts - 1;
            vis |= std::uint64_t(1) << s;
            if (owner[s] < 0 || tryd(owner[s], vis)) {
              owner[s] = di;
              return true;
            }
          }
          return false;
        };
    for (size_t i = 0; i < d.size(); ++i) {
      std::uint64_t vis = 0;
      if (!tryd(static_cast<int>(i), vis)) return false;
    }
    return true;
  };

  int best = 0;
  int cap = std::min(n, m);
  std::vector<int> seq;
  std::vector<char> used(n, 0);
  std::function<void()> ext = [&]() {
    if (best == cap) return;
    int last = seq.back(), first = seq.front();
    int len = static_cast<int>(seq.size());
    if (len >= 2 && ps[last][first] && len > best &&
        feasible(ps[last][first]))
      best = len;
    // Remaining distinct vertices bound any extension.
    int avail = 0;
    for (int u = first + 1; u < n; ++u)
      if (!used[u]) ++avail;
    if (std::min(len + avail, cap) <= best) return;
    for (int u = first + 1; u < n; ++u) {
      if (used[u] || !ps[last][u]) continue;
      demands.push_back(ps[last][u]);
      if (feasible(0)) {
        used[u] = 1;
        seq.push_back(u);
        ext();
        seq.pop_back();
        used[u] = 0;
      }
      demands.pop_back();
      if (best == cap) return;
    }
  };
  for (int v0 = 0; v0 < n && best < cap; ++v0) {
    seq.assign(1, v0);
    used[v0] = 1;
    demands.clear();
    ext();
    used[v0] = 0;
  }
  return best;
}

int oracle_circumference(const BipartiteGraph& g) {
  int N = g.nodes();
  std::vector<std::vector<int>> nb(N);
  for (int v = 0; v < N; ++v)
    for (int u = 0; u < N; ++u) {
      if (u == v) continue;
      bool e = g.is_x(v) ? (!g.is_x(u) && g.has_edge(v, u - g.nx))
                         : (g.is_x(u) && g.has_edge(u, v - g.nx));
      if (e) nb[v].push_back(u);
    }
  int best = 0;
  int cap = 2 * std::min(g.nx, g.ny);
  std::vector<char> vis(N, 0);
  int start = 0, len = 0;
  std::function<void(int)> dfs = [&](int v) {
    if (best == cap) return;
    for (int u : nb[v]) {
      if (u == start && len >= 4 && len > best) best = len;
      if (u <= start || vis[u]) continue;
      vis[u] = 1;
      ++len;
      dfs(u);
      --len;
      vis[u] = 0;
      if (best == cap) return;
    }
  };
  for (start = 0; start < N && best < cap; ++start) {
    vis[start] = 1;
    len = 1;
    dfs(start);
    vis[start] = 0;
  }
  return best;
}

bool is_saturated(const BipartiteGraph& g, int k) {
  if (circumference(g) >= 2 * k)
    throw std::invalid_argument("graph already has a cycle with >= 2k nodes");
  for (int x = 0; x < g.nx; ++x)
    for (int y = 0; y < g.ny; ++y) {
      if (g.has_edge(x, y)) continue;
      if (!has_path_at_least(g, g.xid(x), g.yid(y), 2 * k)) return false;
    }
  return true;
}

std::optional<std::pair<int, int>> unsaturated_pair(const BipartiteGraph& g,
                                                    int k) {
  if (circumference(g) >= 2 * k)
    throw std::invalid_argument("graph already has a cycle with >= 2k nodes");
  for (int x = 0; x < g.nx; ++x)
    for (int y = 0; y < g.ny; ++y) {
      if (g.has_edge(x, y)) continue;
      if (!has_path_at_least(g, g.xid(x), g.yid(y), 2 * k))
        return std::make_pair(x, y);
    }
  return std::nullopt;
}

BipartiteGraph saturate(const BipartiteGraph& g, int k) {
  BipartiteGraph cur = g;
  while (true) {
    auto p = unsaturated_pair(cur, k);
    if (!p) return cur;
    cur.add_edge(p->first, p->second);
  }
}

}  // namespace berge
