#include "berge/structure.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace berge {

namespace {

struct PathCtx {
  std::vector<int> nodes;  // position h (1-based) -> nodes[h-1]
  Mask128 pset;
  int p = 0;
  int at(int pos) const { return nodes[pos - 1]; }
};

PathCtx make_ctx(const BipartiteGraph& g, const std::vector<int>& path) {
  PathCtx c;
  if (path.size() < 2) throw std::invalid_argument("path needs >= 2 nodes");
  for (int v : path) {
    if (v < 0 || v >= g.nodes())
      throw std::invalid_argument("path node out of range");
    if (c.pset.test(v)) throw std::invalid_argument("repeated path node");
    c.pset.set(v);
  }
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.adj(path[i]).test(path[i + 1]))
      throw std::invalid_argument("consecutive path nodes not adjacent");
  c.nodes = path;
  c.p = static_cast<int>(path.size());
  return c;
}

}  // namespace

PathDecoration decorate_path(const BipartiteGraph& g,
                             const std::vector<int>& path) {
  PathCtx c = make_ctx(g, path);
  PathDecoration d;
  d.path = path;
  Mask128 n1 = g.adj(c.at(1)), np = g.adj(c.at(c.p));
  for (int h = 1; h <= c.p; ++h) {
    if (n1.test(c.at(h))) d.np_start.push_back(h);
    if (np.test(c.at(h))) d.np_end.push_back(h);
  }
  // Crossing pairs: consecutive marked positions (i, j) with v_i adjacent
  // to the far end and v_j adjacent to the near end; "consecutive in the
  // marked list" is exactly "no marked position strictly between".
  std::vector<int> marked;
  std::merge(d.np_start.begin(), d.np_start.end(), d.np_end.begin(),
             d.np_end.end(), std::back_inserter(marked));
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  for (size_t t = 0; t + 1 < marked.size(); ++t) {
    int i = marked[t], j = marked[t + 1];
    if (np.test(c.at(i)) && n1.test(c.at(j))) d.pairs.push_back({i, j});
  }
  // Chain: the pairs must be the consecutive links of one increasing
  // sequence i_0 < ... < i_q.
  if (!d.pairs.empty()) {
    d.chain.push_back(d.pairs[0].first);
    d.chain.push_back(d.pairs[0].second);
    d.formation = true;
    for (size_t t = 1; t < d.pairs.size(); ++t) {
      if (d.pairs[t].first != d.chain.back()) {
        d.formation = false;
        break;
      }
      d.chain.push_back(d.pairs[t].second);
    }
    if (!d.formation) d.chain.clear();
  }
  return d;
}

std::vector<std::pair<int, int>> crossing_pairs(const BipartiteGraph& g,
                                                const std::vector<int>& path) {
  return decorate_path(g, path).pairs;
}

bool is_crossing_formation(const BipartiteGraph& g,
                           const std::vector<int>& path) {
  return decorate_path(g, path).formation;
}

ScfReport check_saturated_crossing_formation(const BipartiteGraph& g,
                                             const std::vector<int>& path) {
  PathCtx c = make_ctx(g, path);
  PathDecoration d = decorate_path(g, path);
  ScfReport rep;

  // Part 1: crossing formation.
  if (d.pairs.empty()) {
    rep.parts[0].detail = "no crossing pairs";
  } else if (!d.formation) {
    rep.parts[0].detail = "crossing pairs do not chain into one sequence";
  } else {
    rep.parts[0].holds = true;
  }

  const bool chained = d.formation;
  const std::string no_chain = "no crossing index chain";
  int i0 = chained ? d.chain.front() : 0;
  int iq = chained ? d.chain.back() : 0;

  // Part 2: wings plus chain are complete bipartite.
  if (!chained) {
    rep.parts[1].detail = no_chain;
  } else {
    auto complete_on = [&](const std::vector<int>& positions) -> std::string {
      for (int hi : positions)
        for (int hj : positions) {
          int u = c.at(hi), w = c.at(hj);
          if (!g.is_x(u) || g.is_x(w)) continue;
          if (!g.adj(u).test(w))
            return "missing edge v" + std::to_string(hi) + "v" +
                   std::to_string(hj);
        }
      return "";
    };
    std::vector<int> left, right;
    for (int h = 1; h <= i0; ++h) left.push_back(h);
    for (size_t t = 1; t < d.chain.size(); ++t) left.push_back(d.chain[t]);
    for (size_t t = 0; t + 1 < d.chain.size(); ++t)
      right.push_back(d.chain[t]);
    for (int h = iq; h <= c.p; ++h) right.push_back(h);
    std::string bad = complete_on(left);
    if (bad.empty()) bad = complete_on(right);
    if (bad.empty())
      rep.parts[1].holds = true;
    else
      rep.parts[1].detail = bad;
  }

  // Part 3: with more than one pair, exactly 3 positions between each.
  if (!chained) {
    rep.parts[2].detail = no_chain;
  } else {
    rep.parts[2].holds = true;
    if (d.pairs.size() > 1)
      for (auto [i, j] : d.pairs)
        if (j - i != 4) {
          rep.parts[2].holds = false;
          rep.parts[2].detail = "pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ") has " +
                                std::to_string(j - i - 1) +
                                " vertices between";
          break;
        }
  }

  // Part 4: near-duplicate ends off the path.
  {
    Mask128 off = ~c.pset;
    Mask128 n1 = g.adj(c.at(1));
    Mask128 np_full = g.adj(c.at(c.p));
    Mask128 np_on_path = np_full & c.pset;
    bool have1 = false, havep = false;
    Mask128 cand1 = g.adj(c.at(2)) & off;
    for (int v = cand1.first(); v >= 0; v = cand1.next(v))
      if (g.adj(v) == n1) {
        have1 = true;
        break;
      }
    Mask128 candp = g.adj(c.at(c.p - 1)) & off;
    for (int v = candp.first(); v >= 0; v = candp.next(v))
      if ((g.adj(v) & c.pset) == np_on_path) {
        havep = true;
        break;
      }
    if (have1 && havep)
      rep.parts[3].holds = true;
    else if (!have1)
      rep.parts[3].detail = "no off-path twin of v1 adjacent to v2";
    else
      rep.parts[3].detail = "no off-path twin of vp adjacent to v(p-1)";
  }

  // Part 5: neighborhood confinement around the wings.
  if (!chained) {
    rep.parts[4].detail = no_chain;
  } else {
    Mask128 np1 = g.adj(c.at(1)) & c.pset;
    Mask128 npp = g.adj(c.at(c.p)) & c.pset;
    std::string bad;
    for (int h = 2; h <= i0 - 2 && bad.empty(); h += 2) {
      Mask128 nb = g.adj(c.at(h));
      for (int u = nb.first(); u >= 0; u = nb.next(u))
        if (!g.adj(u).is_subset_of(np1)) {
          bad = "neighbor of v" + std::to_string(h) +
                " escapes N_P(v1)";
          break;
        }
    }
    int ev = (iq + 2) % 2 == 0 ? iq + 2 : iq + 3;
    for (int h = ev; h <= c.p && bad.empty(); h += 2) {
      Mask128 nb = g.adj(c.at(h));
      for (int u = nb.first(); u >= 0; u = nb.next(u))
        if (!g.adj(u).is_subset_of(npp)) {
          bad = "neighbor of v" + std::to_string(h) +
                " escapes N_P(vp)";
          break;
        }
    }
    for (int h = 1; h <= i0 - 1 && bad.empty(); h += 2)
      if (!g.adj(c.at(h)).is_subset_of(c.pset))
        bad = "v" + std::to_string(h) + " has a neighbor off the path";
    int odd = (iq + 1) % 2 == 1 ? iq + 1 : iq + 2;
    for (int h = odd; h <= c.p && bad.empty(); h += 2)
      if (!g.adj(c.at(h)).is_subset_of(c.pset))
        bad = "v" + std::to_string(h) + " has a neighbor off the path";
    if (bad.empty())
      rep.parts[4].holds = true;
    else
      rep.parts[4].detail = bad;
  }

  return rep;
}

namespace {

// Required-coverage cycle search: some cycle containing all of `required`
// with at least min_len nodes. Same bounded DFS as the main engine, with
// the extra demand that unreached required nodes stay reachable.
CycleWitness find_covered_cycle(const BipartiteGraph& g, Mask128 required,
                                int min_len) {
  int N = g.nodes();
  std::vector<Mask128> adj(N);
  Mask128 allnodes;
  for (int v = 0; v < N; ++v) {
    adj[v] = g.adj(v);
    allnodes.set(v);
  }
  min_len = std::max(min_len, 4);
  int max_start = N - 1;
  if (required.any()) max_start = required.first();

  std::vector<int> path;
  CycleWitness out;
  std::function<bool(int, int, Mask128)> dfs = [&](int start, int head,
                                                   Mask128 visited) {
    int len = static_cast<int>(path.size());
    if (len >= min_len && adj[head].test(start)) {
      Mask128 onpath;
      for (int v : path) onpath.set(v);
      if (required.and_not(onpath).none()) {
        out.nodes = path;
        return true;
      }
    }
    Mask128 free = allnodes.and_not(visited);
    Mask128 seen = Mask128::single(head);
    Mask128 frontier = seen;
    while (frontier.any()) {
      Mask128 next;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v))
        next |= adj[v];
      next = (next & free).and_not(seen);
      seen |= next;
      frontier = next;
    }
    if (!(seen & adj[start]).any()) return false;
    Mask128 missing = required.and_not(visited);
    if (missing.and_not(seen).any()) return false;
    if (len + seen.and_not(Mask128::single(head)).count() < min_len)
      return false;
    Mask128 cand = adj[head] & free;
    for (int u = cand.first(); u >= 0; u = cand.next(u)) {
      path.push_back(u);
      Mask128 v2 = visited;
      v2.set(u);
      if (dfs(start, u, v2)) return true;
      path.pop_back();
    }
    return false;
  };
  for (int s = 0; s <= max_start; ++s) {
    Mask128 visited;
    for (int v = 0; v <= s; ++v) visited.set(v);
    path.assign(1, s);
    if (dfs(s, s, visited)) return out;
  }
  return CycleWitness{};
}

struct Ear {
  int s = 0, t = 0;                 // path positions
  std::vector<int> internal;        // node ids, s side first
};

}  // namespace

LongCycleResult long_cycle_from_path(const BipartiteGraph& g,
                                     const std::vector<int>& path) {
  if (!is_2_connected(g))
    throw std::invalid_argument("graph is not 2-connected");
  PathCtx c = make_ctx(g, path);
  PathDecoration d = decorate_path(g, path);
  int p = c.p;
  int dx = static_cast<int>(d.np_start.size());
  int dy = static_cast<int>(d.np_end.size());
  bool same_part = g.is_x(c.at(1)) == g.is_x(c.at(p));

  LongCycleResult res;
  if (d.pairs.empty()) {
    res.case_id = 'a';
    res.applied_bound = 2 * (dx + dy - 1);
  } else if (!same_part) {
    res.case_id = 'b';
    res.applied_bound = std::min(p, 2 * (dx + dy - 1));
  } else {
    res.case_id = 'c';
    res.applied_bound = std::min(p - 1, 2 * (dx + dy - 2));
  }

  Mask128 required;
  for (int h : d.np_start) required.set(c.at(h));
  for (int h : d.np_end) required.set(c.at(h));

  auto finish = [&](std::vector<int> nodes,
                    LongCycleResult::Route route) -> bool {
    CycleWitness w{std::move(nodes)};
    if (!validate_cycle(g, w)) return false;
    Mask128 onc;
    for (int v : w.nodes) onc.set(v);
    if (required.and_not(onc).any()) return false;
    if (w.length() < res.applied_bound) return false;
    res.cycle = std::move(w);
    res.route = route;
    return true;
  };

  if (!d.pairs.empty()) {
    // Jump through the minimum-gap pair: the gap interior carries no
    // neighbor of either end, so the cycle covers them all.
    auto best = d.pairs[0];
    for (auto pr : d.pairs)
      if (pr.second - pr.first < best.second - best.first) best = pr;
    std::vector<int> nodes;
    for (int h = 1; h <= best.first; ++h) nodes.push_back(c.at(h));
    for (int h = p; h >= best.second; --h) nodes.push_back(c.at(h));
    if (finish(std::move(nodes), LongCycleResult::Route::crossing_jump))
      return res;
  } else {
    // Ear iteration. t0/u are the extreme end-neighbor positions; each
    // step picks the ear reaching furthest right across the previous
    // target (ties: leftmost start), which forces ears to be pairwise
    // disjoint and starts to stay ordered.
    int t0 = d.np_start.back();
    int u = d.np_end.front();
    if (t0 <= u) {
      // Components of G - V(P) with their attachment positions.
      struct Comp {
        Mask128 nodes;
        std::vector<int> attach;  // path positions, ascending
      };
      std::vector<Comp> comps;
      {
        Mask128 offp;
        for (int v = 0; v < g.nodes(); ++v)
          if (!c.pset.test(v)) offp.set(v);
        Mask128 left = offp;
        while (left.any()) {
          int seed = left.first();
          Mask128 comp = Mask128::single(seed);
          Mask128 frontier = comp;
          while (frontier.any()) {
            Mask128 next;
            for (int v = frontier.first(); v >= 0; v = frontier.next(v))
              next |= g.adj(v);
            next = (next & offp).and_not(comp);
            comp |= next;
            frontier = next;
          }
          left = left.and_not(comp);
          Comp cc;
          cc.nodes = comp;
          Mask128 att;
          for (int v = comp.first(); v >= 0; v = comp.next(v))
            att |= g.adj(v) & c.pset;
          for (int h = 1; h <= p; ++h)
            if (att.test(c.at(h))) cc.attach.push_back(h);
          comps.push_back(cc);
        }
      }
      std::vector<Ear> ears;
      int tprev = t0;
      bool ok = true;
      while (tprev <= u) {
        int bt = -1, bs = -1, bcomp = -1;
        // Chords first at equal (t, s) so ties resolve deterministically.
        for (int t = p; t >= tprev + 1; --t) {
          if (bt > t) break;
          for (int s = 1; s < tprev; ++s) {
            if (t - s == 1) continue;
            if (!g.adj(c.at(s)).test(c.at(t))) continue;
            if (t > bt || (t == bt && s < bs)) {
              bt = t;
              bs = s;
              bcomp = -1;
            }
            break;  // smallest s for this t found
          }
        }
        for (size_t ci = 0; ci < comps.size(); ++ci) {
          const auto& cc = comps[ci];
          if (cc.attach.empty()) continue;
          int lo = cc.attach.front(), hi = cc.attach.back();
          if (!(lo < tprev && hi > tprev)) continue;
          int s = lo;
          if (hi > bt || (hi == bt && s < bs)) {
            bt = hi;
            bs = s;
            bcomp = static_cast<int>(ci);
          }
        }
        if (bt < 0) {
          ok = false;
          break;
        }
        Ear ear;
        ear.s = bs;
        ear.t = bt;
        if (bcomp >= 0) {
          // Shortest route inside the component from v_s to v_t.
          const auto& cc = comps[bcomp];
          int src = c.at(bs), dst = c.at(bt);
          std::vector<int> par(g.nodes(), -1);
          std::queue<int> q;
          q.push(src);
          par[src] = src;
          while (!q.empty() && par[dst] < 0) {
            int v = q.front();
            q.pop();
            Mask128 nb = g.adj(v);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
              if (par[w] >= 0) continue;
              if (w != dst && !cc.nodes.test(w)) continue;
              if (v == src && w == dst) continue;  // must pass inside
              par[w] = v;
              q.push(w);
            }
          }
          if (par[dst] < 0) {
            ok = false;
            break;
          }
          std::vector<int> rev;
          for (int v = par[dst]; v != src; v = par[v]) rev.push_back(v);
          ear.internal.assign(rev.rbegin(), rev.rend());
        }
        ears.push_back(std::move(ear));
        tprev = bt;
      }
      if (ok && !ears.empty()) {
        int l = static_cast<int>(ears.size());
        int a = 0, b = 0;
        for (int h : d.np_start)
          if (h > ears[0].s) {
            a = h;
            break;
          }
        for (int h : d.np_end)
          if (h < ears[l - 1].t) b = h;
        std::vector<std::pair<int, int>> ivals;
        ivals.push_back({1, ears[0].s});
        if (l == 1) {
          ivals.push_back({a, b});
        } else {
          ivals.push_back({a, ears[1].s});
          for (int r = 3; r <= l; ++r)
            ivals.push_back({ears[r - 3].t, ears[r - 1].s});
          ivals.push_back({ears[l - 2].t, b});
        }
        ivals.push_back({ears[l - 1].t, p});

        // Assemble by links: intervals contribute path segments, ears and
        // the two end edges join them; every cycle node gets degree 2.
        std::vector<std::vector<int>> links(g.nodes());
        auto join = [&](int vA, int vB) {
          links[vA].push_back(vB);
          links[vB].push_back(vA);
        };
        bool shape_ok = a > 0 && b > 0;
        for (auto [lo, hi] : ivals)
          if (lo > hi || lo < 1) shape_ok = false;
        if (shape_ok) {
          for (auto [lo, hi] : ivals)
            for (int h = lo; h < hi; ++h) join(c.at(h), c.at(h + 1));
          for (const auto& e : ears) {
            int prev = c.at(e.s);
            for (int v : e.internal) {
              join(prev, v);
              prev = v;
            }
            join(prev, c.at(e.t));
          }
          join(c.at(1), c.at(a));
          join(c.at(p), c.at(b));
          // Walk the 2-regular link structure from v_1.
          std::vector<int> nodes;
          int startn = c.at(1);
          int prev = -1, cur = startn;
          bool walk_ok = true;
          do {
            if (links[cur].size() != 2) {
              walk_ok = false;
              break;
            }
            nodes.push_back(cur);
            int nxt = links[cur][0] == prev ? links[cur][1] : links[cur][0];
            prev = cur;
            cur = nxt;
          } while (cur != startn);
          if (walk_ok &&
              finish(std::move(nodes), LongCycleResult::Route::ears))
            return res;
        }
      }
    }
  }

  // Degenerate shapes (tiny paths, jump cycle below 4 nodes) fall back to
  // a direct search for a covering cycle.
  CycleWitness w =
      find_covered_cycle(g, required, std::max(res.applied_bound, 4));
  if (w.empty() || !finish(std::move(w.nodes),
                           LongCycleResult::Route::fallback_search))
    throw std::logic_error("no covering cycle found");
  return res;
}

Core disintegrate(const BipartiteGraph& g, int alpha, std::uint64_t xstar,
                  std::uint64_t ystar) {
  return mixed_disintegrate(g, alpha, alpha, xstar, ystar);
}

Core mixed_disintegrate(const BipartiteGraph& g, int alpha_x, int alpha_y,
                        std::uint64_t xstar, std::uint64_t ystar) {
  Mask128 alive;
  for (int i = 0; i < g.nx; ++i)
    if ((xstar >> i) & 1) alive.set(i);
  for (int j = 0; j < g.ny; ++j)
    if ((ystar >> j) & 1) alive.set(g.nx + j);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = alive.first(); v >= 0; v = alive.next(v)) {
      int thr = g.is_x(v) ? alpha_x : alpha_y;
      if ((g.adj(v) & alive).count() <= thr) {
        alive.clear(v);
        changed = true;
      }
    }
  }
  Core core;
  for (int i = 0; i < g.nx; ++i)
    if (alive.test(i)) core.keep_x |= std::uint64_t(1) << i;
  for (int j = 0; j < g.ny; ++j)
    if (alive.test(g.nx + j)) core.keep_y |= std::uint64_t(1) << j;
  return core;
}

bool separation_check(const BipartiteGraph& g, const std::vector<int>& path) {
  ScfReport rep = check_saturated_crossing_formation(g, path);
  if (!rep.all())
    throw std::invalid_argument(
        "path is not in saturated crossing formation");
  PathCtx c = make_ctx(g, path);
  PathDecoration d = decorate_path(g, path);
  Mask128 chain_nodes;
  for (int h : d.chain) chain_nodes.set(c.at(h));
  int i0 = d.chain.front(), iq = d.chain.back();
  Mask128 lefto, righto, mido;
  for (int h = 1; h < i0; ++h) lefto.set(c.at(h));
  for (int h = iq + 1; h <= c.p; ++h) righto.set(c.at(h));
  for (int h = i0 + 1; h < iq; ++h)
    if (!chain_nodes.test(c.at(h))) mido.set(c.at(h));

  Mask128 allowed;
  for (int v = 0; v < g.nodes(); ++v)
    if (!chain_nodes.test(v)) allowed.set(v);
  Mask128 left = allowed;
  while (left.any()) {
    int seed = left.first();
    Mask128 comp = Mask128::single(seed);
    Mask128 frontier = comp;
    while (frontier.any()) {
      Mask128 next;
      for (int v = frontier.first(); v >= 0; v = frontier.next(v))
        next |= g.adj(v);
      next = (next & allowed).and_not(comp);
      comp |= next;
      frontier = next;
    }
    left = left.and_not(comp);
    int touched = (comp.intersects(lefto) ? 1 : 0) +
                  (comp.intersects(righto) ? 1 : 0) +
                  (comp.intersects(mido) ? 1 : 0);
    if (touched > 1) return false;
  }
  return true;
}

int max_connector_nodes(const BipartiteGraph& g, const std::vector<int>& path,
                        int a, int b) {
  PathCtx c = make_ctx(g, path);
  if (a == b) return 0;
  if (!c.pset.test(a) || !c.pset.test(b))
    throw std::invalid_argument("connector ends must be path nodes");
  Mask128 allowed;  // internal candidates
  for (int v = 0; v < g.nodes(); ++v)
    if (!c.pset.test(v)) allowed.set(v);
  int best = 0;
  std::vector<int> cur{a};
  std::function<void(int, Mask128)> dfs = [&](int head, Mask128 visited) {
    if (g.adj(head).test(b)) {
      int len = static_cast<int>(cur.size()) + 1;
      if (len > best) best = len;
    }
    Mask128 cand = g.adj(head) & allowed.and_not(visited);
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      cur.push_back(v);
      Mask128 v2 = visited;
      v2.set(v);
      dfs(v, v2);
      cur.pop_back();
    }
  };
  dfs(a, Mask128());
  return best;
}

namespace {

// Recursive worker for path_cover. Operates on masks of unified ids inside
// the induced subgraph; returns complete = the current level is K_{g,g}.
struct CoverSolver {
  const BipartiteGraph& g;

  Mask128 nb(int v, Mask128 within) const { return g.adj(v) & within; }

  static std::vector<int> to_list(Mask128 m) {
    std::vector<int> out;
    for (int v = m.first(); v >= 0; v = m.next(v)) out.push_back(v);
    return out;
  }

  struct Out {
    bool complete = false;
    std::vector<std::vector<int>> paths;
  };

  Out solve(Mask128 amask, Mask128 bmask) {
    int gsize = bmask.count();
    std::vector<int> B = to_list(bmask);
    if (gsize == 2) return base2(amask, B[0], B[1]);

    int b = B[0];
    int a = nb(b, amask).first();
    Mask128 bprime = bmask;
    bprime.clear(b);
    Mask128 aprime;
    for (int v = bprime.first(); v >= 0; v = bprime.next(v))
      aprime |= nb(v, amask);
    aprime.clear(a);

    Out sub = solve(aprime, bprime);
    if (sub.complete) {
      // Every b' is also adjacent to a; b's neighbors decide the shape.
      Mask128 core = aprime;
      core.set(a);
      Mask128 bnb = nb(b, amask);
      if (bnb.is_subset_of(core)) {
        Out out;
        out.complete = true;
        return out;
      }
      int ap = bnb.and_not(core).first();
      std::vector<int> Bp = to_list(bprime), Ap = to_list(aprime);
      Out out;
      if ((bnb & aprime).any()) {
        int cnode = (bnb & aprime).first();
        std::vector<int> arest;
        for (int v : Ap)
          if (v != cnode) arest.push_back(v);
        std::vector<int> pathv{a};
        for (size_t i = 0; i < Bp.size(); ++i) {
          pathv.push_back(Bp[i]);
          pathv.push_back(i < arest.size() ? arest[i] : cnode);
        }
        pathv.push_back(b);
        pathv.push_back(ap);
        out.paths.push_back(std::move(pathv));
      } else if (bnb.test(a)) {
        std::vector<int> pathv;
        for (size_t i = 0; i < Bp.size(); ++i) {
          pathv.push_back(Ap[i]);
          pathv.push_back(Bp[i]);
        }
        pathv.push_back(a);
        pathv.push_back(b);
        pathv.push_back(ap);
        out.paths.push_back(std::move(pathv));
      } else {
        // b only attaches outside the K block: cover it separately.
        Mask128 outs = bnb.and_not(core);
        int a1 = outs.first();
        int a2 = outs.next(a1);
        if (a2 < 0) throw std::logic_error("cover: missing second end");
        std::vector<int> zig{a};
        for (size_t i = 0; i < Bp.size(); ++i) {
          zig.push_back(Bp[i]);
          zig.push_back(Ap[i]);
        }
        out.paths.push_back(std::move(zig));
        out.paths.push_back({a1, b, a2});
      }
      return out;
    }

    // Paths covering B' exist; place b.
    Mask128 onpaths;
    for (const auto& q : sub.paths)
      for (int v : q) onpaths.set(v);
    Mask128 bnb = nb(b, amask);
    Mask128 fresh = bnb.and_not(onpaths);
    fresh.clear(a);
    if (fresh.any()) {
      int ap = fresh.first();
      sub.paths.push_back({a, b, ap});
      return Out{false, std::move(sub.paths)};
    }
    for (auto& q : sub.paths) {
      if (bnb.test(q.front())) {
        std::vector<int> grown{a, b};
        grown.insert(grown.end(), q.begin(), q.end());
        q = std::move(grown);
        return Out{false, std::move(sub.paths)};
      }
      if (bnb.test(q.back())) {
        q.push_back(b);
        q.push_back(a);
        return Out{false, std::move(sub.paths)};
      }
    }
    throw std::logic_error("cover: no attachment for pivot");
  }

  Out base2(Mask128 amask, int b1, int b2) {
    Mask128 n1 = nb(b1, amask), n2 = nb(b2, amask);
    // K_{2,2}: both see the same two nodes and nothing else lives in A.
    if (amask.count() == 2 && n1 == amask && n2 == amask)
      return Out{true, {}};
    // P5 through both.
    Mask128 common = n1 & n2;
    for (int a2 = common.first(); a2 >= 0; a2 = common.next(a2))
      for (int a1 = n1.first(); a1 >= 0; a1 = n1.next(a1)) {
        if (a1 == a2) continue;
        Mask128 rest = n2;
        rest.clear(a1);
        rest.clear(a2);
        if (rest.any())
          return Out{false, {{a1, b1, a2, b2, rest.first()}}};
      }
    // Two disjoint cherries.
    for (int a1 = n1.first(); a1 >= 0; a1 = n1.next(a1))
      for (int a2 = n1.next(a1); a2 >= 0; a2 = n1.next(a2)) {
        Mask128 rest = n2;
        rest.clear(a1);
        rest.clear(a2);
        int a3 = rest.first();
        if (a3 < 0) continue;
        int a4 = rest.next(a3);
        if (a4 < 0) continue;
        return Out{false, {{a1, b1, a2}, {a3, b2, a4}}};
      }
    throw std::logic_error("cover: base case exhausted");
  }
};

}  // namespace

PathCoverResult path_cover(const BipartiteGraph& g, const std::vector<int>& A,
                           const std::vector<int>& B) {
  Mask128 amask, bmask;
  for (int v : A) {
    if (v < 0 || v >= g.nodes() || !g.is_x(v))
      throw std::invalid_argument("A must list X-side nodes");
    amask.set(v);
  }
  for (int v : B) {
    if (v < 0 || v >= g.nodes() || g.is_x(v))
      throw std::invalid_argument("B must list Y-side nodes");
    bmask.set(v);
  }
  int gsize = bmask.count();
  if (gsize < 2) throw std::invalid_argument("need |B| >= 2");
  for (int v = bmask.first(); v >= 0; v = bmask.next(v))
    if ((g.adj(v) & amask).count() < gsize)
      throw std::invalid_argument("degree of " + g.node_name(v) +
                                  " is below |B|");
  for (int v = amask.first(); v >= 0; v = amask.next(v))
    if (!(g.adj(v) & bmask).any())
      throw std::invalid_argument(g.node_name(v) + " is isolated");

  CoverSolver solver{g};
  auto out = solver.solve(amask, bmask);
  PathCoverResult res;
  res.complete_balanced = out.complete;
  res.paths = std::move(out.paths);
  return res;
}

bool check_lemma_c1(const BipartiteGraph& g, const std::vector<int>& A,
                    const std::vector<int>& B, int k) {
  if (k < 4) throw std::invalid_argument("need k >= 4");
  if (g.nx < k || g.ny < k)
    throw std::invalid_argument("need |X| >= k and |Y| >= k");
  if (static_cast<int>(A.size()) != k - 1)
    throw std::invalid_argument("need |A| = k-1");
  if (static_cast<int>(B.size()) != k - 2)
    throw std::invalid_argument("need |B| = k-2");
  Mask128 amask, bmask;
  for (int v : A) {
    if (v < 0 || v >= g.nodes() || !g.is_x(v))
      throw std::invalid_argument("A must list X-side nodes");
    amask.set(v);
  }
  for (int v : B) {
    if (v < 0 || v >= g.nodes() || g.is_x(v))
      throw std::invalid_argument("B must list Y-side nodes");
    bmask.set(v);
  }
  if (amask.count() != k - 1 || bmask.count() != k - 2)
    throw std::invalid_argument("A or B has repeated nodes");
  for (int a = amask.first(); a >= 0; a = amask.next(a))
    if (!bmask.is_subset_of(g.adj(a)))
      throw std::invalid_argument("A,B is not complete bipartite");
  if (!is_2_connected(g))
    throw std::invalid_argument("graph is not 2-connected");
  if (circumference(g) >= 2 * k)
    throw std::invalid_argument("graph has a cycle with >= 2k nodes");

  Mask128 U;
  for (int j = 0; j < g.ny; ++j) {
    int y = g.yid(j);
    if (bmask.test(y)) continue;
    U |= g.adj(y);
  }
  return U.count() == 2 || (U & amask).count() <= 1;
}

}  // namespace berge
