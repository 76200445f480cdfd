#include "berge/bigraph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace berge {

BipartiteGraph::BipartiteGraph(int nx_, int ny_) : nx(nx_), ny(ny_) {
  if (nx_ < 0 || nx_ > kMaxPart || ny_ < 0 || ny_ > kMaxPart)
    throw std::invalid_argument("part size out of range [0, 64]");
  xadj.assign(nx, 0);
  yadj.assign(ny, 0);
}

void BipartiteGraph::add_edge(int x, int y) {
  if (x < 0 || x >= nx || y < 0 || y >= ny)
    throw std::invalid_argument("edge endpoint out of range");
  xadj[x] |= std::uint64_t(1) << y;
  yadj[y] |= std::uint64_t(1) << x;
}

void BipartiteGraph::remove_edge(int x, int y) {
  if (x < 0 || x >= nx || y < 0 || y >= ny)
    throw std::invalid_argument("edge endpoint out of range");
  xadj[x] &= ~(std::uint64_t(1) << y);
  yadj[y] &= ~(std::uint64_t(1) << x);
}

bool BipartiteGraph::has_edge(int x, int y) const {
  return (xadj[x] >> y) & 1;
}

long long BipartiteGraph::edge_count() const {
  long long e = 0;
  for (int i = 0; i < nx; ++i) e += std::popcount(xadj[i]);
  return e;
}

Mask128 BipartiteGraph::adj(int id) const {
  Mask128 m;
  if (is_x(id)) {
    // Y neighbors live at unified ids nx..nx+ny-1: shift the 64-bit mask
    // left by nx inside the 128-bit space.
    std::uint64_t a = xadj[id];
    if (nx == 0) {
      m.lo = a;
    } else if (nx < 64) {
      m.lo = a << nx;
      m.hi = a >> (64 - nx);
    } else {
      m.hi = a;
    }
  } else {
    m.lo = yadj[id - nx];
  }
  return m;
}

Mask128 BipartiteGraph::x_mask() const {
  Mask128 m;
  for (int i = 0; i < nx; ++i) m.set(i);
  return m;
}

Mask128 BipartiteGraph::y_mask() const {
  Mask128 m;
  for (int j = 0; j < ny; ++j) m.set(nx + j);
  return m;
}

BipartiteGraph BipartiteGraph::transposed() const {
  BipartiteGraph t(ny, nx);
  t.xadj = yadj;
  t.yadj = xadj;
  return t;
}

std::string BipartiteGraph::node_name(int id) const {
  if (is_x(id)) return "x" + std::to_string(id + 1);
  return "y" + std::to_string(id - nx + 1);
}

SubGraph induced_subgraph(const BipartiteGraph& g, std::uint64_t keep_x,
                          std::uint64_t keep_y) {
  SubGraph s;
  std::vector<int> xmap(g.nx, -1), ymap(g.ny, -1);
  for (int i = 0; i < g.nx; ++i)
    if ((keep_x >> i) & 1) {
      xmap[i] = static_cast<int>(s.x_of.size());
      s.x_of.push_back(i);
    }
  for (int j = 0; j < g.ny; ++j)
    if ((keep_y >> j) & 1) {
      ymap[j] = static_cast<int>(s.y_of.size());
      s.y_of.push_back(j);
    }
  s.g = BipartiteGraph(static_cast<int>(s.x_of.size()),
                       static_cast<int>(s.y_of.size()));
  for (int i : s.x_of) {
    std::uint64_t nb = g.xadj[i] & keep_y;
    while (nb) {
      int j = std::countr_zero(nb);
      nb &= nb - 1;
      s.g.add_edge(xmap[i], ymap[j]);
    }
  }
  return s;
}

bool is_connected(const BipartiteGraph& g) {
  int total = g.nodes();
  if (total == 0) return true;
  Mask128 seen;
  std::vector<int> stack{0};
  seen.set(0);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    Mask128 nb = g.adj(v).and_not(seen);
    for (int u = nb.first(); u >= 0; u = nb.next(u)) {
      seen.set(u);
      stack.push_back(u);
    }
  }
  return seen.count() == total;
}

namespace {

// Lowpoint DFS over unified ids; blocks are sliced off an edge stack at
// articulation returns.
struct BlockDfs {
  const BipartiteGraph& g;
  std::vector<int> depth, low;
  std::vector<bool> cut;
  std::vector<std::pair<int, int>> estack;
  BlockDecomposition out;

  explicit BlockDfs(const BipartiteGraph& g_)
      : g(g_), depth(g_.nodes(), -1), low(g_.nodes(), 0),
        cut(g_.nodes(), false) {}

  void pop_block(std::pair<int, int> until) {
    BlockDecomposition::Block b;
    Mask128 members;
    while (true) {
      auto e = estack.back();
      estack.pop_back();
      int xi = g.is_x(e.first) ? e.first : e.second;
      int yi = g.is_x(e.first) ? e.second : e.first;
      b.edges.push_back({xi, yi - g.nx});
      members.set(e.first);
      members.set(e.second);
      if (e == until) break;
    }
    for (int v = members.first(); v >= 0; v = members.next(v)) {
      if (g.is_x(v))
        b.xs.push_back(v);
      else
        b.ys.push_back(v - g.nx);
    }
    std::sort(b.edges.begin(), b.edges.end());
    out.blocks.push_back(std::move(b));
  }

  void dfs(int v, int parent, int d) {
    depth[v] = low[v] = d;
    int children = 0;
    Mask128 nb = g.adj(v);
    for (int u = nb.first(); u >= 0; u = nb.next(u)) {
      if (u == parent) continue;
      if (depth[u] < 0) {
        std::pair<int, int> e{v, u};
        estack.push_back(e);
        ++children;
        dfs(u, v, d + 1);
        low[v] = std::min(low[v], low[u]);
        if (parent >= 0 && low[u] >= depth[v]) cut[v] = true;
        if (low[u] >= depth[v]) pop_block(e);
      } else if (depth[u] < depth[v]) {
        estack.push_back({v, u});
        low[v] = std::min(low[v], depth[u]);
      }
    }
    if (parent < 0 && children > 1) cut[v] = true;
  }
};

}  // namespace

BlockDecomposition block_decomposition(const BipartiteGraph& g) {
  BlockDfs dfs(g);
  for (int v = 0; v < g.nodes(); ++v)
    if (dfs.depth[v] < 0 && g.deg(v) > 0) dfs.dfs(v, -1, 0);
  for (int v = 0; v < g.nodes(); ++v)
    if (dfs.cut[v]) {
      if (g.is_x(v))
        dfs.out.cut_x.push_back(v);
      else
        dfs.out.cut_y.push_back(v - g.nx);
    }
  return std::move(dfs.out);
}

bool is_2_connected(const BipartiteGraph& g) {
  if (g.nodes() < 3) return false;
  if (!is_connected(g)) return false;
  auto bd = block_decomposition(g);
  return bd.cut_x.empty() && bd.cut_y.empty() && bd.blocks.size() == 1;
}

namespace {

// Unit-capacity max flow for two disjoint arms (node-split digraph).
struct FlowNet {
  struct Arc {
    int to, cap, rev;
  };
  std::vector<std::vector<Arc>> arcs;
  explicit FlowNet(int n) : arcs(n) {}
  void add(int a, int b, int cap) {
    arcs[a].push_back({b, cap, static_cast<int>(arcs[b].size())});
    arcs[b].push_back({a, 0, static_cast<int>(arcs[a].size()) - 1});
  }
  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> pred(arcs.size(), {-1, -1});
    std::queue<int> q;
    q.push(s);
    pred[s] = {s, -1};
    while (!q.empty() && pred[t].first < 0) {
      int v = q.front();
      q.pop();
      for (int i = 0; i < static_cast<int>(arcs[v].size()); ++i) {
        const Arc& a = arcs[v][i];
        if (a.cap > 0 && pred[a.to].first < 0) {
          pred[a.to] = {v, i};
          q.push(a.to);
        }
      }
    }
    if (pred[t].first < 0) return false;
    for (int v = t; v != s;) {
      auto [pv, pi] = pred[v];
      arcs[pv][pi].cap -= 1;
      arcs[arcs[pv][pi].to][arcs[pv][pi].rev].cap += 1;
      v = pv;
    }
    return true;
  }
};

}  // namespace

std::optional<std::vector<int>> find_uu_path(const BipartiteGraph& g,
                                             const std::vector<int>& U, int x,
                                             int y) {
  if (U.size() < 2) throw std::invalid_argument("need |U| >= 2");
  Mask128 uset;
  for (int u : U) uset.set(u);
  bool xin = uset.test(x), yin = uset.test(y);
  if (xin && yin) throw std::invalid_argument("edge already joins U to U");
  {
    int xi = g.is_x(x) ? x : y;
    int yi = g.is_x(x) ? y : x;
    if (g.is_x(yi) || !g.is_x(xi) || !g.has_edge(xi, yi - g.nx))
      throw std::invalid_argument("xy is not an edge");
  }

  int n = g.nodes();
  // Node-split ids: in(v) = 2v, out(v) = 2v+1; source 2n, sink 2n+1. An
  // end of the edge that already lies in U is an end of the path and is
  // excluded from the net entirely; the remaining U nodes are sinks and
  // carry no through-arcs, so no arm can pass a U node internally.
  FlowNet net(2 * n + 2);
  int S = 2 * n, T = 2 * n + 1;
  Mask128 excluded;
  if (xin) excluded.set(x);
  if (yin) excluded.set(y);
  for (int v = 0; v < n; ++v) {
    if (excluded.test(v)) continue;
    net.add(2 * v, 2 * v + 1, 1);
    if (uset.test(v)) net.add(2 * v + 1, T, 1);
  }
  for (int v = 0; v < n; ++v) {
    if (excluded.test(v) || uset.test(v)) continue;
    Mask128 nb = g.adj(v).and_not(excluded);
    for (int u = nb.first(); u >= 0; u = nb.next(u)) {
      if ((v == x && u == y) || (v == y && u == x)) continue;
      net.add(2 * v + 1, 2 * u, 1);
    }
  }
  int need = 0;
  if (!xin) {
    net.add(S, 2 * x, 1);
    ++need;
  }
  if (!yin) {
    net.add(S, 2 * y, 1);
    ++need;
  }
  int got = 0;
  while (got < need && net.augment(S, T)) ++got;
  if (got < need) return std::nullopt;

  // Each node carries at most one unit, so walking saturated forward arcs
  // from an arm start visits distinct nodes and must end at a sink.
  auto trace = [&](int start) {
    std::vector<int> arm{start};
    int v = start;
    while (!uset.test(v)) {
      int nxt = -1;
      for (const auto& a : net.arcs[2 * v + 1]) {
        if (a.to < 2 * n && a.to % 2 == 0 && a.cap == 0 &&
            net.arcs[a.to][a.rev].cap > 0) {
          nxt = a.to / 2;
          break;
        }
      }
      if (nxt < 0) return std::vector<int>{};
      arm.push_back(nxt);
      v = nxt;
    }
    return arm;
  };

  std::vector<int> left = xin ? std::vector<int>{x} : trace(x);
  std::vector<int> right = yin ? std::vector<int>{y} : trace(y);
  if (left.empty() || right.empty()) return std::nullopt;
  std::reverse(left.begin(), left.end());
  std::vector<int> path = left;
  path.insert(path.end(), right.begin(), right.end());
  return path;
}

namespace {

// Strips comments, yields non-blank lines with 1-based numbers.
struct LineReader {
  std::istream& in;
  int lineno = 0;
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++lineno;
      auto hash = raw.find('#');
      if (hash != std::string::npos) raw.erase(hash);
      size_t b = raw.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      size_t e = raw.find_last_not_of(" \t\r");
      out = raw.substr(b, e - b + 1);
      return true;
    }
    return false;
  }
};

}  // namespace

BipartiteGraph parse_bg(std::istream& in) {
  LineReader rd{in};
  std::string line;
  if (!rd.next(line))
    throw ParseError(rd.lineno ? rd.lineno : 1, "empty input");
  std::istringstream hdr(line);
  long long m = -1, n = -1, e = -1;
  if (!(hdr >> m >> n >> e) || (hdr >> std::ws, !hdr.eof()))
    throw ParseError(rd.lineno, "header must be three integers: |X| |Y| edges");
  if (m < 0 || m > BipartiteGraph::kMaxPart)
    throw ParseError(rd.lineno, "|X| out of range [0, 64]");
  if (n < 0 || n > BipartiteGraph::kMaxPart)
    throw ParseError(rd.lineno, "|Y| out of range [0, 64]");
  if (e < 0 || e > m * n) throw ParseError(rd.lineno, "bad edge count");
  BipartiteGraph g(static_cast<int>(m), static_cast<int>(n));
  for (long long i = 0; i < e; ++i) {
    if (!rd.next(line))
      throw ParseError(rd.lineno + 1, "expected " + std::to_string(e) +
                                          " edge lines, got " +
                                          std::to_string(i));
    std::istringstream es(line);
    long long a = 0, b = 0;
    if (!(es >> a >> b) || (es >> std::ws, !es.eof()))
      throw ParseError(rd.lineno, "edge line must be two integers");
    if (a < 1 || a > m) throw ParseError(rd.lineno, "X endpoint out of range");
    if (b < 1 || b > n) throw ParseError(rd.lineno, "Y endpoint out of range");
    if (g.has_edge(static_cast<int>(a - 1), static_cast<int>(b - 1)))
      throw ParseError(rd.lineno, "duplicate edge");
    g.add_edge(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (rd.next(line)) throw ParseError(rd.lineno, "trailing content");
  return g;
}

BipartiteGraph parse_bg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_bg(in);
}

void write_bg(std::ostream& out, const BipartiteGraph& g) {
  out << g.nx << ' ' << g.ny << ' ' << g.edge_count() << '\n';
  for (int i = 0; i < g.nx; ++i) {
    std::uint64_t nb = g.xadj[i];
    while (nb) {
      int j = std::countr_zero(nb);
      nb &= nb - 1;
      out << (i + 1) << ' ' << (j + 1) << '\n';
    }
  }
}

std::string to_bg_string(const BipartiteGraph& g) {
  std::ostringstream ss;
  write_bg(ss, g);
  return ss.str();
}

}  // namespace berge
