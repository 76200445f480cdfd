#include "berge/constructions.hpp"

#include <stdexcept>

namespace berge {

namespace {

// One block's edges on a sorted vertex list bv (r+1 vertices): the
// complement of bv[i] for i = 0..k-2, or k-1 copies of the full list.
void add_block_edges(MultiHypergraph& h, const std::vector<int>& bv, int k,
                     bool full_edges) {
  for (int i = 0; i < k - 1; ++i) {
    std::vector<int> e;
    if (full_edges) {
      e = bv;
    } else {
      for (size_t j = 0; j < bv.size(); ++j)
        if (static_cast<int>(j) != i) e.push_back(bv[j]);
    }
    h.add_edge(std::move(e));
  }
}

}  // namespace

MultiHypergraph make_block(int r, int k, bool full_edges) {
  if (k < 2 || r < k) throw std::invalid_argument("need k >= 2 and r >= k");
  if (r + 1 > MultiHypergraph::kMaxVertices)
    throw std::invalid_argument("too many vertices (cap 64)");
  MultiHypergraph h(r + 1);
  std::vector<int> bv;
  for (int v = 0; v <= r; ++v) bv.push_back(v);
  add_block_edges(h, bv, k, full_edges);
  return h;
}

MultiHypergraph make_block_tree(int r, int k, int b, TreeShape shape) {
  if (b < 1) throw std::invalid_argument("need at least one block");
  std::vector<int> parents;
  for (int i = 1; i < b; ++i)
    parents.push_back(shape == TreeShape::path ? i - 1 : 0);
  return make_block_tree(r, k, parents);
}

MultiHypergraph make_block_tree(int r, int k,
                                const std::vector<int>& parents) {
  if (k < 2 || r < k) throw std::invalid_argument("need k >= 2 and r >= k");
  int b = static_cast<int>(parents.size()) + 1;
  for (int i = 1; i < b; ++i)
    if (parents[i - 1] < 0 || parents[i - 1] >= i)
      throw std::invalid_argument("parents[i] must lie in [0, i)");
  long long n = static_cast<long long>(b) * r + 1;
  if (n > MultiHypergraph::kMaxVertices ||
      static_cast<long long>(b) * (k - 1) > MultiHypergraph::kMaxEdges)
    throw std::invalid_argument("block tree exceeds the 64-node caps");

  MultiHypergraph h(static_cast<int>(n));
  std::vector<std::vector<int>> block_vertices(b);
  int next = 0;
  for (int i = 0; i < b; ++i) {
    std::vector<int> bv;
    if (i > 0) bv.push_back(block_vertices[parents[i - 1]].back());
    while (static_cast<int>(bv.size()) < r + 1) bv.push_back(next++);
    // Keep the list sorted: the inherited glue vertex is always smaller
    // than the fresh ones, so construction order already sorts it.
    block_vertices[i] = bv;
    add_block_edges(h, bv, k, false);
  }
  return h;
}

MultiHypergraph make_star(int n, int r) {
  if (r < 2 || n < r) throw std::invalid_argument("need n >= r >= 2");
  if (n > MultiHypergraph::kMaxVertices ||
      n - r + 1 > MultiHypergraph::kMaxEdges)
    throw std::invalid_argument("star exceeds the 64-node caps");
  MultiHypergraph h(n);
  std::vector<int> core;
  for (int v = n - r + 1; v < n; ++v) core.push_back(v);
  for (int i = 0; i <= n - r; ++i) {
    std::vector<int> e{i};
    e.insert(e.end(), core.begin(), core.end());
    h.add_edge(std::move(e));
  }
  return h;
}

MultiHypergraph make_ht(int k, int r, int t) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("need odd k >= 3");
  if (r < k - 1) throw std::invalid_argument("need r >= k-1");
  if (t < 1) throw std::invalid_argument("need t >= 1");
  long long n = 2 + static_cast<long long>(t) * (r - 2);
  long long e = static_cast<long long>(t) * (k - 1) / 2;
  if (n > MultiHypergraph::kMaxVertices || e > MultiHypergraph::kMaxEdges)
    throw std::invalid_argument("family exceeds the 64-node caps");
  MultiHypergraph h(static_cast<int>(n));
  for (int i = 0; i < t; ++i) {
    std::vector<int> edge{0, 1};
    int base = 2 + i * (r - 2);
    for (int v = base; v < base + r - 2; ++v) edge.push_back(v);
    for (int c = 0; c < (k - 1) / 2; ++c) h.add_edge(edge);
  }
  return h;
}

Frame make_t1_family(int r, int k, int s, int t) {
  if (k < 4 || r < k + 1)
    throw std::invalid_argument("need k >= 4 and r >= k+1");
  if (s < 0 || t < 0 || s + t < 1)
    throw std::invalid_argument("need s, t >= 0 with s + t >= 1");
  int blocks = s + t;
  long long m = static_cast<long long>(blocks) * (k - 1);
  long long n = static_cast<long long>(s) * (r - 1) +
                static_cast<long long>(t) * r + 1;
  if (m > BipartiteGraph::kMaxPart || n > BipartiteGraph::kMaxPart)
    throw std::invalid_argument("family exceeds the 64-per-part caps");

  Frame f;
  f.r = r;
  f.g = BipartiteGraph(static_cast<int>(m), static_cast<int>(n));
  int ybase = 0;
  for (int j = 0; j < blocks; ++j) {
    int ysize = j < s ? r : r + 1;  // K_{k-1,r} blocks first, then K_{k-1,r+1}
    for (int xi = j * (k - 1); xi < (j + 1) * (k - 1); ++xi)
      for (int yj = ybase; yj < ybase + ysize; ++yj) f.g.add_edge(xi, yj);
    ybase += ysize - 1;  // last Y node doubles as the next block's cut
  }
  f.xstar = m >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);
  return f;
}

MultiHypergraph lift_for_paths(const MultiHypergraph& h) {
  if (h.n + 1 > MultiHypergraph::kMaxVertices)
    throw std::invalid_argument("no room for the apex vertex (cap 64)");
  MultiHypergraph out(h.n + 1);
  for (const auto& e : h.edges) {
    std::vector<int> lifted = e;
    lifted.push_back(h.n);
    out.add_edge(std::move(lifted));
  }
  return out;
}

}  // namespace berge
