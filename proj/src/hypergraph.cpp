#include "berge/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace berge {

MultiHypergraph::MultiHypergraph(int n_) : n(n_) {
  if (n_ < 0 || n_ > kMaxVertices)
    throw std::invalid_argument("vertex count out of range [0, 64]");
}

void MultiHypergraph::add_edge(std::vector<int> edge) {
  if (edge_count() >= kMaxEdges)
    throw std::invalid_argument("too many edges (cap 64)");
  std::sort(edge.begin(), edge.end());
  if (edge.empty()) throw std::invalid_argument("empty edge");
  for (size_t i = 0; i < edge.size(); ++i) {
    if (edge[i] < 0 || edge[i] >= n)
      throw std::invalid_argument("edge vertex out of range");
    if (i > 0 && edge[i] == edge[i - 1])
      throw std::invalid_argument("repeated vertex inside an edge");
  }
  edges.push_back(std::move(edge));
}

int MultiHypergraph::lower_rank() const {
  if (edges.empty()) return kNoEdges;
  size_t mn = edges[0].size();
  for (const auto& e : edges) mn = std::min(mn, e.size());
  return static_cast<int>(mn);
}

int MultiHypergraph::max_multiplicity() const {
  if (edges.empty()) return 0;
  std::map<std::vector<int>, int> m;
  int best = 0;
  for (const auto& e : edges) best = std::max(best, ++m[e]);
  return best;
}

bool MultiHypergraph::is_uniform(int r) const {
  for (const auto& e : edges)
    if (static_cast<int>(e.size()) != r) return false;
  return true;
}

int MultiHypergraph::vertex_degree(int v) const {
  int d = 0;
  for (const auto& e : edges)
    d += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
  return d;
}

BipartiteGraph incidence_graph(const MultiHypergraph& h) {
  BipartiteGraph g(h.n, h.edge_count());
  for (int j = 0; j < h.edge_count(); ++j)
    for (int v : h.edges[j]) g.add_edge(v, j);
  return g;
}

HyperblockDecomposition hyperblocks(const MultiHypergraph& h) {
  BipartiteGraph g = incidence_graph(h);
  BlockDecomposition bd = block_decomposition(g);
  HyperblockDecomposition out;
  out.connected = is_connected(g);
  out.cut_vertices = bd.cut_x;
  out.cut_slots = bd.cut_y;
  for (const auto& blk : bd.blocks) {
    Hyperblock hb;
    hb.vertices = blk.xs;
    hb.slots = blk.ys;
    hb.degenerate = blk.edges.size() == 1;
    // Incidences inside the block, grouped per slot in slot order.
    std::map<int, std::vector<int>> per_slot;
    for (auto [x, y] : blk.edges) per_slot[y].push_back(x);
    for (int s : hb.slots) {
      auto& vs = per_slot[s];
      std::sort(vs.begin(), vs.end());
      hb.restricted_edges.push_back(vs);
    }
    out.blocks.push_back(std::move(hb));
  }
  return out;
}

bool is_block(const MultiHypergraph& h, int r, int k) {
  if (h.n != r + 1) return false;
  if (h.edge_count() != k - 1) return false;
  if (h.lower_rank() < r) return false;
  return is_2_connected(incidence_graph(h));
}

bool is_block_tree(const MultiHypergraph& h, int r, int k) {
  HyperblockDecomposition hd = hyperblocks(h);
  if (!hd.connected) return false;
  if (!hd.cut_slots.empty()) return false;
  for (const auto& hb : hd.blocks) {
    MultiHypergraph piece(static_cast<int>(hb.vertices.size()));
    std::map<int, int> vmap;
    for (size_t i = 0; i < hb.vertices.size(); ++i)
      vmap[hb.vertices[i]] = static_cast<int>(i);
    for (const auto& e : hb.restricted_edges) {
      std::vector<int> re;
      for (int v : e) re.push_back(vmap[v]);
      piece.add_edge(std::move(re));
    }
    if (!is_block(piece, r, k)) return false;
  }
  return !hd.blocks.empty();
}

bool validate_berge_cycle(const MultiHypergraph& h, const BergeWitness& w) {
  size_t k = w.vertices.size();
  if (k < 2 || w.slots.size() != k) return false;
  std::vector<int> vs = w.vertices, ss = w.slots;
  std::sort(vs.begin(), vs.end());
  std::sort(ss.begin(), ss.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(ss.begin(), ss.end()) != ss.end()) return false;
  for (size_t i = 0; i < k; ++i) {
    int s = w.slots[i];
    if (s < 0 || s >= h.edge_count()) return false;
    const auto& e = h.edges[s];
    int a = w.vertices[i], b = w.vertices[(i + 1) % k];
    if (a < 0 || a >= h.n || b < 0 || b >= h.n) return false;
    if (!std::binary_search(e.begin(), e.end(), a)) return false;
    if (!std::binary_search(e.begin(), e.end(), b)) return false;
  }
  return true;
}

bool validate_berge_path(const MultiHypergraph& h, const BergeWitness& w) {
  size_t k = w.slots.size();
  if (w.vertices.size() != k + 1) return false;
  std::vector<int> vs = w.vertices, ss = w.slots;
  std::sort(vs.begin(), vs.end());
  std::sort(ss.begin(), ss.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  if (std::adjacent_find(ss.begin(), ss.end()) != ss.end()) return false;
  for (size_t i = 0; i < k; ++i) {
    int s = w.slots[i];
    if (s < 0 || s >= h.edge_count()) return false;
    const auto& e = h.edges[s];
    int a = w.vertices[i], b = w.vertices[i + 1];
    if (a < 0 || a >= h.n || b < 0 || b >= h.n) return false;
    if (!std::binary_search(e.begin(), e.end(), a)) return false;
    if (!std::binary_search(e.begin(), e.end(), b)) return false;
  }
  return true;
}

namespace {

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

MultiHypergraph parse_hg(std::istream& in) {
  LineReader rd{in};
  std::string line;
  if (!rd.next(line))
    throw ParseError(rd.lineno ? rd.lineno : 1, "empty input");
  std::istringstream hdr(line);
  long long n = -1, m = -1;
  if (!(hdr >> n >> m) || (hdr >> std::ws, !hdr.eof()))
    throw ParseError(rd.lineno, "header must be two integers: n m");
  if (n < 0 || n > MultiHypergraph::kMaxVertices)
    throw ParseError(rd.lineno, "vertex count out of range [0, 64]");
  if (m < 0 || m > MultiHypergraph::kMaxEdges)
    throw ParseError(rd.lineno, "edge count out of range [0, 64]");
  MultiHypergraph h(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!rd.next(line))
      throw ParseError(rd.lineno + 1, "expected " + std::to_string(m) +
                                          " edge lines, got " +
                                          std::to_string(i));
    std::istringstream es(line);
    std::vector<int> edge;
    long long v;
    while (es >> v) {
      if (v < 1 || v > n)
        throw ParseError(rd.lineno, "vertex out of range 1.." +
                                        std::to_string(n));
      edge.push_back(static_cast<int>(v - 1));
    }
    if (!es.eof()) throw ParseError(rd.lineno, "edge line must be integers");
    if (edge.empty()) throw ParseError(rd.lineno, "empty edge");
    std::vector<int> sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != edge)
      throw ParseError(rd.lineno, "edge vertices must be sorted");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw ParseError(rd.lineno, "repeated vertex inside an edge");
    h.add_edge(std::move(edge));
  }
  if (rd.next(line)) throw ParseError(rd.lineno, "trailing content");
  return h;
}

MultiHypergraph parse_hg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_hg(in);
}

void write_hg(std::ostream& out, const MultiHypergraph& h) {
  out << h.n << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges) {
    for (size_t i = 0; i < e.size(); ++i)
      out << (i ? " " : "") << (e[i] + 1);
    out << '\n';
  }
}

std::string to_hg_string(const MultiHypergraph& h) {
  std::ostringstream ss;
  write_hg(ss, h);
  return ss.str();
}

}  // namespace berge
