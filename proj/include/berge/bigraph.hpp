#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "berge/bits.hpp"
#include "berge/errors.hpp"

namespace berge {

// Simple bipartite graph with parts X (size nx <= 64) and Y (size ny <= 64).
// Nodes are addressed either per side (0-based x / y index) or by unified id:
// X node i has id i, Y node j has id nx + j. External text forms are 1-based
// ("x3", "y1"); everything internal is 0-based.
struct BipartiteGraph {
  static constexpr int kMaxPart = 64;

  int nx = 0, ny = 0;
  std::vector<std::uint64_t> xadj;  // xadj[i]: bitmask of Y neighbors of x_i
  std::vector<std::uint64_t> yadj;  // yadj[j]: bitmask of X neighbors of y_j

  BipartiteGraph() = default;
  BipartiteGraph(int nx_, int ny_);

  int nodes() const { return nx + ny; }
  bool is_x(int id) const { return id < nx; }
  int xid(int i) const { return i; }
  int yid(int j) const { return nx + j; }

  void add_edge(int x, int y);
  void remove_edge(int x, int y);
  bool has_edge(int x, int y) const;
  int xdeg(int i) const { return std::popcount(xadj[i]); }
  int ydeg(int j) const { return std::popcount(yadj[j]); }
  int deg(int id) const { return is_x(id) ? xdeg(id) : ydeg(id - nx); }
  long long edge_count() const;

  // Neighbors of a unified node id, as a unified-id mask.
  Mask128 adj(int id) const;
  // Unified-id mask of a whole part.
  Mask128 x_mask() const;
  Mask128 y_mask() const;

  // Same graph with the parts swapped (X' = Y, Y' = X).
  BipartiteGraph transposed() const;

  bool operator==(const BipartiteGraph&) const = default;

  // Render a unified id as "x3" / "y1" (1-based).
  std::string node_name(int id) const;
};

// Induced subgraph on a subset of each part, parts renumbered consecutively.
struct SubGraph {
  BipartiteGraph g;
  std::vector<int> x_of;  // new x index -> original x index
  std::vector<int> y_of;  // new y index -> original y index
};
SubGraph induced_subgraph(const BipartiteGraph& g, std::uint64_t keep_x,
                          std::uint64_t keep_y);

bool is_connected(const BipartiteGraph& g);
// Connected, at least 3 nodes, and no cut node.
bool is_2_connected(const BipartiteGraph& g);

// Biconnected components. Blocks partition the edges; a bridge forms a
// degenerate 2-node block. Isolated nodes belong to no block.
struct BlockDecomposition {
  struct Block {
    std::vector<int> xs, ys;                  // member nodes, per side (0-based)
    std::vector<std::pair<int, int>> edges;   // (x, y) pairs
  };
  std::vector<Block> blocks;
  std::vector<int> cut_x, cut_y;  // cut nodes, per side
};
BlockDecomposition block_decomposition(const BipartiteGraph& g);

// A U,U-path: both ends in U, no internal node in U, traversing the edge xy
// (unified ids). Returns the node sequence, or nullopt when no such path
// exists (possible only when g is not 2-connected).
// Preconditions: |U| >= 2, xy is an edge, not both of x,y in U.
std::optional<std::vector<int>> find_uu_path(const BipartiteGraph& g,
                                             const std::vector<int>& U, int x,
                                             int y);

// .bg format: header "m n e" (|X|, |Y|, edge count), then e lines "x y"
// (1-based). '#' starts a comment; blank lines are ignored.
BipartiteGraph parse_bg(std::istream& in);
BipartiteGraph parse_bg_file(const std::string& path);
void write_bg(std::ostream& out, const BipartiteGraph& g);
std::string to_bg_string(const BipartiteGraph& g);

}  // namespace berge
