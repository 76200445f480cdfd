#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "berge/bigraph.hpp"

namespace berge {

// Multi-hypergraph on n labeled vertices (0-based internally). Edges are
// sorted vertex lists; repeating a list models multiplicity. Capped at 64
// vertices and 64 edge slots so the incidence graph fits a BipartiteGraph.
struct MultiHypergraph {
  static constexpr int kMaxVertices = 64;
  static constexpr int kMaxEdges = 64;
  // lower_rank() of an edgeless hypergraph: every "each edge has >= r
  // vertices" hypothesis holds vacuously.
  static constexpr int kNoEdges = std::numeric_limits<int>::max();

  int n = 0;
  std::vector<std::vector<int>> edges;

  MultiHypergraph() = default;
  explicit MultiHypergraph(int n_);

  int edge_count() const { return static_cast<int>(edges.size()); }
  // Validates and appends one edge (sorted, distinct, in range).
  void add_edge(std::vector<int> edge);
  int lower_rank() const;        // min edge size; kNoEdges if edgeless
  int max_multiplicity() const;  // largest number of identical slots; 0 if edgeless
  bool is_uniform(int r) const;  // every edge has exactly r vertices
  int vertex_degree(int v) const;
};

// Incidence graph: part X = vertices of H, part Y = edge slots.
BipartiteGraph incidence_graph(const MultiHypergraph& h);

// Hyperblocks are the biconnected components of the incidence graph read
// back into hypergraph terms. Incidences always partition across blocks;
// an edge slot appears in more than one block exactly when the slot is a
// cut node of the incidence graph.
struct Hyperblock {
  std::vector<int> vertices;                       // hypergraph vertices
  std::vector<int> slots;                          // indices into h.edges
  std::vector<std::vector<int>> restricted_edges;  // slot incidences inside the block
  bool degenerate = false;                         // single incidence (a bridge)
};
struct HyperblockDecomposition {
  std::vector<Hyperblock> blocks;
  std::vector<int> cut_vertices;  // cut nodes on the vertex side
  std::vector<int> cut_slots;     // cut nodes on the edge-slot side
  bool connected = true;          // incidence graph connected (isolated
                                  // vertices make this false)
};
HyperblockDecomposition hyperblocks(const MultiHypergraph& h);

// Exactly r+1 vertices, exactly k-1 edges, lower rank >= r, and the
// incidence graph is 2-connected.
bool is_block(const MultiHypergraph& h, int r, int k);

// Connected, every hyperblock is a block in the sense above, and every cut
// node of the incidence graph is a hypergraph vertex.
bool is_block_tree(const MultiHypergraph& h, int r, int k);

// Witness for a Berge cycle (length k: k distinct vertices, k distinct
// slots, vertices[i] and vertices[i+1 mod k] both in slot i) or a Berge
// path (length k: k+1 distinct vertices, k distinct slots, vertices[i] and
// vertices[i+1] both in slot i).
struct BergeWitness {
  std::vector<int> vertices;
  std::vector<int> slots;
};
bool validate_berge_cycle(const MultiHypergraph& h, const BergeWitness& w);
bool validate_berge_path(const MultiHypergraph& h, const BergeWitness& w);

// .hg format: header "n m", then m lines of space-separated sorted 1-based
// vertices; duplicate lines model multiplicity. '#' starts a comment; blank
// lines are ignored.
MultiHypergraph parse_hg(std::istream& in);
MultiHypergraph parse_hg_file(const std::string& path);
void write_hg(std::ostream& out, const MultiHypergraph& h);
std::string to_hg_string(const MultiHypergraph& h);

}  // namespace berge
