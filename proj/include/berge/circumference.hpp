#pragma once

#include <optional>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

// Longest cycle / longest path witnesses hold unified node ids of the
// bipartite graph they were computed on. Cycle nodes are in cyclic order
// (first node is the smallest id on the cycle); path nodes in path order.
struct CycleWitness {
  std::vector<int> nodes;
  int length() const { return static_cast<int>(nodes.size()); }
  bool empty() const { return nodes.empty(); }
};
struct PathWitness {
  std::vector<int> nodes;
  int length_edges() const {
    return nodes.empty() ? 0 : static_cast<int>(nodes.size()) - 1;
  }
};

bool validate_cycle(const BipartiteGraph& g, const CycleWitness& w);
bool validate_path(const BipartiteGraph& g, const PathWitness& w);

// Number of nodes on a longest cycle; 0 when acyclic. Exact branch-and-bound
// over node bitmasks with reachability pruning.
int circumference(const BipartiteGraph& g);
CycleWitness longest_cycle(const BipartiteGraph& g);
// Early-exit threshold query: is there a cycle with >= len nodes?
bool has_cycle_at_least(const BipartiteGraph& g, int len);

// Longest path by node count (>= 1 node when the graph has nodes).
PathWitness longest_path(const BipartiteGraph& g);
// Longest path with both ends in X.
PathWitness longest_path_ends_in_x(const BipartiteGraph& g);
// Is there an a..b path with at least min_nodes nodes? (unified ids)
bool has_path_at_least(const BipartiteGraph& g, int a, int b, int min_nodes);

// Berge circumference: longest Berge cycle of H = circumference of the
// incidence graph halved. 0 when H has no Berge cycle.
int berge_circumference(const MultiHypergraph& h);
std::optional<BergeWitness> berge_circumference_witness(const MultiHypergraph& h);
bool has_berge_cycle_at_least(const MultiHypergraph& h, int k);
// Longest Berge path length (number of slots used), via the longest
// incidence path with both ends on the vertex side.
int longest_berge_path(const MultiHypergraph& h);
std::optional<BergeWitness> longest_berge_path_witness(const MultiHypergraph& h);

// Independent check used to cross-examine the incidence route: backtracks
// directly over vertex/slot witnesses and never builds the incidence graph.
int direct_berge_circumference(const MultiHypergraph& h);

// Plain exhaustive longest-cycle search without the bitmask machinery;
// slow, used as the campaign cross-check oracle for bipartite instances.
int oracle_circumference(const BipartiteGraph& g);

// 2k-saturation: c(g) < 2k and adding any missing X-Y edge creates a cycle
// with >= 2k nodes. Throws std::invalid_argument when c(g) >= 2k.
bool is_saturated(const BipartiteGraph& g, int k);
// Some missing edge whose addition keeps every cycle below 2k nodes;
// nullopt iff saturated. Same precondition as is_saturated.
std::optional<std::pair<int, int>> unsaturated_pair(const BipartiteGraph& g,
                                                    int k);
// Saturation closure: scan (x, y) pairs lexicographically, add the first
// pair that keeps c < 2k, restart; fixpoint is 2k-saturated.
BipartiteGraph saturate(const BipartiteGraph& g, int k);

}  // namespace berge
