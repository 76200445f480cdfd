#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "berge/circumference.hpp"

namespace berge {

// A path v_1..v_p in a bipartite graph, decorated with the end
// neighborhoods and the crossing pairs. Positions are 1-based throughout
// (v_1 is the first path node), matching the usual path notation.
struct PathDecoration {
  std::vector<int> path;                    // unified node ids, in order
  std::vector<int> np_start;                // positions of N_P(v_1)
  std::vector<int> np_end;                  // positions of N_P(v_p)
  std::vector<std::pair<int, int>> pairs;   // crossing pairs (i, j), i < j
  bool formation = false;                   // pairs chain into one index chain
  std::vector<int> chain;                   // sorted union of pair indices
};

// Validates the path (nodes distinct, consecutive nodes adjacent, >= 2
// nodes) and computes the decoration. Throws std::invalid_argument on a bad
// path.
PathDecoration decorate_path(const BipartiteGraph& g,
                             const std::vector<int>& path);

// Crossing pairs of positions (i, j): i < j, v_i adjacent to v_p, v_j
// adjacent to v_1, and no position strictly between i and j carries a
// neighbor of either end. Listed in increasing order of i.
std::vector<std::pair<int, int>> crossing_pairs(const BipartiteGraph& g,
                                                const std::vector<int>& path);

// True when the path has at least one crossing pair and the pairs are the
// consecutive links of a single increasing index chain i_0 < ... < i_q.
bool is_crossing_formation(const BipartiteGraph& g,
                           const std::vector<int>& path);

// Saturated crossing formation: five conditions, each evaluated
// independently (diagnostics stay useful when an earlier part fails).
//  1 crossing formation;
//  2 both wings (prefix up to i_0, suffix from i_q, each together with the
//    chain) induce complete bipartite graphs;
//  3 with more than one pair, every pair has exactly 3 positions between;
//  4 v_2 has a neighbor v_1' off the path with N(v_1') = N(v_1), and
//    v_{p-1} has a neighbor v_p' off the path with N_P(v_p') = N_P(v_p);
//  5 neighborhood confinement around the wings (even positions h <= i_0-2
//    resp. h >= i_q+2, and the odd-position consequences).
struct ScfPart {
  bool holds = false;
  std::string detail;  // first violation, or empty
};
struct ScfReport {
  std::array<ScfPart, 5> parts;
  bool all() const {
    for (const auto& p : parts)
      if (!p.holds) return false;
    return true;
  }
};
ScfReport check_saturated_crossing_formation(const BipartiteGraph& g,
                                             const std::vector<int>& path);

// Constructive long cycle from a path in a 2-connected bipartite graph.
// With no crossing pairs the cycle has >= 2(d_P(v_1)+d_P(v_p)-1) nodes;
// with crossing pairs and ends in different parts >= min{p, same bound};
// ends in the same part >= min{p-1, 2(d_P(v_1)+d_P(v_p)-2)}. The cycle
// always covers N_P(v_1) and N_P(v_p). Throws when g is not 2-connected.
struct LongCycleResult {
  CycleWitness cycle;
  int applied_bound = 0;  // the case bound that applies to this input
  char case_id = '?';     // 'a' no crossing pairs, 'b' different parts,
                          // 'c' same part
  enum class Route { ears, crossing_jump, fallback_search } route =
      Route::ears;
};
LongCycleResult long_cycle_from_path(const BipartiteGraph& g,
                                     const std::vector<int>& path);

// Disintegration: keep only X* and Y*, then repeatedly delete nodes of
// degree <= alpha (per-side thresholds in the mixed variant). Returns the
// surviving node sets; the result is order-independent.
struct Core {
  std::uint64_t keep_x = 0, keep_y = 0;
  bool empty() const { return keep_x == 0 && keep_y == 0; }
};
Core disintegrate(const BipartiteGraph& g, int alpha, std::uint64_t xstar,
                  std::uint64_t ystar);
Core mixed_disintegrate(const BipartiteGraph& g, int alpha_x, int alpha_y,
                        std::uint64_t xstar, std::uint64_t ystar);

// For a path in saturated crossing formation: deleting the chain nodes
// separates the interiors of the left wing, the right wing, and the middle
// from one another. Throws when the path fails the SCF check.
bool separation_check(const BipartiteGraph& g, const std::vector<int>& path);

// Longest connector between two path nodes that is internally disjoint
// from the path (ends a, b are path nodes; internal nodes off the path).
// Returns its node count, 0 when none exists.
int max_connector_nodes(const BipartiteGraph& g, const std::vector<int>& path,
                        int a, int b);

// Path cover of B (Y-side subset) by disjoint paths with both ends in A
// (X-side subset), for graphs where every b in B has degree >= |B| >= 2 and
// no node of A u B is isolated; alternatively reports that the induced
// graph is exactly K_{g,g}. Throws std::invalid_argument when a
// precondition fails, naming the offending node.
struct PathCoverResult {
  bool complete_balanced = false;          // induced graph is K_{g,g}
  std::vector<std::vector<int>> paths;     // unified ids; empty when K_{g,g}
};
PathCoverResult path_cover(const BipartiteGraph& g, const std::vector<int>& A,
                           const std::vector<int>& B);

// Neighborhood dichotomy for a complete bipartite K_{k-1,k-2} inside a
// 2-connected bipartite graph with every cycle below 2k nodes: the
// vertices of Y-B see either exactly 2 distinct neighbors in total, or at
// most 1 inside A. A is an X-side list (|A| = k-1), B a Y-side list
// (|B| = k-2). Throws when a hypothesis fails.
bool check_lemma_c1(const BipartiteGraph& g, const std::vector<int>& A,
                    const std::vector<int>& B, int k);

}  // namespace berge
