#pragma once

#include <string>
#include <vector>

#include "berge/bounds.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// The building block: r+1 vertices, and for each of k-1 chosen vertices
// the edge complementary to it (all other r vertices). With full_edges the
// k-1 edges are instead all equal to the whole vertex set, giving lower
// rank r+1. Requires k >= 2 and r >= k.
MultiHypergraph make_block(int r, int k, bool full_edges = false);

// Chain of b blocks glued vertex-to-vertex into a tree. Shapes: a path
// (each block hangs off the previous one) or a star (all hang off the
// first). The parents overload takes parents[i] in [0, i) for block i >= 1.
// Identities: n = b*r + 1, e = b*(k-1), and r*e = (k-1)*(n-1).
enum class TreeShape { path, star };
MultiHypergraph make_block_tree(int r, int k, int b,
                                TreeShape shape = TreeShape::path);
MultiHypergraph make_block_tree(int r, int k,
                                const std::vector<int>& parents);

// Star-like family: a core of r-1 vertices shared by every edge, each edge
// adding one of the remaining n-r+1 vertices. n >= r; m = n-r+1; the
// longest Berge cycle has fewer than r edges (circumference r-1 when the
// core cycles at all).
MultiHypergraph make_star(int n, int r);

// Odd-k family: vertices {a, b} plus t groups of r-2; each group yields
// one edge type {a, b} u group, taken with multiplicity (k-1)/2. Requires
// odd k, 3 <= k <= r+1, t >= 1. e = t*(k-1)/2 and the Berge circumference
// stays below k.
MultiHypergraph make_ht(int k, int r, int t);

// Sharpness family for the deficiency-weighted bound: s copies of
// K_{k-1,r} and t copies of K_{k-1,r+1} chained at Y-side cut nodes,
// returned as a frame with X* = X. Requires k >= 4, r >= k+1, s+t >= 1.
// The bound holds with equality, D = 0, Q = s.
Frame make_t1_family(int r, int k, int s, int t);

// Path-to-cycle lift: one new apex vertex added to every edge. A longest
// Berge path below k edges lifts to a Berge circumference below k+1.
MultiHypergraph lift_for_paths(const MultiHypergraph& h);

}  // namespace berge
