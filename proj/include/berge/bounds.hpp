#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "berge/bigraph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// Exact rational with int64 parts; arithmetic goes through __int128 and
// throws std::overflow_error rather than wrapping. Always normalized
// (gcd 1, den > 0).
struct Rat {
  std::int64_t num = 0, den = 1;
  Rat() = default;
  Rat(std::int64_t n);  // NOLINT: implicit integer promotion is intended
  Rat(std::int64_t n, std::int64_t d);
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const;
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }
  std::string str() const;  // "7/3", or "7" when den == 1
};
Rat rat_max(const Rat& a, const Rat& b);

// A bipartite frame: graph plus the designated X-side subset X* whose
// deficiencies are counted, and the degree target r.
struct Frame {
  BipartiteGraph g;
  std::uint64_t xstar = 0;
  int r = 0;
};

// Deficiency of one X-node: max{0, r - deg}; total sums over X*.
int deficiency(const BipartiteGraph& g, int x, int r);
int deficiency_total(const Frame& f);

// Special blocks: blocks of the frame isomorphic to K_{k-1,r} whose
// (k-1)-side lies in X, is contained in X*, and each of whose X-nodes has
// its full neighborhood inside the block.
int special_block_count(const Frame& f, int k);

// Classification attached to a tight instance.
enum class ExtremalClass { none, block_tree, t1_family, other };
std::string extremal_class_name(ExtremalClass c);

// One theorem check: hypotheses gate, then compare the relevant count
// against the bound. "applicable" is false when a hypothesis fails (then
// holds is trivially true and the bound fields are still filled in).
struct HypothesisCheck {
  std::string name;
  bool pass = false;
};
struct VerdictReport {
  std::string theorem;
  bool applicable = false;
  bool holds = true;
  bool tight = false;                   // applicable, holds, count == bound
  std::int64_t count = 0;               // edges resp. |X*| resp. |X|
  Rat bound;
  ExtremalClass klass = ExtremalClass::none;
  std::vector<HypothesisCheck> hypotheses;  // every gate, in check order
  std::string to_text() const;          // key=value lines
  std::string to_json() const;
};

// Bound value by theorem id; D and Q default to 0 and only matter for the
// deficiency-weighted ids. Unknown id throws std::invalid_argument.
Rat bound_value(const std::string& theorem, std::int64_t n, int k, int r,
                std::int64_t D = 0, std::int64_t Q = 0);

// Hypergraph-level checks: eg-full, eg, gyori2, egblock, conjecture.
VerdictReport check_theorem(const MultiHypergraph& h,
                            const std::string& theorem, int k, int r);

// Frame-level checks: egbgr, egbgr2, main, t1, t2. For frames coming from
// a hypergraph the X side carries the edge slots.
VerdictReport check_theorem(const Frame& f, const std::string& theorem,
                            int k);

// All valid theorem ids, in documentation order.
const std::vector<std::string>& theorem_ids();

}  // namespace berge
