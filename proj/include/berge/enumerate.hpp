#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "berge/bounds.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// What gets enumerated: r-uniform simple hypergraphs, r-uniform
// multi-hypergraphs with a multiplicity cap, or bipartite frames with a
// given X size.
enum class InstanceClass { rgraph, multi, frame };

struct CampaignSpec {
  InstanceClass klass = InstanceClass::rgraph;
  int n = 0;            // vertices (rgraph/multi) or |Y| (frame)
  int r = 0;
  int k = 0;
  int max_mult = 1;     // multi only: per-edge multiplicity cap
  int m = 0;            // frame only: |X|
  std::string theorem;
  int shards = 1;
  int shard_index = -1;  // run a single shard when >= 0
  bool prune = false;    // degree-sequence canonical filter
  std::uint64_t budget = 100000000;  // instance ceiling, overridable by env
};

struct Violation {
  std::string instance;  // serialized form
  std::int64_t count = 0;
  std::string bound;
};

struct TightRecord {
  std::string instance;
  ExtremalClass klass = ExtremalClass::none;
};

struct CensusResult {
  std::uint64_t scanned = 0;
  std::uint64_t applicable = 0;
  std::uint64_t holds = 0;
  std::vector<Violation> violations;
  std::vector<TightRecord> tight;
  double seconds = 0.0;
  void merge(const CensusResult& o);
};

// Number of labeled instances the campaign describes (before pruning):
// 2^C(n,r) for rgraph, (max_mult+1)^C(n,r) for multi. Throws
// std::overflow_error past 2^63.
std::uint64_t count_labeled_instances(const CampaignSpec& spec);

// Stream every instance of the class, in the fixed lexicographic order, to
// the callback; return false from the callback to stop early. index_lo and
// index_hi bound the instance index range served (half-open).
void enumerate_hypergraphs(const CampaignSpec& spec, std::uint64_t index_lo,
                           std::uint64_t index_hi,
                           const std::function<bool(const MultiHypergraph&,
                                                    std::uint64_t)>& cb);

// Full campaign: shard the index range, run shards on threads, merge in
// shard order (results are deterministic and independent of shard count).
// Every 500th instance is re-checked against an independent oracle;
// a mismatch aborts the campaign via std::logic_error.
CensusResult run_campaign(const CampaignSpec& spec);

// Consistency scan for the circumference-below-r conjecture at a fixed r:
// exhaustive when C(n,r) is small, otherwise seeded greedy-maximal
// sampling. Returns the worst (largest) edge count seen and the bound.
struct ConjectureScan {
  std::int64_t best_count = 0;
  Rat bound;
  std::string best_instance;
  bool consistent = true;
  std::uint64_t scanned = 0;
};
ConjectureScan conjecture_scan(int r, int n, std::uint64_t samples,
                               std::uint64_t seed);

}  // namespace berge
