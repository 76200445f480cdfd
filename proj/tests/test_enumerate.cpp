#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "berge/circumference.hpp"
#include "berge/enumerate.hpp"
#include "doctest.h"

using namespace berge;

namespace {

CampaignSpec rgraph_spec() {
  CampaignSpec s;
  s.klass = InstanceClass::rgraph;
  s.n = 6;
  s.r = 5;
  s.k = 4;
  s.theorem = "eg-full";
  return s;
}

void check_same_census(const CensusResult& a, const CensusResult& b) {
  CHECK(a.scanned == b.scanned);
  CHECK(a.applicable == b.applicable);
  CHECK(a.holds == b.holds);
  REQUIRE(a.violations.size() == b.violations.size());
  for (size_t i = 0; i < a.violations.size(); ++i) {
    CHECK(a.violations[i].instance == b.violations[i].instance);
    CHECK(a.violations[i].count == b.violations[i].count);
    CHECK(a.violations[i].bound == b.violations[i].bound);
  }
  REQUIRE(a.tight.size() == b.tight.size());
  for (size_t i = 0; i < a.tight.size(); ++i) {
    CHECK(a.tight[i].instance == b.tight[i].instance);
    CHECK(a.tight[i].klass == b.tight[i].klass);
  }
}

}  // namespace

TEST_CASE("labeled instance counts") {
  CampaignSpec s = rgraph_spec();
  CHECK(count_labeled_instances(s) == 64);  // 2^C(6,5)
  s.klass = InstanceClass::multi;
  s.max_mult = 2;
  CHECK(count_labeled_instances(s) == 729);  // 3^6
  s.max_mult = 0;
  CHECK_THROWS_AS(count_labeled_instances(s), std::invalid_argument);

  CampaignSpec f;
  f.klass = InstanceClass::frame;
  f.m = 3;
  f.n = 3;
  CHECK(count_labeled_instances(f) == 512);  // 2^(3*3)
  f.m = 7;
  f.n = 9;
  CHECK(count_labeled_instances(f) == std::uint64_t(1) << 63);
  f.m = 8;
  f.n = 8;
  CHECK_THROWS_AS(count_labeled_instances(f), std::overflow_error);
  f.m = -1;
  CHECK_THROWS_AS(count_labeled_instances(f), std::invalid_argument);
}

TEST_CASE("enumeration order is the little-endian mixed radix") {
  CampaignSpec s = rgraph_spec();
  std::vector<MultiHypergraph> seen;
  enumerate_hypergraphs(s, 0, 4, [&](const MultiHypergraph& h, std::uint64_t) {
    seen.push_back(h);
    return true;
  });
  REQUIRE(seen.size() == 4);
  CHECK(seen[0].edge_count() == 0);
  REQUIRE(seen[1].edge_count() == 1);
  CHECK(seen[1].edges[0] == std::vector<int>{0, 1, 2, 3, 4});
  REQUIRE(seen[2].edge_count() == 1);
  CHECK(seen[2].edges[0] == std::vector<int>{0, 1, 2, 3, 5});
  REQUIRE(seen[3].edge_count() == 2);
  CHECK(seen[3].edges[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(seen[3].edges[1] == std::vector<int>{0, 1, 2, 3, 5});

  // Multiplicity digits come before the next slot.
  s.klass = InstanceClass::multi;
  s.max_mult = 2;
  std::vector<MultiHypergraph> multi;
  enumerate_hypergraphs(s, 2, 6, [&](const MultiHypergraph& h, std::uint64_t) {
    multi.push_back(h);
    return true;
  });
  REQUIRE(multi.size() == 4);
  CHECK(multi[0].edge_count() == 2);  // idx 2: first slot doubled
  CHECK(multi[0].edges[0] == multi[0].edges[1]);
  CHECK(multi[1].edge_count() == 1);  // idx 3: second slot once
  CHECK(multi[1].edges[0] == std::vector<int>{0, 1, 2, 3, 5});
  CHECK(multi[3].edge_count() == 3);  // idx 5 = 2 + 1*3
  CHECK(multi[3].max_multiplicity() == 2);
}

TEST_CASE("enumeration range checks and early stop") {
  CampaignSpec s = rgraph_spec();
  auto nop = [](const MultiHypergraph&, std::uint64_t) { return true; };
  CHECK_THROWS_AS(enumerate_hypergraphs(s, 0, 65, nop), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_hypergraphs(s, 5, 4, nop), std::invalid_argument);
  int calls = 0;
  enumerate_hypergraphs(s, 0, 64, [&](const MultiHypergraph&, std::uint64_t) {
    return ++calls < 3;
  });
  CHECK(calls == 3);
}

TEST_CASE("frame instances decode the adjacency bits") {
  CampaignSpec f;
  f.klass = InstanceClass::frame;
  f.m = 2;
  f.n = 3;
  f.r = 5;
  f.k = 4;
  f.theorem = "t2";
  // Index bit j*n + v puts vertex v into slot j. 35 = 0b100011: slot 0
  // holds {0, 1}, slot 1 holds {2}.
  std::vector<MultiHypergraph> seen;
  enumerate_hypergraphs(f, 35, 36, [&](const MultiHypergraph& h, std::uint64_t) {
    seen.push_back(h);
    return true;
  });
  REQUIRE(seen.size() == 1);
  REQUIRE(seen[0].edge_count() == 2);
  CHECK(seen[0].edges[0] == std::vector<int>{0, 1});
  CHECK(seen[0].edges[1] == std::vector<int>{2});
  // Index 8 = bit 3 only: slot 0 empty, slot 1 holds {0}.
  enumerate_hypergraphs(f, 8, 9, [&](const MultiHypergraph& h, std::uint64_t) {
    seen.push_back(h);
    return true;
  });
  REQUIRE(seen.size() == 2);
  CHECK(seen[1].edges[0].empty());
  CHECK(seen[1].edges[1] == std::vector<int>{0});
}

TEST_CASE("uniform census at six vertices") {
  CensusResult res = run_campaign(rgraph_spec());
  CHECK(res.scanned == 64);
  CHECK(res.applicable == 42);  // up to three of the six possible edges
  CHECK(res.holds == 42);
  CHECK(res.violations.empty());
  CHECK(res.tight.size() == 20);  // exactly the three-edge subsets
  for (const auto& t : res.tight) CHECK(t.klass == ExtremalClass::block_tree);
  std::set<std::string> distinct;
  for (const auto& t : res.tight) distinct.insert(t.instance);
  CHECK(distinct.size() == 20);
}

TEST_CASE("multiplicity census at six vertices") {
  CampaignSpec s = rgraph_spec();
  s.klass = InstanceClass::multi;
  s.max_mult = 2;
  CensusResult res = run_campaign(s);
  CHECK(res.scanned == 729);
  CHECK(res.applicable == 78);  // 1 + 6 + 21 + 50 by total multiplicity
  CHECK(res.holds == 78);
  CHECK(res.violations.empty());
  CHECK(res.tight.size() == 50);
  for (const auto& t : res.tight) CHECK(t.klass == ExtremalClass::block_tree);
}

TEST_CASE("shard count never changes the merged result") {
  CampaignSpec s = rgraph_spec();
  s.klass = InstanceClass::multi;
  s.max_mult = 2;
  CensusResult one = run_campaign(s);
  s.shards = 3;
  CensusResult three = run_campaign(s);
  s.shards = 8;
  CensusResult eight = run_campaign(s);
  check_same_census(one, three);
  check_same_census(one, eight);

  // Running the shards one at a time and merging by hand gives the same
  // census again.
  s.shards = 3;
  CensusResult manual;
  for (int i = 0; i < 3; ++i) {
    s.shard_index = i;
    manual.merge(run_campaign(s));
  }
  check_same_census(one, manual);
  s.shard_index = 5;
  CHECK_THROWS_AS(run_campaign(s), std::invalid_argument);
}

TEST_CASE("frame census stays applicable and untight") {
  CampaignSpec f;
  f.klass = InstanceClass::frame;
  f.m = 2;
  f.n = 3;
  f.r = 5;
  f.k = 4;
  f.theorem = "t2";
  CensusResult res = run_campaign(f);
  CHECK(res.scanned == 64);
  CHECK(res.applicable == 64);  // every 2x3 frame misses the degree target
  CHECK(res.holds == 64);
  CHECK(res.violations.empty());
  CHECK(res.tight.empty());

  f.theorem = "egbgr2";
  CensusResult gated = run_campaign(f);
  CHECK(gated.scanned == 64);
  CHECK(gated.applicable == 0);  // m = 2 < k closes the gate everywhere
  CHECK(gated.violations.empty());
}

TEST_CASE("prune keeps only descending degree sequences") {
  CampaignSpec s = rgraph_spec();
  s.prune = true;
  CensusResult res = run_campaign(s);
  // Each 5-edge is the complement of one vertex, so degrees are
  // non-increasing exactly when the complemented vertices form a suffix:
  // one survivor per edge count, seven in all, one of them tight.
  CHECK(res.scanned == 7);
  CHECK(res.applicable == 4);
  CHECK(res.violations.empty());
  REQUIRE(res.tight.size() == 1);
  CHECK(res.tight[0].klass == ExtremalClass::block_tree);
}

TEST_CASE("budget gates both campaign and shard runs") {
  CampaignSpec s = rgraph_spec();
  s.budget = 10;
  CHECK_THROWS_WITH_AS(run_campaign(s),
                       "campaign of 64 instances exceeds the budget (set "
                       "BERGE_LAB_BUDGET to raise)",
                       std::invalid_argument);
  setenv("BERGE_LAB_BUDGET", "64", 1);
  CHECK_NOTHROW(run_campaign(s));
  setenv("BERGE_LAB_BUDGET", "16", 1);
  CHECK_THROWS_AS(run_campaign(s), std::invalid_argument);
  s.shards = 8;
  s.shard_index = 0;  // 8 instances fit under the 16 budget
  CHECK_NOTHROW(run_campaign(s));
  setenv("BERGE_LAB_BUDGET", "notanumber", 1);
  s.shard_index = -1;
  s.shards = 1;
  CHECK_THROWS_AS(run_campaign(s), std::invalid_argument);  // back to 10
  unsetenv("BERGE_LAB_BUDGET");
  s.budget = 100;
  CHECK_NOTHROW(run_campaign(s));
}

TEST_CASE("census merge adds fields and concatenates records") {
  CensusResult a;
  a.scanned = 10;
  a.applicable = 4;
  a.holds = 3;
  a.violations.push_back({"v1", 7, "13/2"});
  a.tight.push_back({"t1", ExtremalClass::block_tree});
  CensusResult b;
  b.scanned = 5;
  b.applicable = 2;
  b.holds = 2;
  b.tight.push_back({"t2", ExtremalClass::other});
  a.merge(b);
  CHECK(a.scanned == 15);
  CHECK(a.applicable == 6);
  CHECK(a.holds == 5);
  REQUIRE(a.violations.size() == 1);
  CHECK(a.violations[0].instance == "v1");
  REQUIRE(a.tight.size() == 2);
  CHECK(a.tight[0].instance == "t1");
  CHECK(a.tight[1].klass == ExtremalClass::other);
}

TEST_CASE("conjecture scan is exhaustive at small slot counts") {
  ConjectureScan scan = conjecture_scan(4, 6, 0, 1);
  CHECK(scan.scanned == 32768);  // 2^C(6,4)
  CHECK(scan.consistent);
  CHECK(scan.best_count == 3);
  CHECK(scan.bound == Rat(15, 4));
  std::istringstream is(scan.best_instance);
  MultiHypergraph best = parse_hg(is);
  CHECK(best.edge_count() == 3);
  CHECK_FALSE(has_berge_cycle_at_least(best, 4));
}

TEST_CASE("conjecture scan samples deterministically past the cutoff") {
  ConjectureScan a = conjecture_scan(4, 7, 25, 123);
  CHECK(a.scanned == 25);
  CHECK(a.consistent);
  CHECK(a.best_count >= 1);
  ConjectureScan b = conjecture_scan(4, 7, 25, 123);
  CHECK(a.best_count == b.best_count);
  CHECK(a.best_instance == b.best_instance);
  ConjectureScan c = conjecture_scan(4, 7, 25, 999);
  CHECK(c.consistent);
  CHECK_THROWS_AS(conjecture_scan(1, 5, 0, 0), std::invalid_argument);
}
