#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "berge/structure.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace berge;

namespace {

// Fixtures are described by path positions 1..p (odd positions on X, even
// on Y) plus extra off-path nodes. edge(i, j) adds the edge between the
// nodes at positions i (odd) and j (even).
struct Fixture {
  BipartiteGraph g;
  std::vector<int> path;  // unified ids of v_1..v_p

  Fixture(int p, int extra_x) {
    int nx = (p + 1) / 2 + extra_x;
    int ny = p / 2;
    g = BipartiteGraph(nx, ny);
    for (int pos = 1; pos <= p; ++pos) path.push_back(id(pos));
    for (int pos = 1; pos < p; ++pos) edge(pos, pos + 1);
  }
  int id(int pos) const {
    return pos % 2 == 1 ? (pos - 1) / 2 : g.nx + pos / 2 - 1;
  }
  void edge(int a, int b) {
    if (a % 2 == 0) std::swap(a, b);
    g.add_edge((a - 1) / 2, b / 2 - 1);
  }
  // Extra X node (0-based among the extras) adjacent to even positions.
  void extra(int idx, std::initializer_list<int> evens) {
    int x = (static_cast<int>(path.size()) + 1) / 2 + idx;
    for (int pos : evens) g.add_edge(x, pos / 2 - 1);
  }
};

// 11-node path with one crossing pair (4, 8), plus the saturation
// witnesses v12 ~ {2,4,8} and v13 ~ {4,8,10}.
Fixture fixture_a() {
  Fixture f(11, 2);
  f.edge(1, 4);
  f.edge(1, 8);
  f.edge(3, 8);
  f.edge(9, 4);
  f.edge(11, 8);
  f.edge(11, 4);
  f.extra(0, {2, 4, 8});
  f.extra(1, {4, 8, 10});
  return f;
}

// 15-node path with the two-pair chain (4, 8), (8, 12).
Fixture fixture_b() {
  Fixture f(15, 2);
  f.edge(1, 4);
  f.edge(1, 8);
  f.edge(1, 12);
  f.edge(15, 4);
  f.edge(15, 8);
  f.edge(15, 12);
  f.edge(3, 8);
  f.edge(3, 12);
  f.edge(13, 4);
  f.edge(13, 8);
  f.extra(0, {2, 4, 8, 12});
  f.extra(1, {4, 8, 12, 14});
  return f;
}

// 9-node path whose chain {2, 4, 8} has a gap of the wrong width.
Fixture fixture_c() {
  Fixture f(9, 0);
  f.edge(1, 4);
  f.edge(1, 8);
  f.edge(9, 2);
  f.edge(9, 4);
  return f;
}

// 11-node path with no crossing pairs: N_P(v_1) = {2,4} and
// N_P(v_11) = {8,10} stay apart; interior chords keep it 2-connected.
Fixture fixture_no_pairs() {
  Fixture f(11, 0);
  f.edge(1, 4);
  f.edge(11, 8);
  f.edge(3, 6);
  f.edge(5, 8);
  f.edge(7, 10);
  return f;
}

// Definitional crossing pairs, quadratic and independent of the library
// implementation.
std::vector<std::pair<int, int>> oracle_pairs(const BipartiteGraph& g,
                                              const std::vector<int>& path) {
  int p = static_cast<int>(path.size());
  auto n1 = g.adj(path.front());
  auto np = g.adj(path.back());
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) {
      if (!np.test(path[i - 1]) || !n1.test(path[j - 1])) continue;
      bool clean = true;
      for (int l = i + 1; l < j; ++l)
        if (n1.test(path[l - 1]) || np.test(path[l - 1])) clean = false;
      if (clean) out.push_back({i, j});
    }
  return out;
}

void check_cycle_result(const BipartiteGraph& g, const std::vector<int>& path,
                        const LongCycleResult& res) {
  REQUIRE(validate_cycle(g, res.cycle));
  CHECK(res.cycle.length() >= res.applied_bound);
  std::set<int> on_cycle(res.cycle.nodes.begin(), res.cycle.nodes.end());
  auto n1 = g.adj(path.front());
  auto np = g.adj(path.back());
  for (int v : path) {
    if (n1.test(v) || np.test(v)) CHECK(on_cycle.count(v) == 1);
  }
}

}  // namespace

TEST_CASE("decorate_path validates its input") {
  Fixture f = fixture_a();
  CHECK_THROWS_AS(decorate_path(f.g, {}), std::invalid_argument);
  CHECK_THROWS_AS(decorate_path(f.g, {0}), std::invalid_argument);
  CHECK_THROWS_AS(decorate_path(f.g, {0, 1}), std::invalid_argument);
  std::vector<int> rep = {0, f.g.nx + 0, 0};
  CHECK_THROWS_AS(decorate_path(f.g, rep), std::invalid_argument);
}

TEST_CASE("decoration of the one-pair fixture") {
  Fixture f = fixture_a();
  CHECK(is_2_connected(f.g));
  PathDecoration d = decorate_path(f.g, f.path);
  CHECK(d.np_start == std::vector<int>{2, 4, 8});
  CHECK(d.np_end == std::vector<int>{4, 8, 10});
  CHECK(d.pairs == std::vector<std::pair<int, int>>{{4, 8}});
  CHECK(d.formation);
  CHECK(d.chain == std::vector<int>{4, 8});
  CHECK(is_crossing_formation(f.g, f.path));
}

TEST_CASE("decoration of the two-pair fixture") {
  Fixture f = fixture_b();
  CHECK(is_2_connected(f.g));
  PathDecoration d = decorate_path(f.g, f.path);
  CHECK(d.np_start == std::vector<int>{2, 4, 8, 12});
  CHECK(d.np_end == std::vector<int>{4, 8, 12, 14});
  CHECK(d.pairs == std::vector<std::pair<int, int>>{{4, 8}, {8, 12}});
  CHECK(d.formation);
  CHECK(d.chain == std::vector<int>{4, 8, 12});
}

TEST_CASE("a path whose pairs do not chain") {
  // C6 traversed fully: marked positions {1,2} and {5,6} give two pairs
  // that do not link up.
  BipartiteGraph g(3, 3);
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  g.add_edge(1, 1);
  g.add_edge(2, 1);
  g.add_edge(2, 2);
  g.add_edge(0, 2);
  std::vector<int> path = {0, 3, 1, 4, 2, 5};
  PathDecoration d = decorate_path(g, path);
  CHECK(d.pairs == std::vector<std::pair<int, int>>{{1, 2}, {5, 6}});
  CHECK_FALSE(d.formation);
  CHECK_FALSE(is_crossing_formation(g, path));
}

TEST_CASE("crossing pairs match the definitional scan") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    BipartiteGraph g = testutil::random_2connected(rng, 5);
    PathWitness w = longest_path(g);
    if (w.nodes.size() < 2) continue;
    CAPTURE(to_bg_string(g));
    CHECK(crossing_pairs(g, w.nodes) == oracle_pairs(g, w.nodes));
  }
  Fixture fa = fixture_a();
  CHECK(crossing_pairs(fa.g, fa.path) == oracle_pairs(fa.g, fa.path));
  Fixture fb = fixture_b();
  CHECK(crossing_pairs(fb.g, fb.path) == oracle_pairs(fb.g, fb.path));
}

TEST_CASE("saturated crossing formation holds on both fixtures") {
  for (Fixture f : {fixture_a(), fixture_b()}) {
    ScfReport rep = check_saturated_crossing_formation(f.g, f.path);
    for (int i = 0; i < 5; ++i) {
      CAPTURE(i);
      CAPTURE(rep.parts[i].detail);
      CHECK(rep.parts[i].holds);
    }
    CHECK(rep.all());
  }
}

TEST_CASE("removing the start witness breaks exactly part 4") {
  Fixture f = fixture_a();
  f.g.remove_edge(6, 0);  // v12 - v2
  ScfReport rep = check_saturated_crossing_formation(f.g, f.path);
  CHECK(rep.parts[0].holds);
  CHECK(rep.parts[1].holds);
  CHECK(rep.parts[2].holds);
  CHECK_FALSE(rep.parts[3].holds);
  CHECK(rep.parts[3].detail.find("twin of v1") != std::string::npos);
  CHECK(rep.parts[4].holds);
  CHECK_FALSE(rep.all());
}

TEST_CASE("removing a wing edge breaks exactly part 2") {
  Fixture f = fixture_a();
  f.g.remove_edge(1, 3);  // v3 - v8
  ScfReport rep = check_saturated_crossing_formation(f.g, f.path);
  CHECK(rep.parts[0].holds);
  CHECK_FALSE(rep.parts[1].holds);
  CHECK_FALSE(rep.parts[1].detail.empty());
  CHECK(rep.parts[2].holds);
  CHECK(rep.parts[3].holds);
  CHECK(rep.parts[4].holds);
}

TEST_CASE("a mis-sized gap breaks part 3") {
  Fixture f = fixture_c();
  ScfReport rep = check_saturated_crossing_formation(f.g, f.path);
  CHECK(rep.parts[0].holds);
  CHECK(rep.parts[1].holds);
  CHECK_FALSE(rep.parts[2].holds);
  CHECK_FALSE(rep.parts[3].holds);  // no off-path witnesses here either
  CHECK(rep.parts[4].holds);
}

TEST_CASE("separation around the chain") {
  Fixture fa = fixture_a();
  CHECK(separation_check(fa.g, fa.path));
  Fixture fb = fixture_b();
  CHECK(separation_check(fb.g, fb.path));
  Fixture fc = fixture_c();
  CHECK_THROWS_AS(separation_check(fc.g, fc.path), std::invalid_argument);
}

TEST_CASE("max connector between chain nodes") {
  Fixture f = fixture_a();
  int v4 = f.id(4), v8 = f.id(8);
  CHECK(max_connector_nodes(f.g, f.path, v4, v8) == 3);
  CHECK(max_connector_nodes(f.g, f.path, f.id(2), f.id(6)) == 0);
  CHECK(max_connector_nodes(f.g, f.path, f.id(1), f.id(2)) == 2);
  CHECK(max_connector_nodes(f.g, f.path, v4, v4) == 0);
  CHECK_THROWS_AS(max_connector_nodes(f.g, f.path, v4, f.g.nx - 1),
                  std::invalid_argument);  // v13 is off the path
}

TEST_CASE("long cycle: crossing jump on the one-pair fixture") {
  Fixture f = fixture_a();
  LongCycleResult res = long_cycle_from_path(f.g, f.path);
  CHECK(res.case_id == 'c');  // both ends on X
  CHECK(res.applied_bound == 8);  // min{p-1, 2(3+3-2)}
  check_cycle_result(f.g, f.path, res);
}

TEST_CASE("long cycle: tie on the two-pair fixture") {
  Fixture f = fixture_b();
  LongCycleResult res = long_cycle_from_path(f.g, f.path);
  CHECK(res.case_id == 'c');
  CHECK(res.applied_bound == 12);  // min{14, 2(4+4-2)}
  check_cycle_result(f.g, f.path, res);
}

TEST_CASE("long cycle: ears route without crossing pairs") {
  Fixture f = fixture_no_pairs();
  REQUIRE(is_2_connected(f.g));
  REQUIRE(crossing_pairs(f.g, f.path).empty());
  LongCycleResult res = long_cycle_from_path(f.g, f.path);
  CHECK(res.case_id == 'a');
  CHECK(res.applied_bound == 6);  // 2(2+2-1)
  check_cycle_result(f.g, f.path, res);
  CHECK(res.cycle.length() >= 10);  // the ear chain reaches ten nodes
}

TEST_CASE("long cycle refuses graphs that are not 2-connected") {
  BipartiteGraph g(2, 1);
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  CHECK_THROWS_AS(long_cycle_from_path(g, {0, 2, 1}), std::invalid_argument);
}

TEST_CASE("long cycle on random paths in random graphs") {
  std::mt19937_64 rng(90);
  int trials = 0;
  while (trials < 250) {
    BipartiteGraph g = testutil::random_2connected(rng, 5);
    std::vector<int> path;
    // Greedy random path.
    int v = static_cast<int>(rng() % g.nodes());
    Mask128 used;
    path.push_back(v);
    used.set(v);
    for (;;) {
      Mask128 cand = g.adj(path.back()).and_not(used);
      int cnt = cand.count();
      if (cnt == 0) break;
      int pick = static_cast<int>(rng() % cnt);
      int u = cand.first();
      while (pick-- > 0) u = cand.next(u);
      path.push_back(u);
      used.set(u);
    }
    if (path.size() < 2) continue;
    ++trials;
    CAPTURE(to_bg_string(g));
    LongCycleResult res = long_cycle_from_path(g, path);
    check_cycle_result(g, path, res);
    // The case split is as documented.
    bool same_part = g.is_x(path.front()) == g.is_x(path.back());
    if (crossing_pairs(g, path).empty())
      CHECK(res.case_id == 'a');
    else
      CHECK(res.case_id == (same_part ? 'c' : 'b'));
  }
}

TEST_CASE("disintegration by hand on C6") {
  BipartiteGraph g(3, 3);
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  g.add_edge(1, 1);
  g.add_edge(2, 1);
  g.add_edge(2, 2);
  g.add_edge(0, 2);
  std::uint64_t all3 = 0b111;
  Core c1 = disintegrate(g, 1, all3, all3);
  CHECK(c1.keep_x == all3);
  CHECK(c1.keep_y == all3);
  Core c2 = disintegrate(g, 2, all3, all3);
  CHECK(c2.empty());
  // Restricting X* starves the rest.
  Core c3 = disintegrate(g, 1, 0b011, all3);
  CHECK(c3.empty());
}

TEST_CASE("disintegration agrees with randomized peeling orders") {
  std::mt19937_64 rng(333);
  for (int trial = 0; trial < 200; ++trial) {
    int nx = 1 + static_cast<int>(rng() % 6);
    int ny = 1 + static_cast<int>(rng() % 6);
    BipartiteGraph g = testutil::random_bipartite(rng, nx, ny, 0.5);
    int ax = static_cast<int>(rng() % 3);
    int ay = static_cast<int>(rng() % 3);
    std::uint64_t xstar = rng() & ((std::uint64_t(1) << nx) - 1);
    std::uint64_t ystar = rng() & ((std::uint64_t(1) << ny) - 1);
    Core lib = mixed_disintegrate(g, ax, ay, xstar, ystar);
    CAPTURE(to_bg_string(g));

    // Oracle: peel in five different random orders; all must agree.
    for (int round = 0; round < 5; ++round) {
      std::vector<char> ax_alive(nx, 0), ay_alive(ny, 0);
      for (int i = 0; i < nx; ++i) ax_alive[i] = (xstar >> i) & 1;
      for (int j = 0; j < ny; ++j) ay_alive[j] = (ystar >> j) & 1;
      auto deg = [&](bool isx, int i) {
        int d = 0;
        if (isx) {
          for (int j = 0; j < ny; ++j)
            if (ay_alive[j] && g.has_edge(i, j)) ++d;
        } else {
          for (int ii = 0; ii < nx; ++ii)
            if (ax_alive[ii] && g.has_edge(ii, i)) ++d;
        }
        return d;
      };
      bool change = true;
      while (change) {
        change = false;
        std::vector<std::pair<bool, int>> victims;
        for (int i = 0; i < nx; ++i)
          if (ax_alive[i] && deg(true, i) <= ax) victims.push_back({true, i});
        for (int j = 0; j < ny; ++j)
          if (ay_alive[j] && deg(false, j) <= ay)
            victims.push_back({false, j});
        if (victims.empty()) break;
        auto [isx, idx] = victims[rng() % victims.size()];
        (isx ? ax_alive[idx] : ay_alive[idx]) = 0;
        change = true;
      }
      std::uint64_t ox = 0, oy = 0;
      for (int i = 0; i < nx; ++i)
        if (ax_alive[i]) ox |= std::uint64_t(1) << i;
      for (int j = 0; j < ny; ++j)
        if (ay_alive[j]) oy |= std::uint64_t(1) << j;
      CHECK(lib.keep_x == ox);
      CHECK(lib.keep_y == oy);
    }

    // Idempotence: running again from the core changes nothing.
    Core again = mixed_disintegrate(g, ax, ay, lib.keep_x, lib.keep_y);
    CHECK(again.keep_x == lib.keep_x);
    CHECK(again.keep_y == lib.keep_y);

    // Monotone in the threshold: a stricter alpha keeps a subset.
    Core loose = mixed_disintegrate(g, std::max(0, ax - 1),
                                    std::max(0, ay - 1), xstar, ystar);
    CHECK((lib.keep_x & ~loose.keep_x) == 0);
    CHECK((lib.keep_y & ~loose.keep_y) == 0);

    // The single-threshold form is the diagonal of the mixed form.
    if (ax == ay) {
      Core single = disintegrate(g, ax, xstar, ystar);
      CHECK(single.keep_x == lib.keep_x);
      CHECK(single.keep_y == lib.keep_y);
    }
  }
}

TEST_CASE("path cover exhaustively for |B| = 2") {
  for (int na = 2; na <= 4; ++na) {
    int edges = na * 2;
    for (int mask = 0; mask < (1 << edges); ++mask) {
      BipartiteGraph g(na, 2);
      for (int e = 0; e < edges; ++e)
        if ((mask >> e) & 1) g.add_edge(e / 2, e % 2);
      std::vector<int> A, B{g.yid(0), g.yid(1)};
      for (int i = 0; i < na; ++i) A.push_back(i);

      bool precondition_ok = true;
      for (int j = 0; j < 2; ++j)
        if (g.ydeg(j) < 2) precondition_ok = false;
      for (int i = 0; i < na; ++i)
        if (g.xdeg(i) == 0) precondition_ok = false;
      if (!precondition_ok) {
        CHECK_THROWS_AS(path_cover(g, A, B), std::invalid_argument);
        continue;
      }

      CAPTURE(to_bg_string(g));
      PathCoverResult res = path_cover(g, A, B);
      if (res.complete_balanced) {
        CHECK(na == 2);
        CHECK(g.edge_count() == 4);
        continue;
      }
      // Validate the cover: disjoint paths, ends in A, B covered.
      std::set<int> used;
      std::set<int> covered_b;
      for (const auto& p : res.paths) {
        REQUIRE(p.size() >= 3);
        CHECK(std::count(A.begin(), A.end(), p.front()) == 1);
        CHECK(std::count(A.begin(), A.end(), p.back()) == 1);
        for (size_t i = 0; i + 1 < p.size(); ++i)
          CHECK(g.adj(p[i]).test(p[i + 1]));
        for (int v : p) {
          CHECK(used.insert(v).second);
          if (!g.is_x(v)) covered_b.insert(v);
        }
      }
      CHECK(covered_b == std::set<int>(B.begin(), B.end()));
    }
  }
}

TEST_CASE("path cover for |B| = 3 on a sample of shapes") {
  for (int na = 3; na <= 4; ++na) {
    int edges = na * 3;
    // March through a spread of masks instead of all 2^12.
    for (int mask = 0; mask < (1 << edges); mask += 7) {
      BipartiteGraph g(na, 3);
      for (int e = 0; e < edges; ++e)
        if ((mask >> e) & 1) g.add_edge(e / 3, e % 3);
      std::vector<int> A, B{g.yid(0), g.yid(1), g.yid(2)};
      for (int i = 0; i < na; ++i) A.push_back(i);
      bool ok = true;
      for (int j = 0; j < 3; ++j)
        if (g.ydeg(j) < 3) ok = false;
      for (int i = 0; i < na; ++i)
        if (g.xdeg(i) == 0) ok = false;
      if (!ok) continue;
      CAPTURE(to_bg_string(g));
      PathCoverResult res = path_cover(g, A, B);
      if (res.complete_balanced) {
        CHECK(na == 3);
        CHECK(g.edge_count() == 9);
        continue;
      }
      std::set<int> used, covered_b;
      for (const auto& p : res.paths) {
        REQUIRE(p.size() >= 3);
        CHECK(g.is_x(p.front()));
        CHECK(g.is_x(p.back()));
        for (size_t i = 0; i + 1 < p.size(); ++i)
          CHECK(g.adj(p[i]).test(p[i + 1]));
        for (int v : p) CHECK(used.insert(v).second);
        for (int v : p)
          if (!g.is_x(v)) covered_b.insert(v);
      }
      CHECK(covered_b == std::set<int>(B.begin(), B.end()));
    }
  }
}

TEST_CASE("path cover rejects bad inputs with named nodes") {
  BipartiteGraph g(3, 2);
  g.add_edge(0, 0);
  g.add_edge(1, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  // x3 is isolated inside (A, B).
  try {
    path_cover(g, {0, 1, 2}, {g.yid(0), g.yid(1)});
    FAIL("expected an exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("x3") != std::string::npos);
  }
  CHECK_THROWS_AS(path_cover(g, {0, 1}, {g.yid(0)}), std::invalid_argument);
  CHECK_THROWS_AS(path_cover(g, {g.yid(0)}, {g.yid(0), g.yid(1)}),
                  std::invalid_argument);
}

TEST_CASE("neighborhood dichotomy around a complete K_{3,2}") {
  // The book: x1..x4 complete to y1,y2; y3,y4 attached to x1,x2 only.
  BipartiteGraph g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) g.add_edge(i, j);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  REQUIRE(is_2_connected(g));
  REQUIRE(circumference(g) == 6);

  CHECK(check_lemma_c1(g, {0, 1, 2}, {g.yid(0), g.yid(1)}, 4));
  CHECK(check_lemma_c1(g, {1, 2, 3}, {g.yid(0), g.yid(1)}, 4));

  // Hypothesis violations throw.
  CHECK_THROWS_AS(check_lemma_c1(g, {0, 1}, {g.yid(0), g.yid(1)}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_lemma_c1(g, {0, 1, 2}, {g.yid(2), g.yid(3)}, 4),
                  std::invalid_argument);  // A-B not complete
  BipartiteGraph big(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) big.add_edge(i, j);
  CHECK_THROWS_AS(
      check_lemma_c1(big, {0, 1, 2}, {big.yid(0), big.yid(1)}, 4),
      std::invalid_argument);  // circumference too large
}
