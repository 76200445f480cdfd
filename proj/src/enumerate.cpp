#include "berge/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "berge/circumference.hpp"

namespace berge {

namespace {

constexpr std::uint64_t kSpaceCap = std::uint64_t(1) << 63;

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  __int128 acc = 1;
  for (int i = 0; i < exp; ++i) {
    acc *= base;
    if (acc > static_cast<__int128>(kSpaceCap))
      throw std::overflow_error("instance space exceeds 2^63");
  }
  return static_cast<std::uint64_t>(acc);
}

// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> slot_list(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

int slot_count(const CampaignSpec& spec) {
  return static_cast<int>(slot_list(spec.n, spec.r).size());
}

}  // namespace

void CensusResult::merge(const CensusResult& o) {
  scanned += o.scanned;
  applicable += o.applicable;
  holds += o.holds;
  violations.insert(violations.end(), o.violations.begin(),
                    o.violations.end());
  tight.insert(tight.end(), o.tight.begin(), o.tight.end());
  seconds += o.seconds;
}

std::uint64_t count_labeled_instances(const CampaignSpec& spec) {
  switch (spec.klass) {
    case InstanceClass::rgraph:
      return checked_pow(2, slot_count(spec));
    case InstanceClass::multi:
      if (spec.max_mult < 1)
        throw std::invalid_argument("max_mult must be >= 1");
      return checked_pow(spec.max_mult + 1, slot_count(spec));
    case InstanceClass::frame:
      if (spec.m < 0 || spec.n < 0)
        throw std::invalid_argument("negative part size");
      return checked_pow(2, spec.m * spec.n);
  }
  throw std::invalid_argument("unknown instance class");
}

void enumerate_hypergraphs(const CampaignSpec& spec, std::uint64_t index_lo,
                           std::uint64_t index_hi,
                           const std::function<bool(const MultiHypergraph&,
                                                    std::uint64_t)>& cb) {
  std::uint64_t total = count_labeled_instances(spec);
  if (index_hi > total || index_lo > index_hi)
    throw std::invalid_argument("index range out of bounds");

  if (spec.klass == InstanceClass::frame) {
    // A frame instance is an arbitrary bipartite adjacency: slot j of the
    // carrier hypergraph holds the Y-neighborhood of x_j (possibly empty).
    for (std::uint64_t idx = index_lo; idx < index_hi; ++idx) {
      MultiHypergraph h(spec.n);
      for (int j = 0; j < spec.m; ++j) {
        std::vector<int> e;
        for (int v = 0; v < spec.n; ++v)
          if ((idx >> (static_cast<std::uint64_t>(j) * spec.n + v)) & 1)
            e.push_back(v);
        // Slots may be empty here (an X node with no neighbours), so bypass
        // the add_edge validation and push the sorted list directly.
        h.edges.push_back(std::move(e));
      }
      if (!cb(h, idx)) return;
    }
    return;
  }

  auto slots = slot_list(spec.n, spec.r);
  int C = static_cast<int>(slots.size());
  std::uint64_t base =
      spec.klass == InstanceClass::multi ? spec.max_mult + 1 : 2;
  for (std::uint64_t idx = index_lo; idx < index_hi; ++idx) {
    MultiHypergraph h(spec.n);
    std::uint64_t rest = idx;
    for (int j = 0; j < C; ++j) {
      int mult = static_cast<int>(rest % base);
      rest /= base;
      for (int c = 0; c < mult; ++c) h.add_edge(slots[j]);
    }
    if (!cb(h, idx)) return;
  }
}

namespace {

bool degree_sequence_canonical(const MultiHypergraph& h) {
  for (int v = 1; v < h.n; ++v)
    if (h.vertex_degree(v - 1) < h.vertex_degree(v)) return false;
  return true;
}

CensusResult run_shard(const CampaignSpec& spec, std::uint64_t lo,
                       std::uint64_t hi) {
  CensusResult res;
  auto start = std::chrono::steady_clock::now();
  enumerate_hypergraphs(
      spec, lo, hi, [&](const MultiHypergraph& h, std::uint64_t) {
        if (spec.prune && !degree_sequence_canonical(h)) return true;
        res.scanned++;
        VerdictReport rep;
        std::string instance;
        if (spec.klass == InstanceClass::frame) {
          Frame f;
          f.g = incidence_graph(h).transposed();
          f.r = spec.r;
          f.xstar = f.g.nx >= 64 ? ~std::uint64_t(0)
                                 : ((std::uint64_t(1) << f.g.nx) - 1);
          rep = check_theorem(f, spec.theorem, spec.k);
          if (res.scanned % 500 == 0 &&
              oracle_circumference(f.g) != circumference(f.g))
            throw std::logic_error("circumference oracle mismatch");
          instance = to_bg_string(f.g);
        } else {
          rep = check_theorem(h, spec.theorem, spec.k, spec.r);
          if (res.scanned % 500 == 0 &&
              direct_berge_circumference(h) != berge_circumference(h))
            throw std::logic_error("berge circumference oracle mismatch");
          instance = to_hg_string(h);
        }
        if (rep.applicable) {
          res.applicable++;
          if (rep.holds) {
            res.holds++;
            if (rep.tight) res.tight.push_back({instance, rep.klass});
          } else {
            res.violations.push_back(
                {instance, rep.count, rep.bound.str()});
          }
        }
        return true;
      });
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return res;
}

}  // namespace

CensusResult run_campaign(const CampaignSpec& spec) {
  if (spec.shards < 1) throw std::invalid_argument("need shards >= 1");
  std::uint64_t total = count_labeled_instances(spec);
  std::uint64_t budget = spec.budget;
  if (const char* env = std::getenv("BERGE_LAB_BUDGET")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) budget = v;
  }

  int shards = spec.shards;
  auto range_of = [&](int i) {
    std::uint64_t lo = total / shards * i + std::min<std::uint64_t>(
                                                total % shards, i);
    std::uint64_t len = total / shards + (i < static_cast<int>(total % shards)
                                              ? 1
                                              : 0);
    return std::pair<std::uint64_t, std::uint64_t>(lo, lo + len);
  };

  auto started = std::chrono::steady_clock::now();
  CensusResult out;
  if (spec.shard_index >= 0) {
    if (spec.shard_index >= shards)
      throw std::invalid_argument("shard index out of range");
    auto [lo, hi] = range_of(spec.shard_index);
    if (hi - lo > budget)
      throw std::invalid_argument(
          "shard of " + std::to_string(hi - lo) +
          " instances exceeds the budget (set BERGE_LAB_BUDGET to raise)");
    out = run_shard(spec, lo, hi);
  } else {
    if (total > budget)
      throw std::invalid_argument(
          "campaign of " + std::to_string(total) +
          " instances exceeds the budget (set BERGE_LAB_BUDGET to raise)");
    std::vector<CensusResult> parts(shards);
    std::vector<std::exception_ptr> errors(shards);
    std::vector<std::thread> workers;
    for (int i = 0; i < shards; ++i)
      workers.emplace_back([&, i] {
        try {
          auto [lo, hi] = range_of(i);
          parts[i] = run_shard(spec, lo, hi);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    for (auto& w : workers) w.join();
    for (int i = 0; i < shards; ++i)
      if (errors[i]) std::rethrow_exception(errors[i]);
    for (int i = 0; i < shards; ++i) out.merge(parts[i]);
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return out;
}

ConjectureScan conjecture_scan(int r, int n, std::uint64_t samples,
                               std::uint64_t seed) {
  if (r < 2 || n < 1) throw std::invalid_argument("need r >= 2 and n >= 1");
  ConjectureScan out;
  out.bound = bound_value("conjecture", n, 0, r);
  auto slots = slot_list(n, r);
  int C = static_cast<int>(slots.size());
  std::int64_t best = -1;
  MultiHypergraph best_h(n);

  auto consider = [&](const MultiHypergraph& h) {
    std::int64_t e = h.edge_count();
    if (e > best) {
      best = e;
      best_h = h;
    }
  };

  if (C <= 20) {
    std::uint64_t space = std::uint64_t(1) << C;
    for (std::uint64_t idx = 0; idx < space; ++idx) {
      MultiHypergraph h(n);
      for (int j = 0; j < C; ++j)
        if ((idx >> j) & 1) h.add_edge(slots[j]);
      out.scanned++;
      if (!has_berge_cycle_at_least(h, r)) consider(h);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::vector<int> order(C);
    for (int j = 0; j < C; ++j) order[j] = j;
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::shuffle(order.begin(), order.end(), rng);
      MultiHypergraph h(n);
      for (int j : order) {
        if (h.edge_count() >= MultiHypergraph::kMaxEdges) break;
        h.add_edge(slots[j]);
        if (has_berge_cycle_at_least(h, r)) h.edges.pop_back();
      }
      out.scanned++;
      consider(h);
    }
  }
  out.best_count = std::max<std::int64_t>(best, 0);
  out.best_instance = to_hg_string(best_h);
  out.consistent = Rat(out.best_count) <= out.bound;
  return out;
}

}  // namespace berge
