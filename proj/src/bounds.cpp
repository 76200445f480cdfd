#include "berge/bounds.hpp"

#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "berge/circumference.hpp"
#include "json.hpp"

namespace berge {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Rat normalized(__int128 n, __int128 d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rat r;
  r.num = narrow(n);
  r.den = narrow(d);
  return r;
}

}  // namespace

Rat::Rat(std::int64_t n) : num(n), den(1) {}

Rat::Rat(std::int64_t n, std::int64_t d) { *this = normalized(n, d); }

Rat Rat::operator+(const Rat& o) const {
  return normalized(static_cast<__int128>(num) * o.den +
                        static_cast<__int128>(o.num) * den,
                    static_cast<__int128>(den) * o.den);
}

Rat Rat::operator-(const Rat& o) const {
  return normalized(static_cast<__int128>(num) * o.den -
                        static_cast<__int128>(o.num) * den,
                    static_cast<__int128>(den) * o.den);
}

Rat Rat::operator*(const Rat& o) const {
  return normalized(static_cast<__int128>(num) * o.num,
                    static_cast<__int128>(den) * o.den);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw std::invalid_argument("division by zero");
  return normalized(static_cast<__int128>(num) * o.den,
                    static_cast<__int128>(den) * o.num);
}

bool Rat::operator<(const Rat& o) const {
  return static_cast<__int128>(num) * o.den <
         static_cast<__int128>(o.num) * den;
}

bool Rat::operator<=(const Rat& o) const { return !(o < *this); }

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

int deficiency(const BipartiteGraph& g, int x, int r) {
  return std::max(0, r - g.xdeg(x));
}

int deficiency_total(const Frame& f) {
  int total = 0;
  for (int i = 0; i < f.g.nx; ++i)
    if ((f.xstar >> i) & 1) total += deficiency(f.g, i, f.r);
  return total;
}

int special_block_count(const Frame& f, int k) {
  if (k < 2 || f.r < 1) return 0;
  auto bd = block_decomposition(f.g);
  int q = 0;
  for (const auto& b : bd.blocks) {
    if (static_cast<int>(b.xs.size()) != k - 1 ||
        static_cast<int>(b.ys.size()) != f.r)
      continue;
    if (static_cast<int>(b.edges.size()) != (k - 1) * f.r) continue;
    Mask128 ymask;
    for (int yj : b.ys) ymask.set(f.g.yid(yj));
    bool ok = true;
    for (int xi : b.xs) {
      if (!((f.xstar >> xi) & 1) || !(f.g.adj(f.g.xid(xi)) == ymask)) {
        ok = false;
        break;
      }
    }
    if (ok) ++q;
  }
  return q;
}

std::string extremal_class_name(ExtremalClass c) {
  switch (c) {
    case ExtremalClass::none:
      return "none";
    case ExtremalClass::block_tree:
      return "block_tree";
    case ExtremalClass::t1_family:
      return "t1_family";
    case ExtremalClass::other:
      return "other";
  }
  return "none";
}

std::string VerdictReport::to_text() const {
  std::ostringstream os;
  os << "theorem=" << theorem << " applicable="
     << (applicable ? "true" : "false") << " holds="
     << (holds ? "true" : "false") << " tight=" << (tight ? "true" : "false")
     << " class=" << extremal_class_name(klass) << " count=" << count
     << " bound=" << bound.str() << "\n";
  for (const auto& h : hypotheses)
    os << "hyp." << h.name << "=" << (h.pass ? "pass" : "fail") << "\n";
  return os.str();
}

std::string VerdictReport::to_json() const {
  nlohmann::json j;
  j["theorem"] = theorem;
  j["applicable"] = applicable;
  j["holds"] = holds;
  j["tight"] = tight;
  j["class"] = extremal_class_name(klass);
  j["count"] = count;
  j["bound"] = {{"num", bound.num}, {"den", bound.den}, {"text", bound.str()}};
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : hypotheses)
    hs.push_back({{"name", h.name}, {"pass", h.pass}});
  j["hypotheses"] = hs;
  return j.dump(2);
}

Rat bound_value(const std::string& theorem, std::int64_t n, int k, int r,
                std::int64_t D, std::int64_t Q) {
  if (theorem == "eg-full" || theorem == "eg" || theorem == "egbgr")
    return Rat((k - 1) * (n - 1), r);
  if (theorem == "gyori2" || theorem == "gkl-path")
    return Rat((k - 1) * n, r + 1);
  if (theorem == "egblock")
    return rat_max(Rat(k - 1), Rat(k * (n - 1), 2 * r - k + 2));
  if (theorem == "gyori-conn")
    return rat_max(Rat(k - 1), Rat(k * n, 2 * r - k + 4));
  if (theorem == "egbgr2") return Rat(k * (n - 1), 2 * r - k + 2);
  if (theorem == "main") return Rat(k * (n - 1 + D), 2 * r - k + 2);
  if (theorem == "t1" || theorem == "t2")
    return Rat((k - 1) * (n - 1 + D + Q), r);
  if (theorem == "conjecture")
    return rat_max(Rat((r - 1) * (n - 1), r), Rat(n - r + 1));
  if (theorem == "erdos-gallai-cycle") return Rat((k - 1) * (n - 1), 2);
  throw std::invalid_argument("unknown theorem id: " + theorem);
}

namespace {

void settle(VerdictReport& rep, std::int64_t count, Rat bound) {
  rep.count = count;
  rep.bound = bound;
  rep.applicable = true;
  for (const auto& h : rep.hypotheses)
    if (!h.pass) rep.applicable = false;
  rep.holds = !rep.applicable || Rat(count) <= bound;
  rep.tight = rep.applicable && rep.holds && Rat(count) == bound;
}

// Equality census behind the block-tree classification: saturating the
// incidence graph absorbs degenerate attachments (multiplicity ties), and
// in the closure every block of a tight instance must be the complete
// K_{r+1 vertices, k-1 slots} with all cut nodes on the vertex side.
ExtremalClass closure_census_class(const MultiHypergraph& h, int k, int r) {
  BipartiteGraph closure = saturate(incidence_graph(h), k);
  if (!is_connected(closure)) return ExtremalClass::other;
  auto bd = block_decomposition(closure);
  if (!bd.cut_y.empty() || bd.blocks.empty()) return ExtremalClass::other;
  for (const auto& b : bd.blocks) {
    if (static_cast<int>(b.xs.size()) != r + 1 ||
        static_cast<int>(b.ys.size()) != k - 1 ||
        static_cast<int>(b.edges.size()) != (r + 1) * (k - 1))
      return ExtremalClass::other;
  }
  return ExtremalClass::block_tree;
}

// Equality census for the deficiency-weighted bound: connected, every
// block complete K_{k-1,r} or K_{k-1,r+1} with the small side in X, cuts
// in Y, X* = X, and zero deficiency.
ExtremalClass t1_census_class(const Frame& f, int k) {
  const BipartiteGraph& g = f.g;
  std::uint64_t full =
      g.nx >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << g.nx) - 1);
  if ((f.xstar & full) != full) return ExtremalClass::other;
  if (deficiency_total(f) != 0) return ExtremalClass::other;
  if (!is_connected(g)) return ExtremalClass::other;
  auto bd = block_decomposition(g);
  if (!bd.cut_x.empty() || bd.blocks.empty()) return ExtremalClass::other;
  for (const auto& b : bd.blocks) {
    int bx = static_cast<int>(b.xs.size());
    int by = static_cast<int>(b.ys.size());
    if (bx != k - 1 || (by != f.r && by != f.r + 1)) return ExtremalClass::other;
    if (static_cast<int>(b.edges.size()) != bx * by)
      return ExtremalClass::other;
  }
  return ExtremalClass::t1_family;
}

// Equality shape for the general-graph bound: every block fits inside
// K_{k-1,r+1} (small side in X) and every cut node is in Y.
ExtremalClass frame_blocktree_class(const Frame& f, int k) {
  auto bd = block_decomposition(f.g);
  if (!bd.cut_x.empty()) return ExtremalClass::other;
  for (const auto& b : bd.blocks)
    if (static_cast<int>(b.xs.size()) > k - 1 ||
        static_cast<int>(b.ys.size()) > f.r + 1)
      return ExtremalClass::other;
  return ExtremalClass::block_tree;
}

}  // namespace

VerdictReport check_theorem(const MultiHypergraph& h,
                            const std::string& theorem, int k, int r) {
  VerdictReport rep;
  rep.theorem = theorem;
  auto hyp = [&rep](std::string name, bool pass) {
    rep.hypotheses.push_back({std::move(name), pass});
    return pass;
  };
  auto circ_below = [&h](int len) {
    if (len >= 2) return !has_berge_cycle_at_least(h, len);
    return berge_circumference(h) < len;
  };
  std::int64_t e = h.edge_count();

  if (theorem == "eg-full" || theorem == "eg") {
    hyp("n>=1", h.n >= 1);
    hyp("k>=4", k >= 4);
    hyp("r>=k+1", r >= k + 1);
    if (theorem == "eg") {
      hyp("r-uniform", h.is_uniform(r));
      hyp("simple", h.max_multiplicity() <= 1);
    } else {
      hyp("lower-rank>=r", h.lower_rank() >= r);
      hyp("multiplicity<=k-2", h.max_multiplicity() <= k - 2);
    }
    hyp("berge-circumference<k", circ_below(k));
    settle(rep, e, bound_value(theorem, h.n, k, r));
    if (rep.tight) rep.klass = closure_census_class(h, k, r);
  } else if (theorem == "gyori2") {
    hyp("n>=1", h.n >= 1);
    hyp("k>=2", k >= 2);
    hyp("r>=k+1", r >= k + 1);
    hyp("lower-rank>=r", h.lower_rank() >= r);
    hyp("multiplicity<=k-2", h.max_multiplicity() <= k - 2);
    hyp("longest-berge-path<k", longest_berge_path(h) < k);
    settle(rep, e, bound_value(theorem, h.n, k, r));
  } else if (theorem == "egblock") {
    hyp("n>=1", h.n >= 1);
    hyp("k>=4", k >= 4);
    hyp("r>=k+1", r >= k + 1);
    hyp("2-connected", is_2_connected(incidence_graph(h)));
    hyp("lower-rank>=r", h.lower_rank() >= r);
    hyp("multiplicity<=k-2", h.max_multiplicity() <= k - 2);
    hyp("berge-circumference<k", circ_below(k));
    settle(rep, e, bound_value(theorem, h.n, k, r));
  } else if (theorem == "conjecture") {
    hyp("n>=1", h.n >= 1);
    hyp("r-uniform", h.is_uniform(r));
    hyp("simple", h.max_multiplicity() <= 1);
    hyp("berge-circumference<r", circ_below(r));
    settle(rep, e, bound_value(theorem, h.n, k, r));
  } else {
    throw std::invalid_argument("unknown hypergraph theorem id: " + theorem);
  }
  return rep;
}

VerdictReport check_theorem(const Frame& f, const std::string& theorem,
                            int k) {
  VerdictReport rep;
  rep.theorem = theorem;
  auto hyp = [&rep](std::string name, bool pass) {
    rep.hypotheses.push_back({std::move(name), pass});
    return pass;
  };
  const BipartiteGraph& g = f.g;
  int r = f.r;
  std::uint64_t full =
      g.nx >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << g.nx) - 1);
  std::uint64_t xs = f.xstar & full;
  std::int64_t m = g.nx, n = g.ny;
  std::int64_t mstar = std::popcount(xs);
  int mindeg = std::numeric_limits<int>::max();
  for (int i = 0; i < g.nx; ++i) mindeg = std::min(mindeg, g.xdeg(i));
  bool circ_ok = k >= 1 && !has_cycle_at_least(g, 2 * k);
  std::int64_t D = deficiency_total(Frame{g, xs, r});

  if (theorem == "egbgr") {
    hyp("n>=1", n >= 1);
    hyp("k>=4", k >= 4);
    hyp("r>=k+1", r >= k + 1);
    hyp("min-xdeg>=r", g.nx == 0 || mindeg >= r);
    bool has_kblock = false;
    for (const auto& b : block_decomposition(g).blocks) {
      int bx = static_cast<int>(b.xs.size());
      int by = static_cast<int>(b.ys.size());
      if (static_cast<int>(b.edges.size()) == bx * by &&
          ((bx == k - 1 && by == r) || (bx == r && by == k - 1)))
        has_kblock = true;
    }
    hyp("no-K(k-1,r)-block", !has_kblock);
    hyp("circumference<2k", circ_ok);
    settle(rep, m, bound_value(theorem, n, k, r));
    if (rep.tight) rep.klass = frame_blocktree_class(f, k);
  } else if (theorem == "egbgr2") {
    hyp("n>=1", n >= 1);
    hyp("k>=4", k >= 4);
    hyp("r>=k+1", r >= k + 1);
    hyp("2-connected", is_2_connected(g));
    hyp("m>=k", m >= k);
    hyp("min-xdeg>=r", g.nx == 0 || mindeg >= r);
    hyp("circumference<2k", circ_ok);
    settle(rep, m, bound_value(theorem, n, k, r));
  } else if (theorem == "main") {
    hyp("k>=4", k >= 4);
    hyp("r>=k+1", r >= k + 1);
    hyp("n>=k", n >= k);
    hyp("m>=m*", m >= mstar);
    hyp("m*>=k-1", mstar >= k - 1);
    hyp("m>=k", m >= k);
    hyp("2-connected", is_2_connected(g));
    hyp("circumference<2k", circ_ok);
    settle(rep, mstar, bound_value(theorem, n, k, r, D));
  } else if (theorem == "t1" || theorem == "t2") {
    hyp("n>=1", n >= 1);
    hyp("k>=4", k >= 4);
    hyp("r>=k+1", r >= k + 1);
    hyp("m*>=1", mstar >= 1);
    hyp("m>=m*", m >= mstar);
    hyp("circumference<2k", circ_ok);
    if (theorem == "t1") hyp("2k-saturated", circ_ok && is_saturated(g, k));
    std::int64_t Q = special_block_count(Frame{g, xs, r}, k);
    settle(rep, mstar, bound_value(theorem, n, k, r, D, Q));
    if (rep.tight) rep.klass = t1_census_class(Frame{g, xs, r}, k);
  } else {
    throw std::invalid_argument("unknown frame theorem id: " + theorem);
  }
  return rep;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {
      "eg-full", "eg",   "gyori2", "egblock", "egbgr",
      "egbgr2",  "main", "t1",     "t2",      "conjecture"};
  return ids;
}

}  // namespace berge
