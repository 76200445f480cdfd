// berge_lab: analyze / verify / construct / structure / enumerate / saturate
// for .hg multi-hypergraphs and .bg bipartite graphs.
//
// Exit codes: 0 success or verdict holds; 1 a checked bound fails on the
// input (verify) or the census found violations (enumerate); 2 usage or
// input errors. Results go to stdout, diagnostics to stderr.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "berge/bounds.hpp"
#include "berge/circumference.hpp"
#include "berge/constructions.hpp"
#include "berge/enumerate.hpp"
#include "berge/errors.hpp"
#include "berge/structure.hpp"
#include "json.hpp"

using namespace berge;

namespace {

// Thrown for bad flag combinations and malformed inputs; mapped to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

MultiHypergraph load_hg(const std::string& path) {
  if (!ends_with(path, ".hg"))
    throw UsageError("expected a .hg input: " + path);
  return parse_hg_file(path);
}

BipartiteGraph load_bg(const std::string& path) {
  if (!ends_with(path, ".bg"))
    throw UsageError("expected a .bg input: " + path);
  return parse_bg_file(path);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    size_t e = item.find_last_not_of(" \t");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// "x3" / "y1" (1-based) -> unified id.
int parse_node(const BipartiteGraph& g, const std::string& name) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y'))
    throw UsageError("node must look like x3 or y1: " + name);
  int idx = 0;
  try {
    idx = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw UsageError("node must look like x3 or y1: " + name);
  }
  if (name[0] == 'x') {
    if (idx < 1 || idx > g.nx) throw UsageError("no such node: " + name);
    return g.xid(idx - 1);
  }
  if (idx < 1 || idx > g.ny) throw UsageError("no such node: " + name);
  return g.yid(idx - 1);
}

std::vector<int> parse_path(const BipartiteGraph& g, const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) out.push_back(parse_node(g, item));
  return out;
}

// "1,3,4" (1-based X indices) -> bitmask.
std::uint64_t parse_xstar(const std::string& text, int nx) {
  std::uint64_t mask = 0;
  for (const auto& item : split_list(text)) {
    int idx = 0;
    try {
      idx = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError("--xstar entries must be integers: " + item);
    }
    if (idx < 1 || idx > nx)
      throw UsageError("--xstar index out of range 1.." + std::to_string(nx));
    mask |= std::uint64_t(1) << (idx - 1);
  }
  return mask;
}

std::uint64_t full_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << bits) - 1);
}

std::string join_names(const BipartiteGraph& g, const std::vector<int>& ids) {
  std::string out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += g.node_name(ids[i]);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

bool is_frame_theorem(const std::string& id) {
  return id == "egbgr" || id == "egbgr2" || id == "main" || id == "t1" ||
         id == "t2";
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const std::string& file, int k, int r, bool json) {
  nlohmann::json j;
  if (ends_with(file, ".hg")) {
    MultiHypergraph h = parse_hg_file(file);
    BipartiteGraph inc = incidence_graph(h);
    j["n"] = h.n;
    j["m"] = h.edge_count();
    if (h.edge_count() > 0) j["lower_rank"] = h.lower_rank();
    j["max_multiplicity"] = h.max_multiplicity();
    if (r > 0) j["uniform"] = h.is_uniform(r);
    j["circumference"] = circumference(inc);
    j["berge_circumference"] = berge_circumference(h);
    j["longest_berge_path"] = longest_berge_path(h);
    if (has_cycle_at_least(inc, 2 * k))
      j["saturated"] = "n/a";
    else
      j["saturated"] = is_saturated(inc, k);
  } else if (ends_with(file, ".bg")) {
    BipartiteGraph g = parse_bg_file(file);
    j["nx"] = g.nx;
    j["ny"] = g.ny;
    j["m"] = g.edge_count();
    j["connected"] = is_connected(g);
    j["two_connected"] = is_2_connected(g);
    j["circumference"] = circumference(g);
    j["longest_path_nodes"] =
        static_cast<int>(longest_path(g).nodes.size());
    if (has_cycle_at_least(g, 2 * k))
      j["saturated"] = "n/a";
    else
      j["saturated"] = is_saturated(g, k);
  } else {
    throw UsageError("expected a .hg or .bg input: " + file);
  }
  if (json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [key, value] : j.items()) {
      std::cout << key << "=";
      if (value.is_string())
        std::cout << value.get<std::string>();
      else if (value.is_boolean())
        std::cout << (value.get<bool>() ? "true" : "false");
      else
        std::cout << value;
      std::cout << "\n";
    }
  }
  return 0;
}

// ----------------------------------------------------------------- verify

int cmd_verify(const std::string& file, const std::string& theorem, int k,
               int r, const std::string& xstar_text, bool json) {
  const auto& ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), theorem) == ids.end())
    throw UsageError("unknown theorem id: " + theorem);

  VerdictReport rep;
  if (is_frame_theorem(theorem)) {
    if (k < 1) throw UsageError("verify " + theorem + " needs --k");
    if (r < 1) throw UsageError("verify " + theorem + " needs --r");
    Frame f;
    if (ends_with(file, ".bg")) {
      f.g = parse_bg_file(file);
    } else {
      // A hypergraph input is read as its incidence frame: X carries the
      // edge slots, Y the vertices.
      f.g = incidence_graph(load_hg(file)).transposed();
    }
    f.r = r;
    f.xstar = xstar_text.empty() ? full_mask(f.g.nx)
                                 : parse_xstar(xstar_text, f.g.nx);
    rep = check_theorem(f, theorem, k);
  } else {
    if (!xstar_text.empty())
      throw UsageError("--xstar applies to frame-level theorems only");
    if (r < 1) throw UsageError("verify " + theorem + " needs --r");
    if (k < 1 && theorem != "conjecture")
      throw UsageError("verify " + theorem + " needs --k");
    MultiHypergraph h = load_hg(file);
    rep = check_theorem(h, theorem, k, r);
  }
  std::cout << (json ? rep.to_json() + "\n" : rep.to_text());
  return rep.applicable && !rep.holds ? 1 : 0;
}

// -------------------------------------------------------------- construct

int cmd_construct(const std::string& kind, int r, int k, int blocks,
                  const std::string& shape, int n, int t, int s,
                  bool full_edges, const std::string& out_path) {
  auto write_hypergraph = [&](const MultiHypergraph& h) {
    if (!ends_with(out_path, ".hg"))
      throw UsageError("construct " + kind + " writes .hg; got " + out_path);
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    write_hg(out, h);
    std::cout << "kind=" << kind << "\nn=" << h.n << "\nm=" << h.edge_count()
              << "\nout=" << out_path << "\n";
  };

  if (kind == "block") {
    write_hypergraph(make_block(r, k, full_edges));
  } else if (kind == "block-tree") {
    if (shape != "path" && shape != "star")
      throw UsageError("--shape must be path or star");
    write_hypergraph(make_block_tree(
        r, k, blocks, shape == "path" ? TreeShape::path : TreeShape::star));
  } else if (kind == "star") {
    if (n < 1) throw UsageError("construct star needs --n");
    write_hypergraph(make_star(n, r));
  } else if (kind == "ht") {
    if (t < 1) throw UsageError("construct ht needs --t");
    write_hypergraph(make_ht(k, r, t));
  } else if (kind == "t1-family") {
    if (s < 0 || t < 0 || s + t < 1)
      throw UsageError("construct t1-family needs --s and/or --t");
    Frame f = make_t1_family(r, k, s, t);
    if (!ends_with(out_path, ".bg"))
      throw UsageError("construct t1-family writes .bg; got " + out_path);
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    write_bg(out, f.g);
    std::cout << "kind=" << kind << "\nnx=" << f.g.nx << "\nny=" << f.g.ny
              << "\nm=" << f.g.edge_count() << "\nout=" << out_path << "\n";
  } else {
    throw UsageError("unknown construction: " + kind);
  }
  return 0;
}

// -------------------------------------------------------------- structure

int cmd_structure(const std::string& file, const std::string& path_text,
                  bool scf, bool cycle, const std::string& disintegrate_text,
                  const std::string& xstar_text, const std::string& ystar_text,
                  bool json) {
  BipartiteGraph g = load_bg(file);

  if (!disintegrate_text.empty()) {
    auto parts = split_list(disintegrate_text);
    if (parts.empty() || parts.size() == 2 || parts.size() > 3)
      throw UsageError("--disintegrate takes A or A,AX,AY");
    std::vector<int> alphas;
    for (const auto& p : parts) {
      try {
        alphas.push_back(std::stoi(p));
      } catch (const std::exception&) {
        throw UsageError("--disintegrate thresholds must be integers");
      }
    }
    std::uint64_t xs = xstar_text.empty() ? full_mask(g.nx)
                                          : parse_xstar(xstar_text, g.nx);
    std::uint64_t ys = ystar_text.empty() ? full_mask(g.ny)
                                          : parse_xstar(ystar_text, g.ny);
    Core core = alphas.size() == 1
                    ? disintegrate(g, alphas[0], xs, ys)
                    : mixed_disintegrate(g, alphas[1], alphas[2], xs, ys);
    SubGraph sub = induced_subgraph(g, core.keep_x, core.keep_y);
    std::vector<int> kept_x, kept_y;
    for (int i : sub.x_of) kept_x.push_back(i + 1);
    for (int j : sub.y_of) kept_y.push_back(j + 1);
    if (json) {
      nlohmann::json j;
      j["kept_x"] = kept_x;
      j["kept_y"] = kept_y;
      j["bg"] = to_bg_string(sub.g);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "# kept_x=" << join_ints(kept_x) << "\n"
                << "# kept_y=" << join_ints(kept_y) << "\n"
                << to_bg_string(sub.g);
    }
    return 0;
  }

  if (path_text.empty())
    throw UsageError("structure needs --path (or --disintegrate)");
  std::vector<int> path = parse_path(g, path_text);
  PathDecoration dec = decorate_path(g, path);

  nlohmann::json j;
  j["path"] = split_list(path_text);
  j["nodes"] = static_cast<int>(dec.path.size());
  j["np_start"] = dec.np_start;
  j["np_end"] = dec.np_end;
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [a, b] : dec.pairs) pairs.push_back({a, b});
  j["pairs"] = pairs;
  j["formation"] = dec.formation;
  j["chain"] = dec.chain;

  if (scf) {
    ScfReport rep = check_saturated_crossing_formation(g, path);
    nlohmann::json sj;
    sj["holds"] = rep.all();
    for (int i = 0; i < 5; ++i) {
      sj["parts"][i]["holds"] = rep.parts[i].holds;
      sj["parts"][i]["detail"] = rep.parts[i].detail;
    }
    if (rep.all()) sj["separation"] = separation_check(g, path);
    j["scf"] = sj;
  }
  if (cycle) {
    LongCycleResult res = long_cycle_from_path(g, path);
    nlohmann::json cj;
    cj["case"] = std::string(1, res.case_id);
    cj["bound"] = res.applied_bound;
    cj["nodes"] = res.cycle.length();
    cj["cycle"] = join_names(g, res.cycle.nodes);
    j["cycle"] = cj;
  }

  if (json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "path=" << path_text << "\n"
            << "nodes=" << dec.path.size() << "\n"
            << "np_start=" << join_ints(dec.np_start) << "\n"
            << "np_end=" << join_ints(dec.np_end) << "\n";
  std::cout << "pairs=";
  for (size_t i = 0; i < dec.pairs.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << dec.pairs[i].first << "-" << dec.pairs[i].second;
  }
  std::cout << "\nformation=" << (dec.formation ? "true" : "false") << "\n"
            << "chain=" << join_ints(dec.chain) << "\n";
  if (scf) {
    ScfReport rep = check_saturated_crossing_formation(g, path);
    std::cout << "scf=" << (rep.all() ? "true" : "false") << "\n";
    for (int i = 0; i < 5; ++i) {
      std::cout << "scf_part" << (i + 1) << "="
                << (rep.parts[i].holds ? "pass" : "fail") << "\n";
      if (!rep.parts[i].holds)
        std::cout << "scf_part" << (i + 1) << "_detail=" << rep.parts[i].detail
                  << "\n";
    }
    if (rep.all())
      std::cout << "separation=" << (separation_check(g, path) ? "true" : "false")
                << "\n";
  }
  if (cycle) {
    LongCycleResult res = long_cycle_from_path(g, path);
    std::cout << "case=" << res.case_id << "\nbound=" << res.applied_bound
              << "\ncycle_nodes=" << res.cycle.length() << "\ncycle="
              << join_names(g, res.cycle.nodes) << "\n";
  }
  return 0;
}

// -------------------------------------------------------------- enumerate

int cmd_enumerate(const std::string& klass, int n, int r, int k,
                  const std::string& theorem, int max_mult, int m, int shards,
                  int shard_index, bool prune, std::uint64_t budget,
                  const std::string& json_path) {
  CampaignSpec spec;
  if (klass == "rgraph")
    spec.klass = InstanceClass::rgraph;
  else if (klass == "multi")
    spec.klass = InstanceClass::multi;
  else if (klass == "frame")
    spec.klass = InstanceClass::frame;
  else
    throw UsageError("--class must be rgraph, multi, or frame");
  const auto& ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), theorem) == ids.end())
    throw UsageError("unknown theorem id: " + theorem);
  if (spec.klass == InstanceClass::frame) {
    if (m < 1) throw UsageError("frame enumeration needs --m");
    if (!is_frame_theorem(theorem))
      throw UsageError("frame enumeration needs a frame-level theorem");
  } else if (is_frame_theorem(theorem)) {
    throw UsageError(theorem + " runs on frames; use --class frame");
  }
  spec.n = n;
  spec.r = r;
  spec.k = k;
  spec.max_mult = max_mult;
  spec.m = m;
  spec.theorem = theorem;
  spec.shards = shards;
  spec.shard_index = shard_index;
  spec.prune = prune;
  if (budget > 0) spec.budget = budget;

  CensusResult res = run_campaign(spec);
  std::cout << "scanned=" << res.scanned << "\napplicable=" << res.applicable
            << "\nholds=" << res.holds
            << "\nviolations=" << res.violations.size()
            << "\ntight=" << res.tight.size() << "\nseconds=" << res.seconds
            << "\n";
  if (!json_path.empty()) {
    nlohmann::json j;
    j["scanned"] = res.scanned;
    j["applicable"] = res.applicable;
    j["holds"] = res.holds;
    nlohmann::json viols = nlohmann::json::array();
    for (const auto& v : res.violations)
      viols.push_back(
          {{"instance", v.instance}, {"count", v.count}, {"bound", v.bound}});
    j["violations"] = viols;
    nlohmann::json tights = nlohmann::json::array();
    for (const auto& t : res.tight)
      tights.push_back({{"instance", t.instance},
                        {"class", extremal_class_name(t.klass)}});
    j["tight"] = tights;
    j["seconds"] = res.seconds;
    std::ofstream out(json_path);
    if (!out) throw UsageError("cannot write " + json_path);
    out << j.dump(2) << "\n";
  }
  return res.violations.empty() ? 0 : 1;
}

// --------------------------------------------------------------- saturate

int cmd_saturate(const std::string& file, int k, const std::string& out_path,
                 bool json) {
  BipartiteGraph g = load_bg(file);
  BipartiteGraph closure = saturate(g, k);
  long long added = closure.edge_count() - g.edge_count();
  if (json) {
    nlohmann::json j;
    j["nx"] = closure.nx;
    j["ny"] = closure.ny;
    j["m"] = closure.edge_count();
    j["added"] = added;
    j["bg"] = to_bg_string(closure);
    std::cout << j.dump(2) << "\n";
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out) throw UsageError("cannot write " + out_path);
      write_bg(out, closure);
    }
    return 0;
  }
  if (out_path.empty()) {
    std::cout << to_bg_string(closure);
  } else {
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write " + out_path);
    write_bg(out, closure);
    std::cout << "m=" << closure.edge_count() << "\nadded=" << added
              << "\nout=" << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extremal Berge-cycle laboratory"};
  app.require_subcommand(1);

  auto* an = app.add_subcommand("analyze", "basic invariants of an instance");
  std::string an_file;
  int an_k = 0, an_r = 0;
  bool an_json = false;
  an->add_option("file", an_file, ".hg or .bg input")->required();
  an->add_option("--k", an_k, "cycle threshold (cycles of 2k nodes)")
      ->required();
  an->add_option("--r", an_r, "uniformity to report against");
  an->add_flag("--json", an_json, "emit JSON");

  auto* ve = app.add_subcommand("verify", "check one theorem on an instance");
  std::string ve_file, ve_theorem, ve_xstar;
  int ve_k = 0, ve_r = 0;
  bool ve_json = false;
  ve->add_option("file", ve_file, ".hg or .bg input")->required();
  ve->add_option("--theorem", ve_theorem, "theorem id")->required();
  ve->add_option("--k", ve_k, "cycle parameter k");
  ve->add_option("--r", ve_r, "rank / degree target r");
  ve->add_option("--xstar", ve_xstar, "1-based X indices, comma separated");
  ve->add_flag("--json", ve_json, "emit JSON");

  auto* co = app.add_subcommand("construct", "write a named family instance");
  std::string co_kind, co_shape = "path", co_out;
  int co_r = 0, co_k = 0, co_blocks = 1, co_n = 0, co_t = 0, co_s = 0;
  bool co_full = false;
  co->add_option("kind", co_kind,
                 "block | block-tree | star | ht | t1-family")
      ->required();
  co->add_option("--r", co_r, "rank r");
  co->add_option("--k", co_k, "cycle parameter k");
  co->add_option("--blocks", co_blocks, "block-tree: number of blocks");
  co->add_option("--shape", co_shape, "block-tree: path or star");
  co->add_option("--n", co_n, "star: vertex count");
  co->add_option("--t", co_t, "ht / t1-family: group count");
  co->add_option("--s", co_s, "t1-family: special block count");
  co->add_flag("--full-edges", co_full, "block: edges are the full vertex set");
  co->add_option("--out", co_out, "output path (.hg or .bg)")->required();

  auto* st = app.add_subcommand("structure", "path structure on a .bg graph");
  std::string st_file, st_path, st_disintegrate, st_xstar, st_ystar;
  bool st_scf = false, st_cycle = false, st_json = false;
  st->add_option("file", st_file, ".bg input")->required();
  st->add_option("--path", st_path, "comma separated node names, e.g. x1,y2");
  st->add_flag("--scf", st_scf, "run the saturated-crossing-formation check");
  st->add_flag("--cycle", st_cycle, "build the long cycle from the path");
  st->add_option("--disintegrate", st_disintegrate,
                 "peel threshold A (or A,AX,AY); prints the core as .bg");
  st->add_option("--xstar", st_xstar, "restrict X before peeling");
  st->add_option("--ystar", st_ystar, "restrict Y before peeling");
  st->add_flag("--json", st_json, "emit JSON");

  auto* en = app.add_subcommand("enumerate", "labeled census of one theorem");
  std::string en_class, en_theorem, en_json_path;
  int en_n = 0, en_r = 0, en_k = 0, en_max_mult = 1, en_m = 0, en_shards = 1;
  int en_shard_index = -1;
  bool en_prune = false;
  std::uint64_t en_budget = 0;
  en->add_option("--class", en_class, "rgraph | multi | frame")->required();
  en->add_option("--n", en_n, "vertices (|Y| for frames)")->required();
  en->add_option("--r", en_r, "rank / degree target r")->required();
  en->add_option("--k", en_k, "cycle parameter k")->required();
  en->add_option("--theorem", en_theorem, "theorem id")->required();
  en->add_option("--max-mult", en_max_mult, "multi: multiplicity cap");
  en->add_option("--m", en_m, "frame: |X|");
  en->add_option("--shards", en_shards, "worker shard count");
  en->add_option("--shard-index", en_shard_index, "run a single shard");
  en->add_flag("--prune", en_prune, "keep canonical degree sequences only");
  en->add_option("--budget", en_budget, "instance ceiling override");
  en->add_option("--json", en_json_path, "write the full census to this file");

  auto* sa = app.add_subcommand("saturate", "2k-saturation closure of a .bg");
  std::string sa_file, sa_out;
  int sa_k = 0;
  bool sa_json = false;
  sa->add_option("file", sa_file, ".bg input")->required();
  sa->add_option("--k", sa_k, "cycle threshold")->required();
  sa->add_option("--out", sa_out, "write the closure here instead of stdout");
  sa->add_flag("--json", sa_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (an->parsed()) return cmd_analyze(an_file, an_k, an_r, an_json);
    if (ve->parsed())
      return cmd_verify(ve_file, ve_theorem, ve_k, ve_r, ve_xstar, ve_json);
    if (co->parsed())
      return cmd_construct(co_kind, co_r, co_k, co_blocks, co_shape, co_n,
                           co_t, co_s, co_full, co_out);
    if (st->parsed())
      return cmd_structure(st_file, st_path, st_scf, st_cycle, st_disintegrate,
                           st_xstar, st_ystar, st_json);
    if (en->parsed())
      return cmd_enumerate(en_class, en_n, en_r, en_k, en_theorem, en_max_mult,
                           en_m, en_shards, en_shard_index, en_prune,
                           en_budget, en_json_path);
    if (sa->parsed()) return cmd_saturate(sa_file, sa_k, sa_out, sa_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
