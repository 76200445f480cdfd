// Python module exposing the main library operations: parsing, the
// circumference family, saturation, theorem verdicts, the named
// constructions, and the census runner.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "berge/bounds.hpp"
#include "berge/circumference.hpp"
#include "berge/constructions.hpp"
#include "berge/enumerate.hpp"
#include "berge/hypergraph.hpp"
#include "berge/structure.hpp"

namespace py = pybind11;
using namespace berge;

namespace {

py::dict verdict_to_dict(const VerdictReport& rep) {
  py::dict d;
  d["theorem"] = rep.theorem;
  d["applicable"] = rep.applicable;
  d["holds"] = rep.holds;
  d["tight"] = rep.tight;
  d["count"] = rep.count;
  d["bound"] = py::make_tuple(rep.bound.num, rep.bound.den);
  d["bound_text"] = rep.bound.str();
  d["class"] = extremal_class_name(rep.klass);
  py::list hyps;
  for (const auto& h : rep.hypotheses)
    hyps.append(py::make_tuple(h.name, h.pass));
  d["hypotheses"] = hyps;
  return d;
}

py::dict census_to_dict(const CensusResult& res) {
  py::dict d;
  d["scanned"] = res.scanned;
  d["applicable"] = res.applicable;
  d["holds"] = res.holds;
  py::list viols;
  for (const auto& v : res.violations) {
    py::dict e;
    e["instance"] = v.instance;
    e["count"] = v.count;
    e["bound"] = v.bound;
    viols.append(e);
  }
  d["violations"] = viols;
  py::list tights;
  for (const auto& t : res.tight) {
    py::dict e;
    e["instance"] = t.instance;
    e["class"] = extremal_class_name(t.klass);
    tights.append(e);
  }
  d["tight"] = tights;
  d["seconds"] = res.seconds;
  return d;
}

InstanceClass class_from_name(const std::string& name) {
  if (name == "rgraph") return InstanceClass::rgraph;
  if (name == "multi") return InstanceClass::multi;
  if (name == "frame") return InstanceClass::frame;
  throw std::invalid_argument("instance class must be rgraph, multi, or frame");
}

}  // namespace

PYBIND11_MODULE(berge_lab, m) {
  m.doc() = "extremal Berge-cycle laboratory";

  py::class_<MultiHypergraph>(m, "MultiHypergraph")
      .def(py::init<int>(), py::arg("n"))
      .def_readonly("n", &MultiHypergraph::n)
      .def_readonly("edges", &MultiHypergraph::edges)
      .def("add_edge", &MultiHypergraph::add_edge)
      .def("edge_count", &MultiHypergraph::edge_count)
      .def("lower_rank", &MultiHypergraph::lower_rank)
      .def("max_multiplicity", &MultiHypergraph::max_multiplicity)
      .def("is_uniform", &MultiHypergraph::is_uniform)
      .def("vertex_degree", &MultiHypergraph::vertex_degree)
      .def("__repr__", [](const MultiHypergraph& h) {
        return "<MultiHypergraph n=" + std::to_string(h.n) + " m=" +
               std::to_string(h.edge_count()) + ">";
      });

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def(py::init<int, int>(), py::arg("nx"), py::arg("ny"))
      .def_readonly("nx", &BipartiteGraph::nx)
      .def_readonly("ny", &BipartiteGraph::ny)
      .def("add_edge", &BipartiteGraph::add_edge)
      .def("remove_edge", &BipartiteGraph::remove_edge)
      .def("has_edge", &BipartiteGraph::has_edge)
      .def("edge_count", &BipartiteGraph::edge_count)
      .def("xdeg", &BipartiteGraph::xdeg)
      .def("ydeg", &BipartiteGraph::ydeg)
      .def("__eq__", [](const BipartiteGraph& a,
                        const BipartiteGraph& b) { return a == b; })
      .def("__repr__", [](const BipartiteGraph& g) {
        return "<BipartiteGraph " + std::to_string(g.nx) + "x" +
               std::to_string(g.ny) + " m=" + std::to_string(g.edge_count()) +
               ">";
      });

  py::class_<Frame>(m, "Frame")
      .def(py::init([](BipartiteGraph g, std::uint64_t xstar, int r) {
             Frame f;
             f.g = std::move(g);
             f.xstar = xstar;
             f.r = r;
             return f;
           }),
           py::arg("g"), py::arg("xstar"), py::arg("r"))
      .def_readwrite("g", &Frame::g)
      .def_readwrite("xstar", &Frame::xstar)
      .def_readwrite("r", &Frame::r);

  // Text formats.
  m.def("from_hg", [](const std::string& text) {
    std::istringstream in(text);
    return parse_hg(in);
  });
  m.def("to_hg", &to_hg_string);
  m.def("from_bg", [](const std::string& text) {
    std::istringstream in(text);
    return parse_bg(in);
  });
  m.def("to_bg", &to_bg_string);

  // Circumference family and saturation.
  m.def("incidence_graph", &incidence_graph);
  m.def("circumference", &circumference);
  m.def("berge_circumference", &berge_circumference);
  m.def("longest_berge_path", &longest_berge_path);
  m.def("direct_berge_circumference", &direct_berge_circumference);
  m.def("has_berge_cycle_at_least", &has_berge_cycle_at_least);
  m.def("is_saturated", &is_saturated);
  m.def("saturate", &saturate);
  m.def("disintegrate",
        [](const BipartiteGraph& g, int alpha, std::uint64_t xstar,
           std::uint64_t ystar) {
          Core core = disintegrate(g, alpha, xstar, ystar);
          return py::make_tuple(core.keep_x, core.keep_y);
        });

  // Theorem verdicts.
  m.def("theorem_ids", [] { return theorem_ids(); });
  m.def("bound_value",
        [](const std::string& theorem, std::int64_t n, int k, int r,
           std::int64_t D, std::int64_t Q) {
          Rat b = bound_value(theorem, n, k, r, D, Q);
          return py::make_tuple(b.num, b.den);
        },
        py::arg("theorem"), py::arg("n"), py::arg("k"), py::arg("r"),
        py::arg("D") = 0, py::arg("Q") = 0);
  m.def("check_theorem",
        [](const MultiHypergraph& h, const std::string& theorem, int k,
           int r) { return verdict_to_dict(check_theorem(h, theorem, k, r)); },
        py::arg("h"), py::arg("theorem"), py::arg("k"), py::arg("r"));
  m.def("check_frame_theorem",
        [](const Frame& f, const std::string& theorem, int k) {
          return verdict_to_dict(check_theorem(f, theorem, k));
        },
        py::arg("f"), py::arg("theorem"), py::arg("k"));

  // Named constructions.
  m.def("make_block", &make_block, py::arg("r"), py::arg("k"),
        py::arg("full_edges") = false);
  m.def("make_block_tree",
        [](int r, int k, int blocks, const std::string& shape) {
          if (shape != "path" && shape != "star")
            throw std::invalid_argument("shape must be path or star");
          return make_block_tree(
              r, k, blocks,
              shape == "path" ? TreeShape::path : TreeShape::star);
        },
        py::arg("r"), py::arg("k"), py::arg("blocks"),
        py::arg("shape") = "path");
  m.def("make_star", &make_star, py::arg("n"), py::arg("r"));
  m.def("make_ht", &make_ht, py::arg("k"), py::arg("r"), py::arg("t"));
  m.def("make_t1_family", &make_t1_family, py::arg("r"), py::arg("k"),
        py::arg("s"), py::arg("t"));
  m.def("lift_for_paths", &lift_for_paths);

  // Census runner and conjecture scan.
  m.def("run_campaign",
        [](const std::string& klass, int n, int r, int k,
           const std::string& theorem, int max_mult, int m_, int shards,
           int shard_index, bool prune, std::uint64_t budget) {
          CampaignSpec spec;
          spec.klass = class_from_name(klass);
          spec.n = n;
          spec.r = r;
          spec.k = k;
          spec.theorem = theorem;
          spec.max_mult = max_mult;
          spec.m = m_;
          spec.shards = shards;
          spec.shard_index = shard_index;
          spec.prune = prune;
          if (budget > 0) spec.budget = budget;
          return census_to_dict(run_campaign(spec));
        },
        py::arg("klass"), py::arg("n"), py::arg("r"), py::arg("k"),
        py::arg("theorem"), py::arg("max_mult") = 1, py::arg("m") = 0,
        py::arg("shards") = 1, py::arg("shard_index") = -1,
        py::arg("prune") = false, py::arg("budget") = 0);
  m.def("conjecture_scan",
        [](int r, int n, std::uint64_t samples, std::uint64_t seed) {
          ConjectureScan scan = conjecture_scan(r, n, samples, seed);
          py::dict d;
          d["best_count"] = scan.best_count;
          d["bound"] = py::make_tuple(scan.bound.num, scan.bound.den);
          d["best_instance"] = scan.best_instance;
          d["consistent"] = scan.consistent;
          d["scanned"] = scan.scanned;
          return d;
        },
        py::arg("r"), py::arg("n"), py::arg("samples"), py::arg("seed"));
}
