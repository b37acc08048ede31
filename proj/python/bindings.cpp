#include <set>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "cliquedec/decomposition.hpp"
#include "cliquedec/graph.hpp"
#include "cliquedec/merge.hpp"
#include "cliquedec/network.hpp"
#include "cliquedec/ordering.hpp"
#include "cliquedec/pattern.hpp"
#include "cliquedec/report.hpp"

namespace py = pybind11;
using namespace cliquedec;

namespace {

using EdgeTuple = std::pair<Node, Node>;
using TreeTuple = std::tuple<std::size_t, std::size_t, Clique>;

std::vector<Edge> to_edges(const std::vector<EdgeTuple>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.emplace_back(u, v);
  return edges;
}

std::vector<EdgeTuple> from_edges(const std::vector<Edge>& edges) {
  std::vector<EdgeTuple> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.first, e.second);
  return out;
}

std::vector<TreeTuple> from_tree(const CliqueTree& tree) {
  std::vector<TreeTuple> out;
  for (const TreeEdge& e : tree.edges) out.emplace_back(e.a, e.b, e.separator);
  return out;
}

CliqueTree to_tree(std::size_t clique_count,
                   const std::vector<TreeTuple>& edges) {
  CliqueTree tree;
  tree.clique_count = clique_count;
  for (const auto& [a, b, sep] : edges) tree.edges.push_back({a, b, sep});
  return tree;
}

PipelineConfig make_config(const std::string& side, const std::string& order,
                           std::uint64_t seed, std::size_t smax,
                           std::size_t rounds, const std::string& instance) {
  PipelineConfig cfg;
  cfg.side = parse_side(side);
  cfg.ordering = parse_strategy(order, seed);
  cfg.max_block_size = smax;
  cfg.rounds = rounds;
  cfg.instance = instance;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_cliquedec, m) {
  m.doc() = "Clique decompositions of power-network sparsity patterns";

  py::register_exception<MalformedInput>(m, "MalformedInput",
                                         PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InvalidPlan>(m, "InvalidPlan", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<SparsityGraph>(m, "SparsityGraph")
      .def(py::init([](std::size_t n, const std::vector<EdgeTuple>& edges) {
             return SparsityGraph(n, to_edges(edges));
           }),
           py::arg("node_count"), py::arg("edges"))
      .def_property_readonly("node_count", &SparsityGraph::node_count)
      .def_property_readonly("edge_count", &SparsityGraph::edge_count)
      .def("edges", [](const SparsityGraph& g) { return from_edges(g.edges()); })
      .def("neighbors",
           [](const SparsityGraph& g, Node v) {
             auto n = g.neighbors(v);
             return std::vector<Node>(n.begin(), n.end());
           })
      .def("has_edge", &SparsityGraph::has_edge);

  py::class_<ChordalExtension>(m, "ChordalExtension")
      .def_property_readonly("base", &ChordalExtension::base)
      .def_property_readonly("filled", &ChordalExtension::filled)
      .def_property_readonly("fill_edges",
                             [](const ChordalExtension& h) {
                               return from_edges(h.fill_edges());
                             })
      .def_property_readonly("fill_count", &ChordalExtension::fill_count)
      .def_property_readonly(
          "peo", [](const ChordalExtension& h) { return h.peo().perm(); });

  m.def("is_chordal", [](const SparsityGraph& g) {
    const ChordalityResult r = is_chordal(g);
    return std::make_pair(r.chordal, r.peo ? std::optional(r.peo->perm())
                                           : std::nullopt);
  });
  m.def("verify_peo", [](const SparsityGraph& g, std::vector<Node> order) {
    return verify_peo(g, Ordering(std::move(order)));
  });

  m.def("order_min_degree",
        [](const SparsityGraph& g) { return order_min_degree(g).perm(); });
  m.def("order_amd", [](const SparsityGraph& g) { return order_amd(g).perm(); });
  m.def("order_max_degree",
        [](const SparsityGraph& g) { return order_max_degree(g).perm(); });
  m.def(
      "order_random",
      [](const SparsityGraph& g, std::uint64_t seed) {
        return order_random(g, seed).perm();
      },
      py::arg("graph"), py::arg("seed"));
  m.def("symbolic_elimination",
        [](const SparsityGraph& g, std::vector<Node> order) {
          return symbolic_elimination(g, Ordering(std::move(order)));
        });

  m.def("realify_graph", &realify_graph);
  m.def("realify_clique",
        [](const Clique& c) { return realify_clique(c); });
  m.def("realify_extension", &realify_extension);

  m.def("maximal_cliques", [](const ChordalExtension& h) {
    return maximal_cliques(h).cliques;
  });
  m.def(
      "build_clique_tree",
      [](const std::vector<Clique>& cliques, std::size_t node_count) {
        return from_tree(build_clique_tree(CliqueList{node_count, cliques}));
      },
      py::arg("cliques"), py::arg("node_count"));
  m.def(
      "count_linking_constraints",
      [](std::size_t clique_count, const std::vector<TreeTuple>& edges,
         const std::string& side) {
        return count_linking_constraints(to_tree(clique_count, edges),
                                         parse_side(side));
      },
      py::arg("clique_count"), py::arg("tree"), py::arg("side") = "real");

  m.def(
      "solve_merge",
      [](std::size_t clique_count,
         const std::vector<std::tuple<std::size_t, std::size_t, std::size_t,
                                      std::uint64_t>>& edges,
         std::size_t max_block_size) {
        MergeModel model;
        model.clique_count = clique_count;
        model.max_block_size = max_block_size;
        for (const auto& [a, b, size, weight] : edges) {
          model.edges.push_back({a, b, 0, size, weight});
        }
        const MergePlan plan = solve_merge(model);
        return std::make_pair(plan.selected_edges, plan.objective);
      },
      py::arg("clique_count"), py::arg("edges"),
      py::arg("max_block_size") = kDefaultMaxBlockSize,
      "edges: (a, b, merged_size, weight) tuples forming a forest");
  m.def(
      "merge_rounds",
      [](const std::vector<Clique>& cliques, std::size_t node_count,
         std::size_t max_block_size, std::size_t rounds) {
        const CliqueList list{node_count, cliques};
        const MergeResult r = merge_rounds(list, build_clique_tree(list),
                                           max_block_size, rounds);
        py::list per_round;
        for (const RoundStats& s : r.rounds) {
          py::dict d;
          d["round"] = s.round;
          d["merges"] = s.merges;
          d["objective"] = s.objective;
          d["nc"] = s.nc;
          d["nlc"] = s.nlc;
          d["max_block_size"] = s.max_block_size;
          per_round.append(d);
        }
        return py::make_tuple(r.cliques.cliques, from_tree(r.tree), per_round);
      },
      py::arg("cliques"), py::arg("node_count"),
      py::arg("max_block_size") = kDefaultMaxBlockSize,
      py::arg("rounds") = kDefaultMergeRounds);

  m.def("parse_matpower", [](const std::string& text) {
    const NetworkTopology t = parse_matpower(text);
    std::vector<std::tuple<BusId, BusId, bool>> branches;
    for (const Branch& b : t.branches) {
      branches.emplace_back(b.from, b.to, b.in_service);
    }
    return std::make_pair(t.buses, branches);
  });

  m.def(
      "run_pipeline",
      [](const std::filesystem::path& input, const std::string& side,
         const std::string& order, std::uint64_t seed, std::size_t smax,
         std::size_t rounds) {
        PipelineConfig cfg = make_config(side, order, seed, smax, rounds, "");
        cfg.input = input;
        return serialize(run_pipeline(cfg));
      },
      py::arg("input"), py::arg("side") = "complex",
      py::arg("order") = "min_degree", py::arg("seed") = 0,
      py::arg("smax") = kDefaultMaxBlockSize, py::arg("rounds") = 0,
      "Runs the pipeline on a file and returns the JSON report text.");
  m.def(
      "run_pipeline_edges",
      [](const std::vector<std::pair<BusId, BusId>>& branches,
         const std::string& side, const std::string& order,
         std::uint64_t seed, std::size_t smax, std::size_t rounds,
         const std::string& instance) {
        NetworkTopology topology;
        std::set<BusId> buses;
        for (auto [u, v] : branches) {
          buses.insert(u);
          buses.insert(v);
          topology.branches.push_back({u, v, true});
        }
        topology.buses.assign(buses.begin(), buses.end());
        return serialize(run_pipeline(
            topology, make_config(side, order, seed, smax, rounds, instance)));
      },
      py::arg("branches"), py::arg("side") = "complex",
      py::arg("order") = "min_degree", py::arg("seed") = 0,
      py::arg("smax") = kDefaultMaxBlockSize, py::arg("rounds") = 0,
      py::arg("instance") = "instance",
      "Runs the pipeline on an in-memory branch list.");
  m.def("export_blocks", [](const std::string& report_json) {
    return export_blocks_json(deserialize(report_json));
  });

  m.attr("DEFAULT_MAX_BLOCK_SIZE") = kDefaultMaxBlockSize;
  m.attr("DEFAULT_MERGE_ROUNDS") = kDefaultMergeRounds;
}
