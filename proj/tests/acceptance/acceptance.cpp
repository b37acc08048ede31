// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and time limits are fixed here.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cliquedec/decomposition.hpp"
#include "cliquedec/merge.hpp"
#include "cliquedec/ordering.hpp"
#include "cliquedec/pattern.hpp"
#include "cliquedec/report.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace cliquedec;
using namespace cliquedec::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (condition || !ok) {
      ok = ok && condition;
      return;
    }
    ok = false;
    detail = what;
  }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    out.require(false, "took " + std::to_string(seconds) + " s, limit " +
                           std::to_string(limit_seconds) + " s");
  }
  std::printf("%s %s: %s (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title,
              seconds, out.ok ? "" : " -- ", out.detail.c_str());
  std::fflush(stdout);
  if (!out.ok) ++failures;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

PipelineConfig config(Side side, OrderingStrategy ordering,
                      std::size_t rounds = 0) {
  PipelineConfig c;
  c.side = side;
  c.ordering = std::move(ordering);
  c.rounds = rounds;
  c.instance = "instance";
  return c;
}

const std::vector<OrderingStrategy>& strategies() {
  static const std::vector<OrderingStrategy> all{
      strategy::MinDegree{}, strategy::Amd{}, strategy::Random{2718},
      strategy::MaxDegree{}};
  return all;
}

/// Random graphs shared by criteria 3a, 3c and 3d.
std::vector<SparsityGraph> random_instances() {
  Rng rng(4001);
  std::vector<SparsityGraph> out;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = uniform(rng, 1, 40);
    const double p = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
    out.push_back(random_graph(rng, n, p));
  }
  return out;
}

std::vector<SparsityGraph> random_chordal_instances() {
  Rng rng(4002);
  std::vector<SparsityGraph> out;
  for (int i = 0; i < 100; ++i) {
    out.push_back(random_chordal_graph(rng, uniform(rng, 1, 12)));
  }
  return out;
}

/// Grid-like networks shared by criteria 4 and 5.
std::vector<NetworkTopology> grid_instances() {
  Rng rng(4004);
  std::vector<NetworkTopology> out;
  while (out.size() < 20) {
    const std::size_t rows = uniform(rng, 5, 25);
    const std::size_t cols = uniform(rng, 5, 25);
    if (rows * cols < 50 || rows * cols > 500) continue;
    out.push_back(grid_like_topology(rng, rows, cols));
  }
  return out;
}

/// One merge application on a decomposition; checks the nlc identity.
void check_merge_identity(Outcome& out, const CliqueList& l,
                          const CliqueTree& t, std::size_t cap,
                          const std::string& where) {
  const MergePlan plan = solve_merge(make_merge_model(l, t, cap));
  const MergedDecomposition merged = apply_merge(l, t, plan);
  const std::uint64_t before = count_linking_constraints(t, Side::kReal);
  const std::uint64_t after = count_linking_constraints(merged.tree, Side::kReal);
  out.require(after == before - plan.objective,
              where + ": nlc " + str(before) + " -> " + str(after) +
                  " with objective " + str(plan.objective));
}

}  // namespace

int main() {
  criterion("1", "LMBM3 golden values", 1.0, [](Outcome& out) {
    const NetworkTopology t = parse_matpower(kLmbm3Matpower);

    const Report c = run_pipeline(t, config(Side::kComplex, strategy::MinDegree{}));
    out.require(c.nc == 1, "complex nc = " + str(c.nc));
    out.require(c.blocks.size() == 1 && c.blocks[0].size() == 6,
                "complex block is not 6 real variables");
    out.require(c.nlc == 0, "complex nlc = " + str(c.nlc));
    out.require(c.fill_count == 0, "complex fill = " + str(c.fill_count));

    const Report r = run_pipeline(t, config(Side::kReal, strategy::MinDegree{}));
    out.require(r.nc == 2, "real nc = " + str(r.nc));
    out.require(r.blocks.size() == 2 && r.blocks[0].size() == 5 &&
                    r.blocks[1].size() == 5,
                "real blocks are not two of size 5");
    out.require(r.tree.size() == 1 && r.tree[0].separator.size() == 4,
                "real separator is not of size 4");
    out.require(r.nlc == 10, "real nlc = " + str(r.nlc));
    out.require(r.fill_count == 2, "real fill = " + str(r.fill_count));
    out.require(r.max_clique_size == 5,
                "real max clique = " + str(r.max_clique_size));
  });

  criterion("2", "one merge round on the real LMBM3 decomposition", 1.0,
            [](Outcome& out) {
    const SparsityGraph gr = build_real_pattern(parse_matpower(kLmbm3Matpower));
    const CliqueList l = maximal_cliques(chordal_extension(gr, strategy::MinDegree{}));
    const CliqueTree t = build_clique_tree(l);
    const MergePlan plan = solve_merge(make_merge_model(l, t, 50));
    out.require(plan.objective == 10, "objective = " + str(plan.objective));
    const std::uint64_t k = 4;
    out.require(plan.objective == k * (k + 1) / 2, "objective formula");
    const MergeResult merged = merge_rounds(l, t, 50, 1);
    out.require(merged.cliques.cliques.size() == 1 &&
                    merged.cliques.cliques[0].size() == 6,
                "merged decomposition is not one block of 6");
    out.require(count_linking_constraints(merged.tree, Side::kReal) == 0,
                "merged nlc is not 0");
  });

  const std::vector<SparsityGraph> graphs = random_instances();

  criterion("3a", "chordality of every strategy on 200 random graphs", 30.0,
            [&](Outcome& out) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (const OrderingStrategy& s : strategies()) {
        const ChordalExtension h = chordal_extension(graphs[i], s);
        out.require(verify_peo(h.filled(), h.peo()),
                    "graph " + std::to_string(i) + " with " + strategy_name(s));
      }
    }
  });

  criterion("3b", "oracle equivalence for cliques and merge plans", 60.0,
            [](Outcome& out) {
    const std::vector<SparsityGraph> chordal = random_chordal_instances();
    for (std::size_t i = 0; i < chordal.size(); ++i) {
      const ChordalExtension h = chordal_extension(chordal[i], strategy::MinDegree{});
      out.require(maximal_cliques(h).cliques == brute_maximal_cliques(h.filled()),
                  "clique mismatch on chordal graph " + std::to_string(i));
    }
    Rng rng(4003);
    for (int i = 0; i < 100; ++i) {
      const MergeModel model = random_merge_forest(rng, uniform(rng, 2, 13), 12);
      const MergePlan expected = exhaustive_merge(model);
      const MergePlan got = solve_merge(model);
      out.require(got == expected,
                  "merge plan mismatch on forest " + std::to_string(i) +
                      ": objective " + str(got.objective) + " vs " +
                      str(expected.objective));
    }
  });

  criterion("3c", "running intersection and maximum tree weight", 30.0,
            [&](Outcome& out) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (const OrderingStrategy& s : strategies()) {
        const CliqueList l = maximal_cliques(chordal_extension(graphs[i], s));
        const CliqueTree t = build_clique_tree(l);
        const std::string where =
            "graph " + std::to_string(i) + " with " + strategy_name(s);
        out.require(satisfies_running_intersection(l, t), where + ": RIP");
        out.require(tree_weight(t) == kruskal_weight(l),
                    where + ": Prim " + str(tree_weight(t)) + " vs Kruskal " +
                        str(kruskal_weight(l)));
      }
    }
  });

  criterion("3d", "nlc accounting identity for every merge", 30.0,
            [&](Outcome& out) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (const OrderingStrategy& s : strategies()) {
        const CliqueList l = maximal_cliques(chordal_extension(graphs[i], s));
        const CliqueTree t = build_clique_tree(l);
        for (std::size_t cap : {4, 10, 50}) {
          check_merge_identity(out, l, t, cap,
                               "graph " + std::to_string(i) + " with " +
                                   strategy_name(s) + ", cap " +
                                   std::to_string(cap));
        }
      }
    }
    const std::vector<SparsityGraph> chordal = random_chordal_instances();
    for (std::size_t i = 0; i < chordal.size(); ++i) {
      const CliqueList l =
          maximal_cliques(chordal_extension(chordal[i], strategy::MinDegree{}));
      check_merge_identity(out, l, build_clique_tree(l), 8,
                           "chordal graph " + std::to_string(i));
    }
  });

  const std::vector<NetworkTopology> grids = grid_instances();

  criterion("4", "complex adds at least as many edges, real has at least as "
                 "many cliques (minimum degree, 20 grid-like networks)",
            60.0, [&](Outcome& out) {
    for (std::size_t i = 0; i < grids.size(); ++i) {
      const ComparisonReport cmp =
          compare(grids[i], config(Side::kComplex, strategy::MinDegree{}),
                  config(Side::kReal, strategy::MinDegree{}));
      const std::string where =
          "network " + std::to_string(i) + " (" +
          std::to_string(grids[i].buses.size()) + " buses)";
      out.require(cmp.a.real_fill_count >= cmp.b.real_fill_count,
                  where + ": fill complex " + str(cmp.a.real_fill_count) +
                      " < real " + str(cmp.b.real_fill_count));
      out.require(cmp.b.nc >= cmp.a.nc, where + ": nc real " + str(cmp.b.nc) +
                                            " < complex " + str(cmp.a.nc));
    }
  });

  criterion("5", "merge rounds 0..6 never raise nlc and respect the cap", 60.0,
            [&](Outcome& out) {
    for (std::size_t i = 0; i < grids.size(); ++i) {
      for (Side side : {Side::kComplex, Side::kReal}) {
        const Report base =
            run_pipeline(grids[i], config(side, strategy::MinDegree{}, 6));
        const std::string where =
            "network " + std::to_string(i) + " " + side_name(side);
        const std::size_t cap = std::max<std::size_t>(base.initial.max_clique_size, 50);
        std::uint64_t previous = base.initial.nlc;
        for (const RoundStats& round : base.merge_rounds) {
          out.require(round.nlc <= previous,
                      where + ": nlc rose in round " + std::to_string(round.round));
          out.require(round.max_block_size <= cap,
                      where + ": block of " + str(round.max_block_size) +
                          " in round " + std::to_string(round.round));
          previous = round.nlc;
        }
        for (std::size_t rounds = 0; rounds <= 6; ++rounds) {
          const Report r =
              run_pipeline(grids[i], config(side, strategy::MinDegree{}, rounds));
          const std::uint64_t expected =
              rounds == 0 || base.merge_rounds.empty()
                  ? base.initial.nlc
                  : base.merge_rounds[std::min(rounds, base.merge_rounds.size()) - 1].nlc;
          out.require(r.nlc == expected,
                      where + ": rounds " + std::to_string(rounds) +
                          " disagrees with the round log");
          out.require(r.max_clique_size <= cap,
                      where + ": max block " + str(r.max_clique_size));
        }
      }
    }
  });

  criterion("6", "identical configs give byte-identical reports", 60.0,
            [&](Outcome& out) {
    std::vector<NetworkTopology> inputs{parse_matpower(kLmbm3Matpower), grids[0],
                                        grids[7]};
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      for (Side side : {Side::kComplex, Side::kReal}) {
        for (const OrderingStrategy& s : strategies()) {
          for (std::size_t rounds : {0, 4}) {
            const PipelineConfig c = config(side, s, rounds);
            const std::string first = serialize(run_pipeline(inputs[i], c));
            const std::string second = serialize(run_pipeline(inputs[i], c));
            out.require(first == second,
                        "input " + std::to_string(i) + " " + side_name(side) +
                            " " + strategy_name(s) + " rounds " +
                            std::to_string(rounds));
            out.require(serialize(deserialize(first)) == first,
                        "round trip changed input " + std::to_string(i));
          }
        }
      }
    }
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
