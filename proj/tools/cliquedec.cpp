// cliquedec: clique decompositions of power-network sparsity patterns.
//
//   cliquedec decompose case.m --side real --order amd
//   cliquedec merge case.m --smax 50 --rounds 4 --out report.json
//   cliquedec compare case.m --side complex --side real
//   cliquedec export report.json --out blocks.json
//
// Exit codes: 0 success, 1 input error, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cliquedec/report.hpp"

namespace {

using namespace cliquedec;

constexpr int kInputError = 1;
constexpr int kConfigError = 2;

struct PipelineFlags {
  std::string input;
  std::string format = "auto";
  std::vector<std::string> sides{"complex"};
  std::vector<std::string> orders{"min_degree"};
  std::vector<std::uint64_t> seeds{0};
  std::size_t smax = kDefaultMaxBlockSize;
  std::size_t rounds = kDefaultMergeRounds;
  std::string out;
  bool summary = false;
};

void add_pipeline_flags(CLI::App* cmd, PipelineFlags& f, bool pairs) {
  cmd->add_option("input", f.input, "MATPOWER case (.m) or edge list")
      ->required();
  cmd->add_option("--format", f.format, "Input format")
      ->check(CLI::IsMember({"auto", "matpower", "edgelist"}))
      ->capture_default_str();
  auto* side = cmd->add_option("--side", f.sides,
                               "Variable space: complex or real")
                   ->capture_default_str();
  auto* order = cmd->add_option("--order", f.orders,
                                "Ordering: min_degree|md, amd, random, "
                                "max_degree|maxdeg")
                    ->capture_default_str();
  auto* seed = cmd->add_option("--seed", f.seeds, "Seed for --order random")
                   ->capture_default_str();
  for (auto* opt : {side, order, seed}) {
    opt->expected(1, pairs ? 2 : 1);
    if (pairs) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  }
  cmd->add_option("--out", f.out, "Write the JSON report to this file");
  cmd->add_flag("--summary", f.summary, "Print a one-line summary instead");
}

InputFormat parse_format(const std::string& name) {
  if (name == "matpower") return InputFormat::kMatpower;
  if (name == "edgelist") return InputFormat::kEdgeList;
  return InputFormat::kAuto;
}

template <typename T>
const T& pick(const std::vector<T>& values, std::size_t k) {
  if (values.size() > 2) throw ConfigError("at most two values per flag");
  return values.size() > k ? values[k] : values.front();
}

PipelineConfig make_config(const PipelineFlags& f, std::size_t k,
                           std::size_t rounds) {
  PipelineConfig cfg;
  cfg.input = f.input;
  cfg.format = parse_format(f.format);
  cfg.side = parse_side(pick(f.sides, k));
  try {
    cfg.ordering = parse_strategy(pick(f.orders, k), pick(f.seeds, k));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  cfg.max_block_size = f.smax;
  cfg.rounds = rounds;
  return cfg;
}

std::string summary_line(const Report& r) {
  std::ostringstream out;
  out << r.instance << " side=" << side_name(r.side)
      << " order=" << r.strategy << " fill=" << r.fill_count
      << " real_fill=" << r.real_fill_count << " nc=" << r.nc
      << " nlc=" << r.nlc << " max=" << r.max_clique_size;
  if (!r.merge_rounds.empty()) {
    out << " (before merge: nc=" << r.initial.nc
        << " nlc=" << r.initial.nlc << ", rounds=" << r.merge_rounds.size()
        << ")";
  }
  return out.str();
}

std::string format_ratio(const std::optional<double>& ratio) {
  if (!ratio) return "undefined ratio";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%+.2f%%", *ratio);
  return buf;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique decompositions of power-network sparsity patterns"};
  app.require_subcommand(1);

  PipelineFlags decompose_flags;
  auto* decompose = app.add_subcommand(
      "decompose", "Chordal extension and clique tree, no merging");
  add_pipeline_flags(decompose, decompose_flags, false);

  PipelineFlags merge_flags;
  auto* merge =
      app.add_subcommand("merge", "Decompose, then merge adjacent cliques");
  add_pipeline_flags(merge, merge_flags, false);
  merge->add_option("--smax", merge_flags.smax, "Largest merged block")
      ->capture_default_str();
  merge->add_option("--rounds", merge_flags.rounds, "Merge rounds")
      ->capture_default_str();

  PipelineFlags compare_flags;
  compare_flags.rounds = 0;
  auto* compare_cmd = app.add_subcommand(
      "compare",
      "Compare two pipelines on one instance; give --side/--order/--seed "
      "twice to vary them");
  add_pipeline_flags(compare_cmd, compare_flags, true);
  compare_cmd->add_option("--smax", compare_flags.smax, "Largest merged block")
      ->capture_default_str();
  compare_cmd->add_option("--rounds", compare_flags.rounds,
                          "Merge rounds applied to both pipelines")
      ->capture_default_str();

  std::string export_input;
  std::string export_out;
  auto* export_cmd = app.add_subcommand(
      "export", "Write the block structure of a saved report");
  export_cmd->add_option("report", export_input, "Report JSON")->required();
  export_cmd->add_option("--out", export_out, "Block file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*decompose || *merge) {
      const PipelineFlags& f = *decompose ? decompose_flags : merge_flags;
      const Report report =
          run_pipeline(make_config(f, 0, *decompose ? 0 : f.rounds));
      emit(f.summary ? summary_line(report) + "\n" : serialize(report), f.out);
    } else if (*compare_cmd) {
      const PipelineFlags& f = compare_flags;
      const ComparisonReport c = compare(make_config(f, 0, f.rounds),
                                         make_config(f, 1, f.rounds));
      if (f.summary) {
        emit("a: " + summary_line(c.a) + "\nb: " + summary_line(c.b) +
                 "\nnc ratio " + format_ratio(c.nc_ratio_pct) +
                 ", nlc ratio " + format_ratio(c.nlc_ratio_pct) +
                 ", max clique ratio " +
                 format_ratio(c.max_clique_ratio_pct) + "\n",
             f.out);
      } else {
        emit(serialize(c), f.out);
      }
    } else if (*export_cmd) {
      std::ifstream in(export_input, std::ios::binary);
      if (!in) throw IoError("cannot read " + export_input);
      std::ostringstream text;
      text << in.rdbuf();
      const Report report = deserialize(text.str());
      if (export_out.empty()) {
        std::cout << export_blocks_json(report);
      } else {
        export_blocks(report, export_out);
      }
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
