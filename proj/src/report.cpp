#include "cliquedec/report.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <sstream>

#include "cliquedec/pattern.hpp"
#include "json.hpp"

namespace cliquedec {

using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

std::string part_name(VariablePart part) {
  switch (part) {
    case VariablePart::kRe:
      return "re";
    case VariablePart::kIm:
      return "im";
    case VariablePart::kNone:
      break;
  }
  return "none";
}

VariablePart parse_part(const std::string& name) {
  if (name == "re") return VariablePart::kRe;
  if (name == "im") return VariablePart::kIm;
  if (name == "none") return VariablePart::kNone;
  throw MalformedInput("unknown variable part '" + name + "'", 0);
}

json stats_json(const DecompositionStats& s) {
  return {{"nc", s.nc},
          {"nlc", s.nlc},
          {"max_clique_size", s.max_clique_size},
          {"fill_count", s.fill_count}};
}

json tree_json(const std::vector<TreeEdge>& tree) {
  json edges = json::array();
  for (const TreeEdge& e : tree) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"separator", e.separator}});
  }
  return edges;
}

json variables_json(const std::vector<NodeLabel>& labels) {
  json vars = json::array();
  for (const NodeLabel& l : labels) {
    vars.push_back({{"bus", l.bus}, {"part", part_name(l.part)}});
  }
  return vars;
}

json to_json(const Report& r) {
  json rounds = json::array();
  for (const RoundStats& s : r.merge_rounds) {
    rounds.push_back({{"round", s.round},
                      {"merges", s.merges},
                      {"objective", s.objective},
                      {"nc", s.nc},
                      {"nlc", s.nlc},
                      {"max_block_size", s.max_block_size}});
  }
  json j = {{"schema", kReportSchema},
            {"instance", r.instance},
            {"side", side_name(r.side)},
            {"strategy", r.strategy},
            {"seed", nullptr},
            {"max_block_size", r.max_block_size},
            {"rounds_requested", r.rounds_requested},
            {"fill_count", r.fill_count},
            {"real_fill_count", r.real_fill_count},
            {"initial", stats_json(r.initial)},
            {"merge_rounds", rounds},
            {"nc", r.nc},
            {"nlc", r.nlc},
            {"max_clique_size", r.max_clique_size},
            {"variables", variables_json(r.variables)},
            {"blocks", r.blocks},
            {"tree", tree_json(r.tree)}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

json summary_json(const Report& r) {
  json j = {{"instance", r.instance},     {"side", side_name(r.side)},
            {"strategy", r.strategy},     {"seed", nullptr},
            {"fill_count", r.fill_count}, {"real_fill_count", r.real_fill_count},
            {"nc", r.nc},                 {"nlc", r.nlc},
            {"max_clique_size", r.max_clique_size}};
  if (r.seed) j["seed"] = *r.seed;
  return j;
}

json ratio_json(const std::optional<double>& ratio) {
  return ratio ? json(*ratio) : json(nullptr);
}

Report report_from_json(const json& j) {
  if (j.at("schema").get<int>() != kReportSchema) {
    throw MalformedInput("unsupported report schema", 0);
  }
  Report r;
  r.instance = j.at("instance").get<std::string>();
  r.side = parse_side(j.at("side").get<std::string>());
  r.strategy = j.at("strategy").get<std::string>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  r.max_block_size = j.at("max_block_size").get<std::size_t>();
  r.rounds_requested = j.at("rounds_requested").get<std::size_t>();
  r.fill_count = j.at("fill_count").get<std::size_t>();
  r.real_fill_count = j.at("real_fill_count").get<std::size_t>();
  const json& init = j.at("initial");
  r.initial.nc = init.at("nc").get<std::size_t>();
  r.initial.nlc = init.at("nlc").get<std::uint64_t>();
  r.initial.max_clique_size = init.at("max_clique_size").get<std::size_t>();
  r.initial.fill_count = init.at("fill_count").get<std::size_t>();
  for (const json& s : j.at("merge_rounds")) {
    RoundStats rs;
    rs.round = s.at("round").get<std::size_t>();
    rs.merges = s.at("merges").get<std::size_t>();
    rs.objective = s.at("objective").get<std::uint64_t>();
    rs.nc = s.at("nc").get<std::size_t>();
    rs.nlc = s.at("nlc").get<std::uint64_t>();
    rs.max_block_size = s.at("max_block_size").get<std::size_t>();
    r.merge_rounds.push_back(rs);
  }
  r.nc = j.at("nc").get<std::size_t>();
  r.nlc = j.at("nlc").get<std::uint64_t>();
  r.max_clique_size = j.at("max_clique_size").get<std::size_t>();
  for (const json& v : j.at("variables")) {
    r.variables.push_back({v.at("bus").get<std::int64_t>(),
                           parse_part(v.at("part").get<std::string>())});
  }
  r.blocks = j.at("blocks").get<std::vector<Clique>>();
  for (const json& e : j.at("tree")) {
    r.tree.push_back({e.at("a").get<std::size_t>(),
                      e.at("b").get<std::size_t>(),
                      e.at("separator").get<Clique>()});
  }
  return r;
}

}  // namespace

std::string side_name(Side side) {
  return side == Side::kComplex ? "complex" : "real";
}

Side parse_side(const std::string& name) {
  if (name == "complex") return Side::kComplex;
  if (name == "real") return Side::kReal;
  throw ConfigError("unknown side '" + name + "' (expected complex or real)");
}

void validate(const PipelineConfig& config) {
  if (config.max_block_size < 1) {
    throw ConfigError("max block size must be at least 1");
  }
}

NetworkTopology read_topology(const std::filesystem::path& path,
                              InputFormat format) {
  const std::string text = read_file(path);
  if (format == InputFormat::kAuto) {
    format = path.extension() == ".m" ? InputFormat::kMatpower
                                      : InputFormat::kEdgeList;
  }
  return format == InputFormat::kMatpower ? parse_matpower(text)
                                          : parse_edge_list(text);
}

Report run_pipeline(const PipelineConfig& config) {
  validate(config);
  PipelineConfig named = config;
  if (named.instance.empty()) named.instance = config.input.stem().string();
  return run_pipeline(read_topology(config.input, config.format), named);
}

Report run_pipeline(const NetworkTopology& topology,
                    const PipelineConfig& config) {
  validate(config);
  Report report;
  report.instance = config.instance.empty() ? "instance" : config.instance;
  report.side = config.side;
  report.strategy = strategy_name(config.ordering);
  if (const auto* random = std::get_if<strategy::Random>(&config.ordering)) {
    report.seed = random->seed;
  }
  report.max_block_size = config.max_block_size;
  report.rounds_requested = config.rounds;

  const SparsityGraph complex_pattern = build_complex_pattern(topology);
  CliqueList blocks;
  CliqueTree tree;
  if (config.side == Side::kComplex) {
    const ChordalExtension h = chordal_extension(complex_pattern,
                                                 config.ordering);
    const CliqueList cliques = maximal_cliques(h);
    const CliqueTree complex_tree = build_clique_tree(cliques);
    report.fill_count = h.fill_count();
    report.real_fill_count = realify_extension(h).fill_count();
    report.initial =
        decomposition_stats(h, cliques, complex_tree, Side::kComplex);
    blocks = realify_cliques(cliques);
    tree = realify_tree(complex_tree);
    canonicalize(blocks, tree);
  } else {
    const SparsityGraph real_pattern = realify_graph(complex_pattern);
    const ChordalExtension h = chordal_extension(real_pattern,
                                                 config.ordering);
    blocks = maximal_cliques(h);
    tree = build_clique_tree(blocks);
    report.fill_count = h.fill_count();
    report.real_fill_count = h.fill_count();
    report.initial = decomposition_stats(h, blocks, tree, Side::kReal);
  }

  MergeResult merged =
      merge_rounds(blocks, tree, config.max_block_size, config.rounds);
  report.merge_rounds = std::move(merged.rounds);
  const DecompositionStats final_stats = decomposition_stats(
      merged.cliques, merged.tree, Side::kReal, report.fill_count);
  report.nc = final_stats.nc;
  report.nlc = final_stats.nlc;
  report.max_clique_size = final_stats.max_clique_size;
  report.variables = realify_graph(complex_pattern).labels();
  report.blocks = std::move(merged.cliques.cliques);
  report.tree = std::move(merged.tree.edges);
  return report;
}

DecompositionStats recompute_stats(const Report& report) {
  CliqueList cliques{report.variables.size(), report.blocks};
  CliqueTree tree{report.blocks.size(), report.tree};
  return decomposition_stats(cliques, tree, Side::kReal, report.fill_count);
}

std::string serialize(const Report& report) {
  return to_json(report).dump(2) + "\n";
}

Report deserialize(const std::string& json_text) {
  try {
    return report_from_json(json::parse(json_text));
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("invalid report: ") + e.what(), 0);
  }
}

std::optional<double> percent_ratio(double a, double b) {
  if (a == 0.0) return std::nullopt;
  return std::round((b / a - 1.0) * 10000.0) / 100.0;
}

ComparisonReport compare(const NetworkTopology& topology,
                         const PipelineConfig& a, const PipelineConfig& b) {
  auto run_b = std::async(std::launch::async,
                          [&] { return run_pipeline(topology, b); });
  ComparisonReport out;
  out.a = run_pipeline(topology, a);
  out.b = run_b.get();
  out.nc_ratio_pct = percent_ratio(static_cast<double>(out.a.nc),
                                   static_cast<double>(out.b.nc));
  out.nlc_ratio_pct = percent_ratio(static_cast<double>(out.a.nlc),
                                    static_cast<double>(out.b.nlc));
  out.max_clique_ratio_pct =
      percent_ratio(static_cast<double>(out.a.max_clique_size),
                    static_cast<double>(out.b.max_clique_size));
  out.fill_ratio_pct =
      percent_ratio(static_cast<double>(out.a.real_fill_count),
                    static_cast<double>(out.b.real_fill_count));
  return out;
}

ComparisonReport compare(const PipelineConfig& a, const PipelineConfig& b) {
  validate(a);
  validate(b);
  namespace fs = std::filesystem;
  std::error_code ec_a, ec_b;
  const fs::path pa = fs::weakly_canonical(a.input, ec_a);
  const fs::path pb = fs::weakly_canonical(b.input, ec_b);
  if (pa != pb || a.format != b.format) {
    throw ConfigError("compared pipelines must read the same instance");
  }
  PipelineConfig named_a = a;
  PipelineConfig named_b = b;
  if (named_a.instance.empty()) named_a.instance = a.input.stem().string();
  if (named_b.instance.empty()) named_b.instance = b.input.stem().string();
  return compare(read_topology(a.input, a.format), named_a, named_b);
}

std::string serialize(const ComparisonReport& c) {
  json j = {{"schema", kReportSchema},
            {"a", summary_json(c.a)},
            {"b", summary_json(c.b)},
            {"ratios_pct",
             {{"nc", ratio_json(c.nc_ratio_pct)},
              {"nlc", ratio_json(c.nlc_ratio_pct)},
              {"max_clique_size", ratio_json(c.max_clique_ratio_pct)},
              {"real_fill_count", ratio_json(c.fill_ratio_pct)}}}};
  return j.dump(2) + "\n";
}

std::string export_blocks_json(const Report& report) {
  json blocks = json::array();
  for (std::size_t i = 0; i < report.blocks.size(); ++i) {
    blocks.push_back({{"id", i}, {"variables", report.blocks[i]}});
  }
  json j = {{"schema", kReportSchema},
            {"instance", report.instance},
            {"variable_count", report.variables.size()},
            {"variables", variables_json(report.variables)},
            {"blocks", blocks},
            {"separators", tree_json(report.tree)}};
  return j.dump(2) + "\n";
}

void export_blocks(const Report& report, const std::filesystem::path& path) {
  write_file(path, export_blocks_json(report));
}

}  // namespace cliquedec
