#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquedec/decomposition.hpp"
#include "cliquedec/merge.hpp"
#include "cliquedec/network.hpp"
#include "cliquedec/ordering.hpp"

namespace cliquedec {

inline constexpr int kReportSchema = 1;

enum class InputFormat { kAuto, kMatpower, kEdgeList };

/// Invalid parameter combination.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unreadable input or output file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineConfig {
  std::filesystem::path input;
  InputFormat format = InputFormat::kAuto;
  Side side = Side::kComplex;
  OrderingStrategy ordering = strategy::MinDegree{};
  std::size_t max_block_size = kDefaultMaxBlockSize;
  std::size_t rounds = 0;
  /// Defaults to the input file stem.
  std::string instance;
};

/// Throws ConfigError.
void validate(const PipelineConfig& config);

/// Outcome of one decompose (+ merge) run. Blocks and separators are always
/// over real variables: index 2n / 2n+1 is the Re / Im half of bus n in
/// topology order.
struct Report {
  std::string instance;
  Side side = Side::kComplex;
  std::string strategy;
  std::optional<std::uint64_t> seed;
  std::size_t max_block_size = kDefaultMaxBlockSize;
  std::size_t rounds_requested = 0;

  /// Fill edges on the pattern the extension was computed on.
  std::size_t fill_count = 0;
  /// Fill edges relative to the real pattern (complex extensions realified).
  std::size_t real_fill_count = 0;
  /// Decomposition before merging.
  DecompositionStats initial;
  std::vector<RoundStats> merge_rounds;

  std::size_t nc = 0;
  std::uint64_t nlc = 0;
  std::size_t max_clique_size = 0;

  std::vector<NodeLabel> variables;
  std::vector<Clique> blocks;
  std::vector<TreeEdge> tree;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Reads and parses `path`; kAuto picks MATPOWER for `.m` files and the
/// edge list otherwise. Throws IoError or MalformedInput.
NetworkTopology read_topology(const std::filesystem::path& path,
                              InputFormat format);

/// Runs ingest, pattern, chordal extension, clique tree and `rounds` merge
/// rounds. Deterministic for a fixed config.
Report run_pipeline(const PipelineConfig& config);
Report run_pipeline(const NetworkTopology& topology,
                    const PipelineConfig& config);

/// nc / nlc / max block size recomputed from the block list and tree.
DecompositionStats recompute_stats(const Report& report);

/// JSON with sorted keys, pretty-printed, trailing newline.
std::string serialize(const Report& report);
/// Throws MalformedInput on schema violations.
Report deserialize(const std::string& json_text);

struct ComparisonReport {
  Report a;
  Report b;
  /// 100 * (b / a - 1), rounded to 2 decimals; empty when a's value is 0.
  std::optional<double> nc_ratio_pct;
  std::optional<double> nlc_ratio_pct;
  std::optional<double> max_clique_ratio_pct;
  std::optional<double> fill_ratio_pct;
};

std::optional<double> percent_ratio(double a, double b);

/// Runs both pipelines (concurrently) on the same input. Throws ConfigError
/// when the inputs differ.
ComparisonReport compare(const PipelineConfig& a, const PipelineConfig& b);
ComparisonReport compare(const NetworkTopology& topology,
                         const PipelineConfig& a, const PipelineConfig& b);

/// Summary rows plus ratios; block lists are omitted.
std::string serialize(const ComparisonReport& comparison);

/// Block structure for building the decomposed SDP: every block's sorted
/// real variables, every tree edge's separator, and the variable labels.
std::string export_blocks_json(const Report& report);
/// Throws IoError.
void export_blocks(const Report& report, const std::filesystem::path& path);

std::string side_name(Side side);
/// "complex" or "real"; throws ConfigError otherwise.
Side parse_side(const std::string& name);

}  // namespace cliquedec
