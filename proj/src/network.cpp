#include "cliquedec/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cliquedec {

MalformedInput::MalformedInput(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) + ": " +
                                         what),
      line_(line) {}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::string_view strip_comment(std::string_view line, char marker) {
  const std::size_t pos = line.find(marker);
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

std::vector<std::string_view> tokenize(std::string_view s,
                                       std::string_view separators) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && separators.find(s[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < s.size() && separators.find(s[j]) == std::string_view::npos) ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::optional<double> to_double(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  return value;
}

std::optional<BusId> to_bus_id(std::string_view token) {
  const auto value = to_double(token);
  if (!value || !std::isfinite(*value) || std::floor(*value) != *value) {
    return std::nullopt;
  }
  return static_cast<BusId>(*value);
}

struct Row {
  std::size_t line;
  std::vector<std::string_view> cells;
};

/// Rows of the numeric matrix assigned to `mpc.<name>`.
std::vector<Row> read_matrix(const std::vector<std::string_view>& lines,
                             const std::string& name) {
  const std::regex header("(^|[^A-Za-z0-9_.])mpc\\." + name +
                          "\\s*=\\s*\\[");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string line(strip_comment(lines[i], '%'));
    std::smatch match;
    if (!std::regex_search(line, match, header)) continue;

    std::vector<Row> rows;
    std::size_t offset = static_cast<std::size_t>(match.position(0) +
                                                  match.length(0));
    for (std::size_t k = i; k < lines.size(); ++k) {
      std::string_view body = strip_comment(lines[k], '%');
      if (k == i) body.remove_prefix(std::min(offset, body.size()));
      const std::size_t close = body.find(']');
      const bool last = close != std::string_view::npos;
      if (last) body = body.substr(0, close);
      for (std::string_view piece : tokenize(body, ";")) {
        auto cells = tokenize(piece, " \t,");
        if (!cells.empty()) rows.push_back({k + 1, std::move(cells)});
      }
      if (last) return rows;
    }
    throw MalformedInput("unterminated mpc." + name + " block", i + 1);
  }
  throw MalformedInput("missing mpc." + name + " block", 0);
}

}  // namespace

NetworkTopology parse_matpower(std::string_view text) {
  const auto lines = split_lines(text);
  NetworkTopology topology;

  std::unordered_set<BusId> known;
  for (const Row& row : read_matrix(lines, "bus")) {
    for (auto cell : row.cells) {
      if (!to_double(cell)) {
        throw MalformedInput(
            "non-numeric bus entry '" + std::string(cell) + "'", row.line);
      }
    }
    const auto id = to_bus_id(row.cells.front());
    if (!id) throw MalformedInput("bus id is not an integer", row.line);
    if (!known.insert(*id).second) {
      throw MalformedInput("duplicate bus id " + std::to_string(*id),
                           row.line);
    }
    topology.buses.push_back(*id);
  }

  constexpr std::size_t kStatusColumn = 10;
  for (const Row& row : read_matrix(lines, "branch")) {
    for (auto cell : row.cells) {
      if (!to_double(cell)) {
        throw MalformedInput(
            "non-numeric branch entry '" + std::string(cell) + "'", row.line);
      }
    }
    if (row.cells.size() < 2) {
      throw MalformedInput("branch row needs at least two columns", row.line);
    }
    const auto from = to_bus_id(row.cells[0]);
    const auto to = to_bus_id(row.cells[1]);
    if (!from || !to) {
      throw MalformedInput("branch endpoint is not an integer", row.line);
    }
    for (BusId end : {*from, *to}) {
      if (!known.contains(end)) {
        throw MalformedInput(
            "branch references unknown bus " + std::to_string(end), row.line);
      }
    }
    if (*from == *to) {
      throw MalformedInput("self-loop branch at bus " + std::to_string(*from),
                           row.line);
    }
    bool in_service = true;
    if (row.cells.size() > kStatusColumn) {
      in_service = *to_double(row.cells[kStatusColumn]) != 0.0;
    }
    topology.branches.push_back({*from, *to, in_service});
  }
  return topology;
}

NetworkTopology parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  NetworkTopology topology;
  std::set<BusId> buses;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto tokens = tokenize(strip_comment(lines[i], '#'), " \t,");
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw MalformedInput("expected exactly two bus ids", i + 1);
    }
    BusId ends[2];
    for (int k = 0; k < 2; ++k) {
      auto [ptr, ec] = std::from_chars(
          tokens[k].data(), tokens[k].data() + tokens[k].size(), ends[k]);
      if (ec != std::errc() || ptr != tokens[k].data() + tokens[k].size()) {
        throw MalformedInput(
            "non-integer token '" + std::string(tokens[k]) + "'", i + 1);
      }
    }
    if (ends[0] == ends[1]) {
      throw MalformedInput("self-loop at bus " + std::to_string(ends[0]),
                           i + 1);
    }
    buses.insert(ends[0]);
    buses.insert(ends[1]);
    topology.branches.push_back({ends[0], ends[1], true});
  }
  topology.buses.assign(buses.begin(), buses.end());
  return topology;
}

std::string write_matpower(const NetworkTopology& topology,
                           std::string_view name) {
  std::ostringstream out;
  out << "function mpc = " << name << "\n";
  out << "mpc.version = '2';\n";
  out << "mpc.baseMVA = 100;\n\n";
  out << "%% bus data\n%\tbus_i\n";
  out << "mpc.bus = [\n";
  for (BusId bus : topology.buses) out << "\t" << bus << ";\n";
  out << "];\n\n";
  out << "%% branch data\n%\tfbus\ttbus\tr\tx\tb\trateA\trateB\trateC\tratio"
         "\tangle\tstatus\n";
  out << "mpc.branch = [\n";
  for (const Branch& br : topology.branches) {
    out << "\t" << br.from << "\t" << br.to;
    for (int k = 0; k < 8; ++k) out << "\t0";
    out << "\t" << (br.in_service ? 1 : 0) << ";\n";
  }
  out << "];\n";
  return out.str();
}

std::string write_edge_list(const NetworkTopology& topology) {
  std::ostringstream out;
  for (const Branch& br : topology.branches) {
    if (br.in_service) out << br.from << " " << br.to << "\n";
  }
  return out.str();
}

void validate(const NetworkTopology& topology) {
  std::unordered_set<BusId> known;
  for (BusId bus : topology.buses) {
    if (!known.insert(bus).second) {
      throw MalformedInput("duplicate bus id " + std::to_string(bus), 0);
    }
  }
  for (const Branch& br : topology.branches) {
    if (!known.contains(br.from) || !known.contains(br.to)) {
      throw MalformedInput("branch references unknown bus", 0);
    }
    if (br.from == br.to) {
      throw MalformedInput("self-loop branch at bus " +
                               std::to_string(br.from),
                           0);
    }
  }
}

}  // namespace cliquedec
