#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cliquedec {

using BusId = std::int64_t;

struct Branch {
  BusId from = 0;
  BusId to = 0;
  bool in_service = true;

  friend bool operator==(const Branch&, const Branch&) = default;
};

/// Buses and branches of a transmission network. Branch orientation is kept
/// for round-tripping but carries no meaning for sparsity.
struct NetworkTopology {
  std::vector<BusId> buses;
  std::vector<Branch> branches;

  friend bool operator==(const NetworkTopology&,
                         const NetworkTopology&) = default;
};

/// Parse failure. `line()` is 1-based; 0 when the problem has no single
/// location (e.g. a missing block).
class MalformedInput : public std::runtime_error {
 public:
  MalformedInput(const std::string& what, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the `mpc.bus` and `mpc.branch` matrices of a MATPOWER case file.
/// Bus ids come from column 1; branches from columns 1-2, in service when
/// column 11 (BR_STATUS) is nonzero or absent. Every other column is ignored.
NetworkTopology parse_matpower(std::string_view text);

/// One `u v` pair per line, `#` starts a comment. Buses are the distinct
/// endpoints in ascending order; every branch is in service.
NetworkTopology parse_edge_list(std::string_view text);

/// Minimal MATPOWER text that parse_matpower reads back to the same
/// topology. Electrical columns are written as zeros.
std::string write_matpower(const NetworkTopology& topology,
                           std::string_view name = "case");

/// In-service branches only, one per line.
std::string write_edge_list(const NetworkTopology& topology);

/// Throws MalformedInput on duplicate bus ids, dangling endpoints or
/// self-loops.
void validate(const NetworkTopology& topology);

}  // namespace cliquedec
