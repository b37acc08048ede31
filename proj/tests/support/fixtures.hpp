#pragma once

#include <string>
#include <vector>

#include "cliquedec/graph.hpp"
#include "cliquedec/network.hpp"
#include "cliquedec/pattern.hpp"

namespace cliquedec::testing {

/// Three buses, every pair joined by a line.
inline NetworkTopology lmbm3_topology() {
  return {{1, 2, 3}, {{1, 2, true}, {1, 3, true}, {2, 3, true}}};
}

/// Real-variable node of bus b (1-based) in the LMBM3 real pattern.
inline Node re(int bus) { return re_index(static_cast<Node>(bus - 1)); }
inline Node im(int bus) { return im_index(static_cast<Node>(bus - 1)); }

/// The twelve cross edges of the real LMBM3 pattern.
inline std::vector<Edge> lmbm3_real_edges() {
  return {{re(1), re(2)}, {re(1), im(2)}, {im(1), re(2)}, {im(1), im(2)},
          {re(1), re(3)}, {re(1), im(3)}, {im(1), re(3)}, {im(1), im(3)},
          {re(2), re(3)}, {re(2), im(3)}, {im(2), re(3)}, {im(2), im(3)}};
}

inline SparsityGraph lmbm3_real_pattern() {
  return SparsityGraph(6, lmbm3_real_edges());
}

/// Real pattern plus the two Re/Im edges of buses 2 and 3.
inline SparsityGraph lmbm3_real_extension() {
  auto edges = lmbm3_real_edges();
  edges.emplace_back(re(2), im(2));
  edges.emplace_back(re(3), im(3));
  return SparsityGraph(6, edges);
}

inline Ordering lmbm3_interleaved_peo() {
  return Ordering({re(1), im(1), re(2), im(2), re(3), im(3)});
}

inline SparsityGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return SparsityGraph(n, edges);
}

inline SparsityGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return SparsityGraph(n, edges);
}

inline SparsityGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return SparsityGraph(n, edges);
}

/// Center 0, leaves 1..leaves.
inline SparsityGraph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return SparsityGraph(leaves + 1, edges);
}

inline SparsityGraph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::size_t v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return SparsityGraph(rows * cols, edges);
}

inline const char* kLmbm3Matpower = R"(function mpc = lmbm3
%% three buses joined pairwise
mpc.version = '2';
mpc.baseMVA = 100;

%% bus data
%	bus_i	type	Pd	Qd	Gs	Bs	area	Vm	Va	baseKV	zone	Vmax	Vmin
mpc.bus = [
	1	3	110	40	0	0	1	1	0	345	1	1.1	0.9;
	2	2	110	40	0	0	1	1	0	345	1	1.1	0.9;
	3	2	95	50	0	0	1	1	0	345	1	1.1	0.9;
];

%% branch data
%	fbus	tbus	r	x	b	rateA	rateB	rateC	ratio	angle	status	angmin	angmax
mpc.branch = [
	1	3	0.065	0.62	0.45	9000	0	0	0	0	1	-360	360;
	3	2	0.025	0.75	0.7	186	0	0	0	0	1	-360	360;
	1	2	0.042	0.9	0.3	9000	0	0	0	0	1	-360	360;
];
)";

}  // namespace cliquedec::testing
