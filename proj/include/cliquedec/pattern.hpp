#pragma once

#include <span>
#include <vector>

#include "cliquedec/graph.hpp"
#include "cliquedec/network.hpp"

namespace cliquedec {

/// Which variable space a pattern or decomposition lives in.
enum class Side { kComplex, kReal };

/// Real-variable index of the real/imaginary half of complex node n.
constexpr Node re_index(Node n) { return 2 * n; }
constexpr Node im_index(Node n) { return 2 * n + 1; }

/// One node per bus (in topology order), one edge per in-service branch.
/// Parallel branches collapse to a single edge.
SparsityGraph build_complex_pattern(const NetworkTopology& topology);

/// Each complex node n becomes 2n (Re) and 2n+1 (Im), with no edge between
/// them; each complex edge becomes its four cross edges. Throws
/// std::invalid_argument if `complex_pattern` already carries Re/Im tags.
SparsityGraph realify_graph(const SparsityGraph& complex_pattern);

/// {2n, 2n+1 : n in clique}, sorted.
std::vector<Node> realify_clique(std::span<const Node> clique);

/// Converts a complex chordal extension to real variables: the union of its
/// realified cliques. The expanded PEO is re-verified; a failure throws
/// std::logic_error.
ChordalExtension realify_extension(const ChordalExtension& complex_extension);

/// Real pattern straight from a topology (realify_graph of the complex one).
inline SparsityGraph build_real_pattern(const NetworkTopology& topology) {
  return realify_graph(build_complex_pattern(topology));
}

}  // namespace cliquedec
