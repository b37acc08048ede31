#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "cliquedec/graph.hpp"

namespace cliquedec {

namespace strategy {
struct MinDegree {};
struct Amd {};
struct Random {
  std::uint64_t seed = 0;
};
struct MaxDegree {};
struct Given {
  Ordering order;
};
}  // namespace strategy

using OrderingStrategy =
    std::variant<strategy::MinDegree, strategy::Amd, strategy::Random,
                 strategy::MaxDegree, strategy::Given>;

/// "min_degree", "amd", "random", "max_degree" or "given".
std::string strategy_name(const OrderingStrategy& s);

/// Accepts the names above plus the aliases "md" and "maxdeg". `seed` is used
/// for "random" only. "given" cannot be parsed. Throws std::invalid_argument.
OrderingStrategy parse_strategy(std::string_view name, std::uint64_t seed = 0);

/// Exact minimum degree: repeatedly eliminates a node of smallest degree in
/// the current elimination graph (ties to the smallest index).
Ordering order_min_degree(const SparsityGraph& g);

/// Approximate minimum degree on a quotient graph: approximate external
/// degrees and supervariable detection, no aggressive absorption.
Ordering order_amd(const SparsityGraph& g);

/// Uniform random permutation from a 64-bit seed; the same seed gives the
/// same permutation on every platform.
Ordering order_random(const SparsityGraph& g, std::uint64_t seed);

/// Greedy dynamic maximum-degree elimination (ties to the smallest index).
Ordering order_max_degree(const SparsityGraph& g);

/// Throws std::invalid_argument when a given ordering has the wrong size.
Ordering compute_ordering(const SparsityGraph& g,
                          const OrderingStrategy& strategy);

/// Simulated Cholesky fill-in: eliminating nodes in `order` connects the
/// later-ordered neighbors of each node. The elimination order is the PEO of
/// the result.
ChordalExtension symbolic_elimination(const SparsityGraph& g,
                                      const Ordering& order);

inline ChordalExtension chordal_extension(const SparsityGraph& g,
                                          const OrderingStrategy& strategy) {
  return symbolic_elimination(g, compute_ordering(g, strategy));
}

}  // namespace cliquedec
