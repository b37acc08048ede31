// Approximate minimum degree ordering on the quotient graph.
//
// After Amestoy, Davis and Duff, "An approximate minimum degree ordering
// algorithm", SIAM J. Matrix Anal. Appl. 17(4), 1996. This version keeps the
// approximate external degree bound and supervariable detection, and leaves
// out aggressive absorption and multiple elimination.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "cliquedec/ordering.hpp"

namespace cliquedec {

namespace {

enum class Status : std::uint8_t { kVariable, kElement, kAbsorbed, kMerged };

class QuotientGraph {
 public:
  explicit QuotientGraph(const SparsityGraph& g)
      : n_(g.node_count()),
        status_(n_, Status::kVariable),
        weight_(n_, 1),
        degree_(n_),
        vars_(n_),
        elems_(n_),
        elem_vars_(n_),
        members_(n_),
        mark_(n_, 0),
        elem_ext_(n_, -1),
        remaining_(static_cast<long long>(n_)) {
    for (Node v = 0; v < n_; ++v) {
      vars_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
      degree_[v] = static_cast<long long>(vars_[v].size());
      queue_.emplace(degree_[v], v);
    }
  }

  Ordering run() {
    std::vector<Node> perm;
    perm.reserve(n_);
    while (!queue_.empty()) {
      const Node p = queue_.begin()->second;
      queue_.erase(queue_.begin());
      perm.push_back(p);
      perm.insert(perm.end(), members_[p].begin(), members_[p].end());
      eliminate(p);
    }
    if (perm.size() != n_) {
      throw std::logic_error("amd: ordering lost nodes");
    }
    return Ordering(std::move(perm));
  }

 private:
  bool is_variable(Node v) const { return status_[v] == Status::kVariable; }

  void eliminate(Node p) {
    ++stamp_;
    // New element p: union of p's variable neighbors and the variables of
    // every element adjacent to p. Those elements are absorbed into p.
    std::vector<Node> lp;
    auto add = [&](Node j) {
      if (j != p && is_variable(j) && mark_[j] != stamp_) {
        mark_[j] = stamp_;
        lp.push_back(j);
      }
    };
    for (Node j : vars_[p]) add(j);
    for (Node e : elems_[p]) {
      if (status_[e] != Status::kElement) continue;
      for (Node j : elems_vars(e)) add(j);
      status_[e] = Status::kAbsorbed;
      std::vector<Node>().swap(elem_vars_[e]);
    }
    std::sort(lp.begin(), lp.end());

    status_[p] = Status::kElement;
    remaining_ -= weight_[p];
    std::vector<Node>().swap(vars_[p]);
    std::vector<Node>().swap(elems_[p]);

    long long lp_weight = 0;
    for (Node i : lp) lp_weight += weight_[i];

    // Element and variable lists of each i in Lp lose absorbed elements,
    // gain p, and drop variables now reachable through p.
    for (Node i : lp) {
      std::erase_if(elems_[i],
                    [&](Node e) { return status_[e] != Status::kElement; });
      elems_[i].push_back(p);
      std::sort(elems_[i].begin(), elems_[i].end());
      std::erase_if(vars_[i], [&](Node j) {
        return j == i || !is_variable(j) || mark_[j] == stamp_;
      });
    }

    // |Le \ Lp| for every element adjacent to some i in Lp.
    std::vector<Node> touched;
    for (Node i : lp) {
      for (Node e : elems_[i]) {
        if (e == p) continue;
        if (elem_ext_[e] < 0) {
          long long w = 0;
          for (Node j : elems_vars(e)) w += weight_[j];
          elem_ext_[e] = w;
          touched.push_back(e);
        }
        elem_ext_[e] -= weight_[i];
      }
    }

    for (Node i : lp) {
      long long external = lp_weight - weight_[i];
      for (Node j : vars_[i]) external += weight_[j];
      for (Node e : elems_[i]) {
        if (e != p) external += elem_ext_[e];
      }
      const long long bound_total = remaining_ - weight_[i];
      const long long bound_prev = degree_[i] + lp_weight - weight_[i];
      queue_.erase({degree_[i], i});
      degree_[i] = std::min({external, bound_total, bound_prev});
    }
    for (Node e : touched) elem_ext_[e] = -1;

    detect_supervariables(lp);

    elem_vars_[p] = lp;
    for (Node i : lp) {
      if (is_variable(i)) queue_.emplace(degree_[i], i);
    }
  }

  std::uint64_t adjacency_hash(Node i) const {
    std::uint64_t h = vars_[i].size() * 1000003ULL + elems_[i].size();
    for (Node j : vars_[i]) h = h * 31 + j;
    for (Node e : elems_[i]) h = h * 37 + e;
    return h;
  }

  /// Merges variables of Lp with identical variable and element lists.
  void detect_supervariables(const std::vector<Node>& lp) {
    std::unordered_map<std::uint64_t, std::vector<Node>> buckets;
    for (Node i : lp) {
      std::sort(vars_[i].begin(), vars_[i].end());
      buckets[adjacency_hash(i)].push_back(i);
    }
    for (auto& [hash, bucket] : buckets) {
      for (std::size_t a = 0; a < bucket.size(); ++a) {
        const Node i = bucket[a];
        if (!is_variable(i)) continue;
        for (std::size_t b = a + 1; b < bucket.size(); ++b) {
          const Node j = bucket[b];
          if (!is_variable(j)) continue;
          if (vars_[i] != vars_[j] || elems_[i] != elems_[j]) continue;
          absorb_variable(i, j);
        }
      }
    }
  }

  void absorb_variable(Node i, Node j) {
    weight_[i] += weight_[j];
    degree_[i] = std::max(0LL, degree_[i] - weight_[j]);
    weight_[j] = 0;
    status_[j] = Status::kMerged;
    members_[i].push_back(j);
    members_[i].insert(members_[i].end(), members_[j].begin(),
                       members_[j].end());
    std::vector<Node>().swap(members_[j]);
    std::vector<Node>().swap(vars_[j]);
    std::vector<Node>().swap(elems_[j]);
  }

  /// Live variables of element e, compacted in place.
  const std::vector<Node>& elems_vars(Node e) {
    std::erase_if(elem_vars_[e], [&](Node j) { return !is_variable(j); });
    return elem_vars_[e];
  }

  std::size_t n_;
  std::vector<Status> status_;
  std::vector<long long> weight_;
  std::vector<long long> degree_;
  std::vector<std::vector<Node>> vars_;
  std::vector<std::vector<Node>> elems_;
  std::vector<std::vector<Node>> elem_vars_;
  std::vector<std::vector<Node>> members_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
  std::vector<long long> elem_ext_;
  long long remaining_;
  std::set<std::pair<long long, Node>> queue_;
};

}  // namespace

Ordering order_amd(const SparsityGraph& g) { return QuotientGraph(g).run(); }

}  // namespace cliquedec
