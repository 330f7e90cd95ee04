#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hankel/scroll.hpp"
#include "hankel/vertex_set.hpp"

namespace hankel {

// principal: c = r. no_relations: c = r+1. balanced: r+1 < c <= r+d. generic: c > r+d.
enum class Regime { principal, no_relations, balanced, generic };
Regime regime_of(const ScrollParams& p);
const char* to_string(Regime g);

// (r, c, c-r) when r < c < r+d, otherwise p itself.
ScrollParams reduced_params(const ScrollParams& p);

// Vertices are the Y-variables in canonical order; u ~ v iff (x_u, x_v) is sorted.
class SortedGraph {
 public:
  static constexpr std::size_t max_vertices = 64;

  explicit SortedGraph(const ScrollParams& p);

  const ScrollParams& params() const { return p_; }
  const std::vector<DiagonalIndex>& vertices() const { return lambda_; }
  const DiagonalIndex& vertex(std::size_t v) const { return lambda_[v]; }
  std::size_t size() const { return lambda_.size(); }
  std::size_t index_of(const DiagonalIndex& a) const;
  bool contains(const DiagonalIndex& a) const { return pos_.count(a) > 0; }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }
  VertexSet neighbors(std::size_t v) const { return adj_[v]; }
  VertexSet all() const { return VertexSet::first_n(lambda_.size()); }
  std::size_t non_edge_count() const;
  // 0 is the largest Y-variable under the given order.
  std::size_t rank(OrderKind k, std::size_t v) const { return ranks_[k == OrderKind::lex ? 0 : 1][v]; }
  VertexSet to_set(std::span<const DiagonalIndex> members) const;
  std::vector<DiagonalIndex> from_set(VertexSet s) const;

 private:
  ScrollParams p_;
  std::vector<DiagonalIndex> lambda_;
  std::map<DiagonalIndex, std::size_t> pos_;
  std::vector<VertexSet> adj_;
  std::vector<std::size_t> ranks_[2];
};

SortedGraph build_graph(const ScrollParams& p);

struct MaximalClique {
  std::vector<DiagonalIndex> members;  // beta_1 > beta_2 > ...
  std::vector<int> moving;             // j_k, 1-based coordinate moved from beta_k to beta_{k+1}
  VertexSet vertices;

  friend bool operator==(const MaximalClique& a, const MaximalClique& b) { return a.members == b.members; }
};

// Every maximal clique, sorted so that the largest dual generator under the clique order comes first.
std::vector<MaximalClique> enumerate_maximal_cliques(const SortedGraph& g, OrderKind kind,
                                                     std::size_t max_cliques = std::numeric_limits<std::size_t>::max());
void sort_cliques(const SortedGraph& g, OrderKind kind, std::vector<MaximalClique>& cliques);
// True iff a precedes b (Y^a >lex Y^b under the chosen Y-order).
bool clique_precedes(const SortedGraph& g, OrderKind kind, const MaximalClique& a, const MaximalClique& b);

// Start and end of a moving-sequence walk. Generic regime: determined by the counts of the sequence.
std::optional<MaximalClique> clique_from_moving_sequence(const SortedGraph& g, std::span<const int> moving);
// Round-scan strategy: each round tries coordinates 1..r in order and takes every legal move.
MaximalClique greedy_clique(const SortedGraph& g, const DiagonalIndex& start);
// Checks the single-step, chain, endpoint, adjacency and maximality conditions.
bool is_valid_maximal_clique(const SortedGraph& g, const MaximalClique& f);

// Bron-Kerbosch with pivoting; small-scale cross-check.
std::vector<VertexSet> generic_maximal_cliques(const SortedGraph& g);
// f[i] = number of i-vertex cliques, f[0] = 1 for the empty face. Throws BudgetExceeded past budget faces.
std::vector<long long> clique_f_vector(const SortedGraph& g, std::size_t budget = 50000000);
// Minimal vertex covers of the complement graph by Berge's transversal algorithm.
std::vector<VertexSet> complement_minimal_vertex_covers(const SortedGraph& g, std::size_t budget = 2000000);

}  // namespace hankel
