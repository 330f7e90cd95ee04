#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hankel/clique.hpp"

namespace hankel {

struct TailGenerator {
  int special_k = 0;        // least k <= r-1 with k + kd < beta_{delta_k - 1}^k
  std::size_t delta_k = 0;  // 1-based position in the clique
  std::vector<DiagonalIndex> segment;  // H = {beta_{delta_k}, ..., beta_last}
  VertexSet monomial;
};

struct ColonData {
  std::vector<DiagonalIndex> corners;
  std::optional<TailGenerator> tail;
  bool tail_cancelled = false;
  std::vector<VertexSet> minimal_generators;  // sorted
  int codim = 0;
  VertexSet essential;
};

std::vector<DiagonalIndex> corner_generators(const SortedGraph& g, const MaximalClique& f, OrderKind kind);
// None when the clique starts at the first ring variable.
std::optional<TailGenerator> tail_generator(const SortedGraph& g, const MaximalClique& f, OrderKind kind);

// Colon of the dual generators preceding ordered[position] by that generator, from corners and tail.
// Aborts with std::logic_error if the generators are not pairwise coprime.
ColonData colon_combinatorial(const SortedGraph& g, std::span<const MaximalClique> ordered, std::size_t position,
                              OrderKind kind);
std::vector<ColonData> all_colons(const SortedGraph& g, std::span<const MaximalClique> ordered, OrderKind kind);

// Minimal generators of (<predecessors> : current) for squarefree monomials.
std::vector<VertexSet> colon_bruteforce(std::span<const VertexSet> predecessor_duals, VertexSet current_dual);

// Complement of each clique in the full variable set, in clique order.
std::vector<VertexSet> dual_generators(const SortedGraph& g, std::span<const MaximalClique> ordered);

std::vector<VertexSet> minimalize(std::vector<VertexSet> gens);

}  // namespace hankel
