#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hankel/clique.hpp"
#include "hankel/colon.hpp"
#include "hankel/complex.hpp"

namespace hankel {

template <class K>
bool is_complex(const FreeComplex<K>& c);
template <class K>
bool is_homogeneous(const FreeComplex<K>& c);

// Koszul complex on pairwise coprime squarefree generators, every label multiplied by shift.
template <class K>
FreeComplex<K> koszul_complex(std::span<const VertexSet> generators, VertexSet shift);
// Taylor complex; equals the Koszul complex when the generators are pairwise coprime.
template <class K>
FreeComplex<K> taylor_complex(std::span<const VertexSet> generators, VertexSet shift);

struct ConeStats {
  std::size_t steps = 0;
  std::size_t taylor_fallbacks = 0;
  std::size_t lift_solves = 0;
};

// Resolution of S / <duals>, assembled by iterated mapping cones. colons[t] generates
// (<duals[0..t-1]> : duals[t]); colons[0] is ignored.
template <class K>
FreeComplex<K> mapping_cone_resolution(std::span<const VertexSet> duals, std::span<const std::vector<VertexSet>> colons,
                                       ConeStats* stats = nullptr);

// Gaussian cancellation of unit entries, top homological degree first.
template <class K>
FreeComplex<K> minimize(FreeComplex<K> c);
template <class K>
bool has_unit_entry(const FreeComplex<K>& c);

// Betti numbers of the ideal resolved by c (F_{i+1} carries beta_i of the ideal).
template <class K>
BettiTable betti_table(const FreeComplex<K>& c);

// Exactness of the strand in squarefree multidegree b, including H_0 = S/I.
template <class K>
bool strand_is_exact(const FreeComplex<K>& c, std::span<const VertexSet> ideal_generators, VertexSet b);
// Alternating count of labels dividing b equals the indicator of b outside the ideal.
template <class K>
bool euler_characteristic_matches(const FreeComplex<K>& c, std::span<const VertexSet> ideal_generators, VertexSet b);

// Betti numbers from the homology of the Taylor strands; none when there are more than bound generators.
template <class K>
std::optional<BettiTable> taylor_betti(std::span<const VertexSet> generators, std::size_t bound = 18);

// Reduced homology ranks of the simplicial complex generated by the facets (index j -> dimension j-1).
template <class K>
std::vector<std::size_t> reduced_homology(std::span<const VertexSet> facets);

// Alexander dual of the clique complex: one generator per maximal clique, in clique order.
std::vector<VertexSet> alexander_dual(const SortedGraph& g, std::span<const MaximalClique> ordered);

struct DualResolution {
  OrderKind kind = OrderKind::lex;
  std::vector<MaximalClique> cliques;
  std::vector<ColonData> colons;
  std::vector<VertexSet> generators;
  std::size_t cone_rank = 0;
  std::size_t minimal_rank = 0;
  int max_codim = 0;
  BettiTable betti;
  BettiSummary summary;
  int generation_degree = 0;
};

// Cliques -> colons -> mapping cone -> minimization -> Betti table of the Alexander dual.
template <class K>
DualResolution resolve_dual(const SortedGraph& g, OrderKind kind, std::size_t max_cliques = 500);

}  // namespace hankel
