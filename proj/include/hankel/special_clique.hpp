#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hankel/clique.hpp"
#include "hankel/colon.hpp"

namespace hankel {

struct SpecialClique {
  MaximalClique clique;
  OrderKind kind = OrderKind::lex;
  std::string construction;
};

// Regime-specific clique whose colon length should realise the projective dimension.
// None when the dual machinery does not apply (c <= r+1).
std::optional<SpecialClique> construct_F0(const SortedGraph& g);

// Moving sequences used by construct_F0, exposed for testing.
std::vector<int> increasing_blocks_sequence(const ScrollParams& p);  // 2r+d <= c
std::vector<int> decreasing_blocks_sequence(int r, int d);           // c = 2r+d-1
std::vector<int> lift_sequence(const std::vector<int>& moving, int r, int d);  // (r,c,d) -> (r+1,c+1,d)

struct F0Check {
  bool c1 = false;  // colon length of F0 is the maximum over all cliques but the first
  bool c2 = false;  // no other clique has the same essential part
  bool c3 = false;  // no Ess(F') disjoint-union Supp(f) equals Ess(F0)
  int codim = 0;
  int max_codim = 0;
  std::string witness;
  bool ok() const { return c1 && c2 && c3; }
};

// ordered and colons must come from the order kind of the special clique.
F0Check check_F0_conditions(const SortedGraph& g, const SpecialClique& f0, std::span<const MaximalClique> ordered,
                            std::span<const ColonData> colons);

}  // namespace hankel
