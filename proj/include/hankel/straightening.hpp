#pragma once

#include <utility>
#include <vector>

#include "hankel/hankel_ideal.hpp"
#include "hankel/rational.hpp"
#include "hankel/scroll.hpp"

namespace hankel {

// Merge the indices of u and v increasingly; odd positions form the first output.
std::pair<XMonomial, XMonomial> sort_pair(const XMonomial& u, const XMonomial& v);
bool is_sorted(const XMonomial& u, const XMonomial& v);

std::pair<DiagonalIndex, DiagonalIndex> sort_indices(const DiagonalIndex& a, const DiagonalIndex& b);
bool is_sorted_pair(const DiagonalIndex& a, const DiagonalIndex& b);

bool verify_sortability(const ScrollParams& p);

struct StraighteningTerm {
  Rational mu;
  DiagonalIndex alpha, beta;
};

struct StraighteningExpansion {
  DiagonalIndex alpha, beta;
  std::vector<StraighteningTerm> terms;
};

// M(alpha)M(beta) = sum mu_i M(alpha_i)M(beta_i), built by repeatedly peeling the x-lex initial term.
StraighteningExpansion straighten(const MinorTable& minors, const DiagonalIndex& alpha, const DiagonalIndex& beta);

struct ExpansionCheck {
  bool identity = false;
  bool decreasing = false;
  bool all_sorted = false;
  bool ok() const { return identity && decreasing && all_sorted; }
};

ExpansionCheck check_expansion(const MinorTable& minors, const StraighteningExpansion& e);

}  // namespace hankel
