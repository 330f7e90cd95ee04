#pragma once

#include <map>
#include <vector>

#include "hankel/groebner.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/scroll.hpp"

namespace hankel {

// Entry (i,j), 0-based, holds the 1-based x-index j + 1 + i*d.
std::vector<std::vector<int>> hankel_matrix(const ScrollParams& p);

// Exponent vector of x_alpha over x_1..x_N (slot i-1 for x_i).
Exponents x_exponents(const ScrollParams& p, const DiagonalIndex& a);

struct Minor {
  DiagonalIndex index;
  Polynomial poly;
  std::vector<int> columns;
};

Minor minor(const ScrollParams& p, const DiagonalIndex& a);

// All maximal minors, computed once and looked up by diagonal.
class MinorTable {
 public:
  explicit MinorTable(const ScrollParams& p);
  const ScrollParams& params() const { return p_; }
  const std::vector<DiagonalIndex>& lambda() const { return lambda_; }
  const Polynomial& operator()(const DiagonalIndex& a) const;
  const Polynomial& at(std::size_t i) const { return polys_[i]; }
  std::size_t index_of(const DiagonalIndex& a) const;

 private:
  ScrollParams p_;
  std::vector<DiagonalIndex> lambda_;
  std::vector<Polynomial> polys_;
  std::map<DiagonalIndex, std::size_t> pos_;
};

Verdict verify_minors_groebner(const ScrollParams& p, const GroebnerBudget& budget = {}, std::size_t max_minors = 64);
// Completes a Groebner basis of I^k and compares ini(I^k) with (ini I)^k.
Verdict verify_power_initial(const ScrollParams& p, int k, const GroebnerBudget& budget = {}, std::size_t max_minors = 12);

}  // namespace hankel
