#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hankel/groebner.hpp"
#include "hankel/hankel_ideal.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/scroll.hpp"

namespace hankel {

// Variable universe: optionally x_1..x_N, followed by the Y-variables in canonical Lambda order.
class VariableLayout {
 public:
  static VariableLayout fiber(const ScrollParams& p);
  static VariableLayout rees(const ScrollParams& p);

  const ScrollParams& params() const { return p_; }
  std::size_t size() const { return n_x_ + lambda_.size(); }
  std::size_t n_x() const { return n_x_; }
  std::size_t n_y() const { return lambda_.size(); }
  bool is_x(std::size_t slot) const { return slot < n_x_; }
  std::size_t x_slot(int i) const;
  std::size_t y_slot(const DiagonalIndex& a) const;
  int x_index(std::size_t slot) const { return static_cast<int>(slot) + 1; }
  const DiagonalIndex& y_index(std::size_t slot) const { return lambda_.at(slot - n_x_); }
  std::string name(std::size_t slot) const;

 private:
  VariableLayout(const ScrollParams& p, bool with_x);
  ScrollParams p_;
  std::size_t n_x_;
  std::vector<DiagonalIndex> lambda_;
  std::map<DiagonalIndex, std::size_t> pos_;
};

struct FiberRelation {
  DiagonalIndex alpha, beta;  // the unsorted pair, x_alpha >lex x_beta
  Polynomial poly;            // over VariableLayout::fiber
};

// One relation per unsorted pair; emitted in decreasing order of the unsorted quadric under the chosen Y-order.
std::vector<FiberRelation> fiber_relation_data(const MinorTable& minors, OrderKind kind = OrderKind::lex);
std::vector<Polynomial> fiber_relations(const MinorTable& minors, OrderKind kind = OrderKind::lex);

struct ReesSyzygy {
  std::vector<int> columns;  // c_1 < ... < c_{r+1}
  int k = 0;                 // duplicated row
  Polynomial poly;           // over VariableLayout::rees
};

std::vector<ReesSyzygy> rees_syzygies(const ScrollParams& p);
std::vector<Polynomial> rees_syzygy_relations(const ScrollParams& p);

// Under Y_a -> x_a t the largest image is the diagonal monomial of the row-duplicated matrix,
// reached by exactly the terms j = k and j = k+1.
bool rees_leading_pattern(const ScrollParams& p, const ReesSyzygy& s);

// Substitutes Y_a -> M(a) and tests for zero.
bool verify_relation_vanishes(const MinorTable& minors, const VariableLayout& layout, const Polynomial& rel);

// Degreewise count of standard monomials of the unsorted quadrics against the toric Hilbert function.
Verdict hilbert_consistency(const ScrollParams& p, int max_degree, std::size_t budget = 5000000);

}  // namespace hankel
