#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hankel/rational.hpp"
#include "hankel/vertex_set.hpp"

namespace hankel {

template <class K>
struct SparseColumn {
  std::vector<std::pair<std::uint32_t, K>> entries;  // (row, coefficient), rows increasing
};

// Free complex of squarefree-multigraded modules. labels[k][i] is the multidegree of basis element i of F_k;
// diffs[k] (k >= 1) has one column per basis element of F_k with rows in F_{k-1}. The monomial part of an
// entry is label(col) / label(row) and is left implicit.
template <class K>
struct FreeComplex {
  std::vector<std::vector<std::uint64_t>> labels;
  std::vector<std::vector<SparseColumn<K>>> diffs;

  std::size_t length() const { return labels.empty() ? 0 : labels.size() - 1; }
  std::size_t rank(std::size_t k) const { return k < labels.size() ? labels[k].size() : 0; }
  std::size_t total_rank() const {
    std::size_t s = 0;
    for (const auto& l : labels) s += l.size();
    return s;
  }
  VertexSet label(std::size_t k, std::size_t i) const { return VertexSet{labels[k][i]}; }
};

// beta_{i,j} of the ideal, keyed by (homological degree i, internal degree j).
class BettiTable {
 public:
  void add(int i, int j, long long v = 1);
  long long get(int i, int j) const;
  const std::map<std::pair<int, int>, long long>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  int pd() const;
  int reg() const;
  long long top_betti() const;
  long long total(int i) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, long long> e_;
};

struct BettiSummary {
  int pd = 0;
  int reg = 0;
  long long top_betti = 0;
  bool is_linear = false;
};

// Linear means every nonzero beta_{i,j} has j = i + generation_degree.
BettiSummary betti_summary(const BettiTable& t, int generation_degree);

}  // namespace hankel
