#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace hankel {

// Squarefree Y-monomial: bit v set iff Y-variable v (canonical Lambda position) divides it.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet single(std::size_t v) { return {std::uint64_t{1} << v}; }
  static VertexSet first_n(std::size_t n) { return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1}; }

  bool contains(std::size_t v) const { return (bits >> v) & 1u; }
  void insert(std::size_t v) { bits |= std::uint64_t{1} << v; }
  void erase(std::size_t v) { bits &= ~(std::uint64_t{1} << v); }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  bool disjoint(VertexSet o) const { return (bits & o.bits) == 0; }
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return {a.bits | b.bits}; }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return {a.bits & b.bits}; }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return {a.bits & ~b.bits}; }
  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet, VertexSet) = default;
};

}  // namespace hankel
