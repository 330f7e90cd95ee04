#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "hankel/resolution.hpp"

namespace hankel {

namespace {

// Rank of a sparse matrix given as columns of (row, value) maps, by column reduction on lowest rows.
template <class K>
std::size_t sparse_rank(std::vector<std::map<std::uint32_t, K>> cols) {
  std::unordered_map<std::uint32_t, std::size_t> pivot_of;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& c = cols[j];
    while (!c.empty()) {
      auto low = std::prev(c.end());
      auto it = pivot_of.find(low->first);
      if (it == pivot_of.end()) {
        pivot_of.emplace(low->first, j);
        ++r;
        break;
      }
      const auto& p = cols[it->second];
      K f = low->second / p.at(low->first);
      for (const auto& [row, v] : p) {
        K& slot = c[row];
        slot -= f * v;
        if (is_zero(slot)) c.erase(row);
      }
    }
  }
  return r;
}

double face_estimate(std::span<const VertexSet> facets) {
  double s = 0;
  for (VertexSet f : facets) s += std::ldexp(1.0, static_cast<int>(f.size()));
  return s;
}

}  // namespace

template <class K>
std::vector<std::size_t> reduced_homology(std::span<const VertexSet> facets) {
  if (facets.empty()) return {};
  std::unordered_set<std::uint64_t> seen;
  for (VertexSet f : facets) {
    std::uint64_t m = f.bits, s = m;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & m;
    }
  }
  std::size_t top = 0;
  for (std::uint64_t s : seen) top = std::max<std::size_t>(top, std::popcount(s));
  std::vector<std::vector<std::uint64_t>> by_size(top + 1);
  for (std::uint64_t s : seen) by_size[std::popcount(s)].push_back(s);
  std::vector<std::unordered_map<std::uint64_t, std::uint32_t>> index(top + 1);
  for (auto& v : by_size) std::sort(v.begin(), v.end());
  for (std::size_t k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < by_size[k].size(); ++i) index[k][by_size[k][i]] = static_cast<std::uint32_t>(i);

  std::vector<std::size_t> rk(top + 2, 0);
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::map<std::uint32_t, K>> cols;
    cols.reserve(by_size[k].size());
    for (std::uint64_t s : by_size[k]) {
      std::map<std::uint32_t, K> col;
      int pos = 0;
      for (std::uint64_t rest = s; rest; rest &= rest - 1, ++pos) {
        std::uint64_t bit = rest & (~rest + 1);
        col[index[k - 1].at(s & ~bit)] = K(pos % 2 == 0 ? 1 : -1);
      }
      cols.push_back(std::move(col));
    }
    rk[k] = sparse_rank<K>(std::move(cols));
  }
  std::vector<std::size_t> h(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) h[k] = by_size[k].size() - rk[k] - rk[k + 1];
  return h;
}

template <class K>
std::optional<BettiTable> taylor_betti(std::span<const VertexSet> generators, std::size_t bound) {
  const std::size_t n = generators.size();
  if (n > bound || n > 30) return std::nullopt;
  std::set<std::uint64_t> lattice;
  std::vector<std::uint64_t> lcm(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    int low = std::countr_zero(s);
    lcm[s] = lcm[s & (s - 1)] | generators[static_cast<std::size_t>(low)].bits;
    lattice.insert(lcm[s]);
  }
  BettiTable t;
  for (std::uint64_t b : lattice) {
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < n; ++i)
      if ((generators[i].bits & ~b) == 0) below.push_back(i);
    // lower interval: facets A_v = {g : v not in g}
    std::vector<VertexSet> lower;
    for (std::uint64_t rest = b; rest; rest &= rest - 1) {
      std::uint64_t v = rest & (~rest + 1);
      VertexSet a;
      for (std::size_t k = 0; k < below.size(); ++k)
        if (!(generators[below[k]].bits & v)) a.insert(k);
      lower.push_back(a);
    }
    // upper Koszul simplicial complex: facets b \ g
    std::vector<VertexSet> upper;
    for (std::size_t i : below) upper.push_back(VertexSet{b & ~generators[i].bits});
    auto h = face_estimate(lower) <= face_estimate(upper) ? reduced_homology<K>(lower) : reduced_homology<K>(upper);
    const int deg = std::popcount(b);
    for (std::size_t i = 0; i < h.size(); ++i) t.add(static_cast<int>(i), deg, static_cast<long long>(h[i]));
  }
  return t;
}

template std::vector<std::size_t> reduced_homology<Rational>(std::span<const VertexSet>);
template std::vector<std::size_t> reduced_homology<ModP>(std::span<const VertexSet>);
template std::optional<BettiTable> taylor_betti<Rational>(std::span<const VertexSet>, std::size_t);
template std::optional<BettiTable> taylor_betti<ModP>(std::span<const VertexSet>, std::size_t);

}  // namespace hankel
