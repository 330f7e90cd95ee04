#include "hankel/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hankel/kernels.hpp"
#include "hankel/linalg.hpp"

namespace hankel {

void BettiTable::add(int i, int j, long long v) {
  if (v == 0) return;
  e_[{i, j}] += v;
  if (e_[{i, j}] == 0) e_.erase({i, j});
}

long long BettiTable::get(int i, int j) const {
  auto it = e_.find({i, j});
  return it == e_.end() ? 0 : it->second;
}

int BettiTable::pd() const {
  int m = 0;
  for (const auto& [k, v] : e_) m = std::max(m, k.first);
  return m;
}

int BettiTable::reg() const {
  bool first = true;
  int m = 0;
  for (const auto& [k, v] : e_) {
    if (first || k.second - k.first > m) m = k.second - k.first;
    first = false;
  }
  return m;
}

long long BettiTable::total(int i) const {
  long long s = 0;
  for (const auto& [k, v] : e_)
    if (k.first == i) s += v;
  return s;
}

long long BettiTable::top_betti() const { return total(pd()); }

BettiSummary betti_summary(const BettiTable& t, int generation_degree) {
  BettiSummary s;
  s.pd = t.pd();
  s.reg = t.reg();
  s.top_betti = t.top_betti();
  s.is_linear = !t.empty();
  for (const auto& [k, v] : t.entries())
    if (k.second != k.first + generation_degree) s.is_linear = false;
  return s;
}

template <class K>
bool is_complex(const FreeComplex<K>& c) {
  for (std::size_t k = 2; k <= c.length(); ++k) {
    for (const auto& col : c.diffs[k]) {
      std::map<std::uint32_t, K> acc;
      for (const auto& [row, a] : col.entries)
        for (const auto& [r2, b] : c.diffs[k - 1][row].entries) acc[r2] += a * b;
      for (const auto& [r2, v] : acc)
        if (!is_zero(v)) return false;
    }
  }
  return true;
}

template <class K>
bool is_homogeneous(const FreeComplex<K>& c) {
  for (std::size_t k = 1; k <= c.length(); ++k)
    for (std::size_t j = 0; j < c.diffs[k].size(); ++j)
      for (const auto& [row, a] : c.diffs[k][j].entries)
        if (is_zero(a) || (c.labels[k - 1][row] & ~c.labels[k][j]) != 0) return false;
  return true;
}

template <class K>
FreeComplex<K> taylor_complex(std::span<const VertexSet> generators, VertexSet shift) {
  const std::size_t n = generators.size();
  if (n > 24) throw std::invalid_argument("Taylor complex on more than 24 generators");
  FreeComplex<K> c;
  c.labels.resize(n + 1);
  c.diffs.resize(n + 1);
  std::vector<std::uint32_t> index(std::size_t{1} << n, 0);
  std::vector<std::vector<std::uint32_t>> masks(n + 1);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) masks[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::uint32_t s : masks[k]) {
      index[s] = static_cast<std::uint32_t>(c.labels[k].size());
      std::uint64_t l = shift.bits;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1u) l |= generators[i].bits;
      c.labels[k].push_back(l);
      if (k == 0) continue;
      SparseColumn<K> col;
      int t = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(s >> i & 1u)) continue;
        int sign = ((static_cast<int>(k) - 1 - t) % 2 == 0) ? 1 : -1;
        col.entries.emplace_back(index[s & ~(std::uint32_t{1} << i)], K(sign));
        ++t;
      }
      std::sort(col.entries.begin(), col.entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      c.diffs[k].push_back(std::move(col));
    }
  }
  return c;
}

template <class K>
FreeComplex<K> koszul_complex(std::span<const VertexSet> generators, VertexSet shift) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].empty()) throw std::invalid_argument("Koszul complex on a unit");
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!generators[i].disjoint(generators[j])) throw std::invalid_argument("Koszul complex needs coprime generators");
  }
  return taylor_complex<K>(generators, shift);
}

namespace {

template <class K>
using SparseVec = std::vector<std::pair<std::uint32_t, K>>;

// Solve d_k x = y in multidegree b, x supported on F_k elements whose labels divide b.
template <class K>
SparseVec<K> lift(const FreeComplex<K>& f, std::size_t k, std::uint64_t b, const std::map<std::uint32_t, K>& y) {
  std::vector<std::uint32_t> cand;
  if (k < f.labels.size()) kernels::filter_subsets(f.labels[k], b, cand);
  std::vector<std::uint32_t> rows;
  for (const auto& [r, v] : y) rows.push_back(r);
  for (std::uint32_t j : cand)
    for (const auto& [r, a] : f.diffs[k][j].entries) rows.push_back(r);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  std::map<std::uint32_t, std::size_t> local;
  for (std::size_t i = 0; i < rows.size(); ++i) local[rows[i]] = i;
  DenseMatrix<K> m(rows.size(), cand.size());
  for (std::size_t j = 0; j < cand.size(); ++j)
    for (const auto& [r, a] : f.diffs[k][cand[j]].entries) m(local[r], j) = a;
  std::vector<K> rhs(rows.size(), K(0));
  for (const auto& [r, v] : y) rhs[local[r]] = v;
  auto x = solve(m, rhs);
  if (!x) throw std::logic_error("mapping cone lift has no solution in homological degree " + std::to_string(k));
  SparseVec<K> out;
  for (std::size_t j = 0; j < cand.size(); ++j)
    if (!is_zero((*x)[j])) out.emplace_back(cand[j], (*x)[j]);
  return out;
}

}  // namespace

template <class K>
FreeComplex<K> mapping_cone_resolution(std::span<const VertexSet> duals, std::span<const std::vector<VertexSet>> colons,
                                       ConeStats* stats) {
  if (colons.size() != duals.size()) throw std::invalid_argument("one colon per generator expected");
  FreeComplex<K> f;
  f.labels = {{0}};
  f.diffs.resize(1);
  if (duals.empty()) return f;
  f.labels.push_back({duals[0].bits});
  f.diffs.push_back({SparseColumn<K>{{{0, K(1)}}}});
  for (std::size_t t = 1; t < duals.size(); ++t) {
    const VertexSet m = duals[t];
    const auto& gens = colons[t];
    if (gens.empty()) throw std::logic_error("empty colon ideal at step " + std::to_string(t));
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].empty()) throw std::logic_error("generator " + std::to_string(t) + " lies in the earlier ideal");
      if (!gens[i].disjoint(m)) throw std::logic_error("colon generator shares a variable with its generator");
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!gens[i].disjoint(gens[j])) coprime = false;
    }
    FreeComplex<K> g = coprime ? koszul_complex<K>(gens, m) : taylor_complex<K>(gens, m);
    if (stats) {
      ++stats->steps;
      if (!coprime) ++stats->taylor_fallbacks;
    }

    std::vector<std::vector<SparseVec<K>>> phi(g.length() + 1);
    phi[0].push_back({{0, K(1)}});
    for (std::size_t k = 1; k <= g.length(); ++k) {
      for (std::size_t s = 0; s < g.labels[k].size(); ++s) {
        std::map<std::uint32_t, K> y;
        for (const auto& [r, a] : g.diffs[k][s].entries)
          for (const auto& [row, v] : phi[k - 1][r]) y[row] += a * v;
        for (auto it = y.begin(); it != y.end();) it = is_zero(it->second) ? y.erase(it) : std::next(it);
        if (y.empty()) {
          phi[k].emplace_back();
          continue;
        }
        if (stats) ++stats->lift_solves;
        phi[k].push_back(lift(f, k, g.labels[k][s], y));
      }
    }

    const std::size_t new_len = std::max(f.length(), g.length() + 1);
    std::vector<std::size_t> old_rank(new_len + 1, 0);
    for (std::size_t k = 0; k <= new_len; ++k) old_rank[k] = f.rank(k);
    f.labels.resize(new_len + 1);
    f.diffs.resize(new_len + 1);
    for (std::size_t k = 1; k <= g.length() + 1; ++k) {
      const std::size_t gk = k - 1;
      for (std::size_t s = 0; s < g.labels[gk].size(); ++s) {
        SparseColumn<K> col;
        col.entries = phi[gk][s];
        std::sort(col.entries.begin(), col.entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (gk >= 1)
          for (const auto& [r, a] : g.diffs[gk][s].entries)
            col.entries.emplace_back(static_cast<std::uint32_t>(old_rank[k - 1] + r), -a);
        f.labels[k].push_back(g.labels[gk][s]);
        f.diffs[k].push_back(std::move(col));
      }
    }
  }
  return f;
}

template <class K>
bool has_unit_entry(const FreeComplex<K>& c) {
  for (std::size_t k = 1; k <= c.length(); ++k)
    for (std::size_t j = 0; j < c.diffs[k].size(); ++j)
      for (const auto& [row, a] : c.diffs[k][j].entries)
        if (!is_zero(a) && c.labels[k - 1][row] == c.labels[k][j]) return true;
  return false;
}

template <class K>
FreeComplex<K> minimize(FreeComplex<K> c) {
  const std::size_t len = c.length();
  std::vector<std::vector<std::map<std::uint32_t, K>>> cols(len + 1);
  std::vector<std::vector<std::set<std::uint32_t>>> rows(len + 1);
  std::vector<std::vector<char>> alive(len + 1);
  for (std::size_t k = 0; k <= len; ++k) alive[k].assign(c.rank(k), 1);
  for (std::size_t k = 1; k <= len; ++k) {
    cols[k].resize(c.rank(k));
    rows[k].resize(c.rank(k - 1));
    for (std::size_t j = 0; j < c.rank(k); ++j)
      for (const auto& [r, a] : c.diffs[k][j].entries) {
        if (is_zero(a)) continue;
        cols[k][j][r] = a;
        rows[k][r].insert(static_cast<std::uint32_t>(j));
      }
  }

  auto cancel = [&](std::size_t k, std::uint32_t i, std::uint32_t j) {
    const K u = cols[k][j].at(i);
    std::vector<std::uint32_t> others(rows[k][i].begin(), rows[k][i].end());
    for (std::uint32_t jj : others) {
      if (jj == j) continue;
      const K factor = cols[k][jj].at(i) / u;
      for (const auto& [r, a] : cols[k][j]) {
        K& slot = cols[k][jj][r];
        slot -= factor * a;
        if (is_zero(slot)) {
          cols[k][jj].erase(r);
          rows[k][r].erase(jj);
        } else {
          rows[k][r].insert(jj);
        }
      }
    }
    for (const auto& [r, a] : cols[k][j]) rows[k][r].erase(j);
    cols[k][j].clear();
    alive[k][j] = 0;
    alive[k - 1][i] = 0;
    if (k + 1 <= len) {
      for (std::uint32_t jj : rows[k + 1][j]) cols[k + 1][jj].erase(j);
      rows[k + 1][j].clear();
    }
    if (k >= 2) {
      for (const auto& [r, a] : cols[k - 1][i]) rows[k - 1][r].erase(i);
      cols[k - 1][i].clear();
    }
  };

  for (std::size_t k = len; k >= 1; --k) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::uint32_t j = 0; j < cols[k].size(); ++j) {
        if (!alive[k][j]) continue;
        for (const auto& [r, a] : cols[k][j]) {
          if (c.labels[k - 1][r] == c.labels[k][j]) {
            cancel(k, r, j);
            progress = true;
            break;
          }
        }
      }
    }
  }

  FreeComplex<K> out;
  std::vector<std::vector<std::uint32_t>> remap(len + 1);
  for (std::size_t k = 0; k <= len; ++k) {
    remap[k].assign(c.rank(k), 0);
    std::vector<std::uint64_t> l;
    for (std::size_t i = 0; i < c.rank(k); ++i)
      if (alive[k][i]) {
        remap[k][i] = static_cast<std::uint32_t>(l.size());
        l.push_back(c.labels[k][i]);
      }
    out.labels.push_back(std::move(l));
  }
  out.diffs.resize(len + 1);
  for (std::size_t k = 1; k <= len; ++k)
    for (std::size_t j = 0; j < c.rank(k); ++j) {
      if (!alive[k][j]) continue;
      SparseColumn<K> col;
      for (const auto& [r, a] : cols[k][j]) {
        if (!alive[k - 1][r]) throw std::logic_error("minimization left an entry in a cancelled row");
        col.entries.emplace_back(remap[k - 1][r], a);
      }
      out.diffs[k].push_back(std::move(col));
    }
  while (out.labels.size() > 1 && out.labels.back().empty()) {
    out.labels.pop_back();
    out.diffs.pop_back();
  }
  return out;
}

template <class K>
BettiTable betti_table(const FreeComplex<K>& c) {
  BettiTable t;
  for (std::size_t k = 1; k <= c.length(); ++k)
    for (std::uint64_t l : c.labels[k]) t.add(static_cast<int>(k) - 1, std::popcount(l));
  return t;
}

template <class K>
bool strand_is_exact(const FreeComplex<K>& c, std::span<const VertexSet> ideal_generators, VertexSet b) {
  const std::size_t len = c.length();
  std::vector<std::vector<std::uint32_t>> idx(len + 2);
  for (std::size_t k = 0; k <= len; ++k) kernels::filter_subsets(c.labels[k], b.bits, idx[k]);
  std::vector<std::size_t> rk(len + 2, 0);
  for (std::size_t k = 1; k <= len; ++k) {
    std::map<std::uint32_t, std::size_t> local;
    for (std::size_t i = 0; i < idx[k - 1].size(); ++i) local[idx[k - 1][i]] = i;
    DenseMatrix<K> m(idx[k - 1].size(), idx[k].size());
    for (std::size_t j = 0; j < idx[k].size(); ++j)
      for (const auto& [r, a] : c.diffs[k][idx[k][j]].entries) m(local.at(r), j) = a;
    rk[k] = rank(m);
  }
  bool outside = true;
  for (VertexSet g : ideal_generators)
    if (g.subset_of(b)) outside = false;
  if (idx[0].size() - rk[1] != (outside ? 1u : 0u)) return false;
  for (std::size_t k = 1; k <= len; ++k)
    if (idx[k].size() - rk[k] != rk[k + 1]) return false;
  return true;
}

template <class K>
bool euler_characteristic_matches(const FreeComplex<K>& c, std::span<const VertexSet> ideal_generators, VertexSet b) {
  long long chi = 0;
  for (std::size_t k = 0; k <= c.length(); ++k) {
    std::vector<std::uint32_t> hits;
    kernels::filter_subsets(c.labels[k], b.bits, hits);
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(hits.size());
  }
  bool outside = true;
  for (VertexSet g : ideal_generators)
    if (g.subset_of(b)) outside = false;
  return chi == (outside ? 1 : 0);
}

std::vector<VertexSet> alexander_dual(const SortedGraph& g, std::span<const MaximalClique> ordered) {
  return dual_generators(g, ordered);
}

template <class K>
DualResolution resolve_dual(const SortedGraph& g, OrderKind kind, std::size_t max_cliques) {
  const Regime regime = regime_of(g.params());
  if (regime != Regime::balanced && regime != Regime::generic)
    throw std::invalid_argument("no Alexander dual to resolve for " + g.params().to_string());
  DualResolution out;
  out.kind = kind;
  out.cliques = enumerate_maximal_cliques(g, kind, max_cliques);
  out.colons = all_colons(g, out.cliques, kind);
  out.generators = alexander_dual(g, out.cliques);
  std::vector<std::vector<VertexSet>> colon_gens;
  for (const auto& c : out.colons) {
    colon_gens.push_back(c.minimal_generators);
    out.max_codim = std::max(out.max_codim, c.codim);
  }
  FreeComplex<K> cone = mapping_cone_resolution<K>(out.generators, colon_gens);
  out.cone_rank = cone.total_rank();
  FreeComplex<K> minimal = minimize(std::move(cone));
  out.minimal_rank = minimal.total_rank();
  out.betti = betti_table(minimal);
  out.generation_degree = static_cast<int>(g.size() - out.cliques.front().members.size());
  out.summary = betti_summary(out.betti, out.generation_degree);
  return out;
}

#define HANKEL_INSTANTIATE(K)                                                                                         \
  template bool is_complex<K>(const FreeComplex<K>&);                                                                 \
  template bool is_homogeneous<K>(const FreeComplex<K>&);                                                             \
  template FreeComplex<K> koszul_complex<K>(std::span<const VertexSet>, VertexSet);                                   \
  template FreeComplex<K> taylor_complex<K>(std::span<const VertexSet>, VertexSet);                                   \
  template FreeComplex<K> mapping_cone_resolution<K>(std::span<const VertexSet>,                                      \
                                                     std::span<const std::vector<VertexSet>>, ConeStats*);            \
  template FreeComplex<K> minimize<K>(FreeComplex<K>);                                                                \
  template bool has_unit_entry<K>(const FreeComplex<K>&);                                                             \
  template BettiTable betti_table<K>(const FreeComplex<K>&);                                                          \
  template bool strand_is_exact<K>(const FreeComplex<K>&, std::span<const VertexSet>, VertexSet);                     \
  template bool euler_characteristic_matches<K>(const FreeComplex<K>&, std::span<const VertexSet>, VertexSet);        \
  template DualResolution resolve_dual<K>(const SortedGraph&, OrderKind, std::size_t);

HANKEL_INSTANTIATE(Rational)
HANKEL_INSTANTIATE(ModP)

}  // namespace hankel
