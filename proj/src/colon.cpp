#include "hankel/colon.hpp"

#include <algorithm>
#include <stdexcept>

#include "hankel/kernels.hpp"

namespace hankel {

std::vector<DiagonalIndex> corner_generators(const SortedGraph& g, const MaximalClique& f, OrderKind kind) {
  std::vector<DiagonalIndex> out;
  const auto& m = f.moving;
  for (std::size_t k = 0; k + 1 < m.size(); ++k) {
    if (kind == OrderKind::lex) {
      if (m[k] < m[k + 1]) out.push_back(f.members[k + 1]);
    } else if (m[k] > m[k + 1]) {
      std::vector<int> swapped = m;
      std::swap(swapped[k], swapped[k + 1]);
      if (clique_from_moving_sequence(g, swapped)) out.push_back(f.members[k + 1]);
    }
  }
  return out;
}

std::optional<TailGenerator> tail_generator(const SortedGraph& g, const MaximalClique& f, OrderKind) {
  const ScrollParams& p = g.params();
  if (f.members.front() == first_variable(p)) return std::nullopt;
  const int r = p.r(), d = p.d();
  const std::size_t n = f.members.size();
  const auto& last = f.members.back();
  // delta[j]: least 0-based i with beta_i^{j..r-1} = beta_last^{j..r-1}
  std::vector<std::size_t> delta(static_cast<std::size_t>(r), 0);
  for (int j = 1; j < r; ++j) {
    std::size_t i = 0;
    for (; i < n; ++i) {
      bool same = true;
      for (int t = j; t < r; ++t)
        if (f.members[i][static_cast<std::size_t>(t - 1)] != last[static_cast<std::size_t>(t - 1)]) {
          same = false;
          break;
        }
      if (same) break;
    }
    delta[static_cast<std::size_t>(j)] = i;
  }
  for (int k = 1; k < r; ++k) {
    std::size_t dk = delta[static_cast<std::size_t>(k)];
    if (dk == 0) throw std::logic_error("tail segment starts at the first clique member");
    if (k + k * d < f.members[dk - 1][static_cast<std::size_t>(k - 1)]) {
      TailGenerator t;
      t.special_k = k;
      t.delta_k = dk + 1;
      for (std::size_t i = dk; i < n; ++i) {
        t.segment.push_back(f.members[i]);
        t.monomial.insert(g.index_of(f.members[i]));
      }
      return t;
    }
  }
  throw std::logic_error("no special k for the tail of a clique not starting at the first variable");
}

std::vector<VertexSet> minimalize(std::vector<VertexSet> gens) {
  std::sort(gens.begin(), gens.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::uint64_t> kept;
  for (VertexSet s : gens)
    if (!kernels::any_subset(kept, s.bits)) kept.push_back(s.bits);
  std::vector<VertexSet> out;
  for (auto b : kept) out.push_back(VertexSet{b});
  std::sort(out.begin(), out.end());
  return out;
}

ColonData colon_combinatorial(const SortedGraph& g, std::span<const MaximalClique> ordered, std::size_t position,
                              OrderKind kind) {
  const MaximalClique& f = ordered[position];
  ColonData out;
  if (position > 0) {
    out.corners = corner_generators(g, f, kind);
    out.tail = tail_generator(g, f, kind);
    for (const auto& c : out.corners) out.minimal_generators.push_back(VertexSet::single(g.index_of(c)));
    if (out.tail) {
      for (const auto& c : out.corners)
        if (out.tail->monomial.contains(g.index_of(c))) out.tail_cancelled = true;
      if (!out.tail_cancelled) out.minimal_generators.push_back(out.tail->monomial);
    }
    std::sort(out.minimal_generators.begin(), out.minimal_generators.end());
    const auto& gens = out.minimal_generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (!gens[i].disjoint(gens[j]))
          throw std::logic_error("colon generators are not pairwise coprime at clique " + std::to_string(position));
  }
  out.codim = static_cast<int>(out.minimal_generators.size());
  VertexSet support;
  for (VertexSet s : out.minimal_generators) support = support | s;
  out.essential = f.vertices - support;
  return out;
}

std::vector<ColonData> all_colons(const SortedGraph& g, std::span<const MaximalClique> ordered, OrderKind kind) {
  std::vector<ColonData> out;
  out.reserve(ordered.size());
  for (std::size_t i = 0; i < ordered.size(); ++i) out.push_back(colon_combinatorial(g, ordered, i, kind));
  return out;
}

std::vector<VertexSet> colon_bruteforce(std::span<const VertexSet> predecessor_duals, VertexSet current_dual) {
  std::vector<VertexSet> q;
  q.reserve(predecessor_duals.size());
  for (VertexSet u : predecessor_duals) q.push_back(u - current_dual);
  return minimalize(std::move(q));
}

std::vector<VertexSet> dual_generators(const SortedGraph& g, std::span<const MaximalClique> ordered) {
  std::vector<VertexSet> out;
  out.reserve(ordered.size());
  for (const auto& f : ordered) out.push_back(g.all() - f.vertices);
  return out;
}

}  // namespace hankel
