#include "hankel/special_clique.hpp"

#include <stdexcept>

namespace hankel {

std::vector<int> increasing_blocks_sequence(const ScrollParams& p) {
  const int r = p.r(), n1 = p.n_vars() - 1;
  const int p_blocks = (n1 - 1) / r;
  const int q = n1 - p_blocks * r;  // 1 <= q <= r
  std::vector<int> out;
  for (int b = 0; b < p_blocks; ++b)
    for (int j = 1; j <= r; ++j) out.push_back(j);
  for (int j = 1; j <= q; ++j) out.push_back(j);
  return out;
}

std::vector<int> decreasing_blocks_sequence(int r, int d) {
  std::vector<int> out;
  for (int j = r; j >= 2; --j) out.push_back(j);
  for (int b = 0; b < d; ++b)
    for (int j = r; j >= 1; --j) out.push_back(j);
  for (int j = r - 1; j >= 1; --j) out.push_back(j);
  return out;
}

std::vector<int> lift_sequence(const std::vector<int>& moving, int r, int d) {
  std::vector<std::vector<int>> runs;
  for (int j : moving) {
    if (runs.empty() || runs.back().back() <= j) runs.emplace_back();
    runs.back().push_back(j);
  }
  if (runs.size() < static_cast<std::size_t>(d) + 1) throw std::invalid_argument("too few decreasing runs to lift");
  std::vector<int> out{r + 1};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (i < static_cast<std::size_t>(d)) out.push_back(r + 1);
    out.insert(out.end(), runs[i].begin(), runs[i].end());
  }
  return out;
}

std::optional<SpecialClique> construct_F0(const SortedGraph& g) {
  const ScrollParams& p = g.params();
  const int r = p.r(), c = p.c(), d = p.d();
  if (c <= r + 1) return std::nullopt;
  SpecialClique out;
  std::vector<int> moving;
  if (c <= r + d + 1) {
    out.kind = OrderKind::lex;
    out.construction = c <= r + d ? "greedy from the fixed start" : "greedy from the first variable";
    out.clique = greedy_clique(g, first_variable(p));
    return out;
  }
  if (c >= 2 * r + d) {
    out.kind = OrderKind::lex;
    out.construction = "increasing blocks";
    moving = increasing_blocks_sequence(p);
  } else if (c == 2 * r + d - 1) {
    out.kind = OrderKind::revlex;
    out.construction = "decreasing blocks";
    moving = decreasing_blocks_sequence(r, d);
  } else {
    const int eps = 2 * r + d - 1 - c;
    const int r0 = r - eps;
    out.kind = OrderKind::revlex;
    out.construction = "lifted decreasing blocks";
    moving = decreasing_blocks_sequence(r0, d);
    for (int t = r0; t < r; ++t) moving = lift_sequence(moving, t, d);
  }
  auto f = clique_from_moving_sequence(g, moving);
  if (!f) throw std::logic_error("special moving sequence is not legal for " + p.to_string());
  out.clique = std::move(*f);
  return out;
}

F0Check check_F0_conditions(const SortedGraph& g, const SpecialClique& f0, std::span<const MaximalClique> ordered,
                            std::span<const ColonData> colons) {
  (void)g;
  F0Check out;
  if (ordered.size() != colons.size()) throw std::invalid_argument("one colon per clique expected");
  std::size_t pos = ordered.size();
  for (std::size_t i = 0; i < ordered.size(); ++i)
    if (ordered[i] == f0.clique) pos = i;
  if (pos == ordered.size()) {
    out.witness = "special clique not among the enumerated cliques";
    return out;
  }
  out.codim = colons[pos].codim;
  for (std::size_t i = 1; i < colons.size(); ++i) out.max_codim = std::max(out.max_codim, colons[i].codim);
  out.c1 = pos > 0 && out.codim == out.max_codim;
  if (!out.c1) out.witness = "colon length " + std::to_string(out.codim) + " below maximum " + std::to_string(out.max_codim);

  const VertexSet ess = colons[pos].essential;
  out.c2 = true;
  out.c3 = true;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const VertexSet e = colons[i].essential;
    if (i != pos && e == ess && out.c2) {
      out.c2 = false;
      out.witness = "clique " + std::to_string(i) + " shares the essential part";
    }
    for (VertexSet f : colons[i].minimal_generators)
      if (e.disjoint(f) && (e | f) == ess && out.c3) {
        out.c3 = false;
        out.witness = "clique " + std::to_string(i) + " has Ess + Supp(f) = Ess(F0)";
      }
  }
  return out;
}

}  // namespace hankel
