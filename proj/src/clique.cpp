#include "hankel/clique.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hankel/errors.hpp"
#include "hankel/kernels.hpp"
#include "hankel/straightening.hpp"

namespace hankel {

Regime regime_of(const ScrollParams& p) {
  if (p.c() == p.r()) return Regime::principal;
  if (p.c() == p.r() + 1) return Regime::no_relations;
  if (p.c() <= p.r() + p.d()) return Regime::balanced;
  return Regime::generic;
}

const char* to_string(Regime g) {
  switch (g) {
    case Regime::principal: return "principal";
    case Regime::no_relations: return "no_relations";
    case Regime::balanced: return "balanced";
    case Regime::generic: return "generic";
  }
  return "?";
}

ScrollParams reduced_params(const ScrollParams& p) {
  if (p.r() < p.c() && p.c() < p.r() + p.d()) return ScrollParams(p.r(), p.c(), p.c() - p.r());
  return p;
}

SortedGraph::SortedGraph(const ScrollParams& p) : p_(p) {
  if (p.big_n() > max_vertices)
    throw std::invalid_argument("sorted graph supports at most 64 Y-variables, " + p.to_string() + " has " +
                                std::to_string(p.big_n()));
  lambda_ = enumerate_lambda(p);
  const std::size_t n = lambda_.size();
  adj_.assign(n, VertexSet{});
  for (std::size_t i = 0; i < n; ++i) {
    pos_.emplace(lambda_[i], i);
    for (std::size_t j = i + 1; j < n; ++j)
      if (is_sorted_pair(lambda_[i], lambda_[j]) || is_sorted_pair(lambda_[j], lambda_[i])) {
        adj_[i].insert(j);
        adj_[j].insert(i);
      }
  }
  for (int k = 0; k < 2; ++k) {
    OrderKind kind = k == 0 ? OrderKind::lex : OrderKind::revlex;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return compare_y(kind, lambda_[a], lambda_[b]) > 0; });
    ranks_[k].assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) ranks_[k][order[i]] = i;
  }
}

std::size_t SortedGraph::index_of(const DiagonalIndex& a) const {
  auto it = pos_.find(a);
  if (it == pos_.end()) throw std::invalid_argument("not a vertex: " + a.to_string());
  return it->second;
}

std::size_t SortedGraph::non_edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < size(); ++v) total += size() - 1 - static_cast<std::size_t>(adj_[v].size());
  return total / 2;
}

VertexSet SortedGraph::to_set(std::span<const DiagonalIndex> members) const {
  VertexSet s;
  for (const auto& m : members) s.insert(index_of(m));
  return s;
}

std::vector<DiagonalIndex> SortedGraph::from_set(VertexSet s) const {
  std::vector<DiagonalIndex> out;
  for (std::size_t v : s.elements()) out.push_back(lambda_[v]);
  return out;
}

SortedGraph build_graph(const ScrollParams& p) { return SortedGraph(p); }

namespace {

using Tuple = std::vector<int>;

bool chain_ok(const Tuple& t, int d) {
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] + d >= t[i]) return false;
  return true;
}

Tuple target_for(const SortedGraph& g, const Tuple& start) {
  const ScrollParams& p = g.params();
  if (regime_of(p) == Regime::generic) {
    Tuple t(start.begin() + 1, start.end());
    t.push_back(p.n_vars());
    return t;
  }
  auto last = last_variable(p);
  return Tuple(last.entries().begin(), last.entries().end());
}

std::vector<Tuple> starts_for(const SortedGraph& g) {
  const ScrollParams& p = g.params();
  std::vector<Tuple> out;
  if (regime_of(p) != Regime::generic) {
    auto f = first_variable(p);
    out.emplace_back(f.entries().begin(), f.entries().end());
    return out;
  }
  for (const auto& a : g.vertices())
    if (a[0] == 1 && p.n_vars() - a[a.size() - 1] > p.d()) out.emplace_back(a.entries().begin(), a.entries().end());
  return out;
}

MaximalClique make_clique(const SortedGraph& g, const std::vector<Tuple>& path, const std::vector<int>& moving) {
  MaximalClique f;
  for (const auto& t : path) {
    f.members.emplace_back(t);
    f.vertices.insert(g.index_of(f.members.back()));
  }
  f.moving = moving;
  return f;
}

std::vector<std::size_t> rank_key(const SortedGraph& g, OrderKind kind, const MaximalClique& f) {
  std::vector<std::size_t> key;
  for (std::size_t v : f.vertices.elements()) key.push_back(g.rank(kind, v));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

bool clique_precedes(const SortedGraph& g, OrderKind kind, const MaximalClique& a, const MaximalClique& b) {
  return rank_key(g, kind, a) < rank_key(g, kind, b);
}

void sort_cliques(const SortedGraph& g, OrderKind kind, std::vector<MaximalClique>& cliques) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
  for (std::size_t i = 0; i < cliques.size(); ++i) keyed.emplace_back(rank_key(g, kind, cliques[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<MaximalClique> out;
  out.reserve(cliques.size());
  for (auto& [k, i] : keyed) out.push_back(std::move(cliques[i]));
  cliques = std::move(out);
}

std::vector<MaximalClique> enumerate_maximal_cliques(const SortedGraph& g, OrderKind kind, std::size_t max_cliques) {
  const ScrollParams& p = g.params();
  std::vector<MaximalClique> out;
  if (regime_of(p) == Regime::principal) {
    MaximalClique f;
    f.members.push_back(g.vertex(0));
    f.vertices.insert(0);
    out.push_back(std::move(f));
    return out;
  }
  const int r = p.r(), d = p.d();
  for (const Tuple& start : starts_for(g)) {
    const Tuple target = target_for(g, start);
    std::vector<Tuple> path{start};
    std::vector<int> moving;
    std::function<void()> rec = [&]() {
      const Tuple cur = path.back();
      if (cur == target) {
        if (out.size() >= max_cliques) throw BudgetExceeded("more than " + std::to_string(max_cliques) + " maximal cliques");
        out.push_back(make_clique(g, path, moving));
        return;
      }
      for (int j = 0; j < r; ++j) {
        if (cur[static_cast<std::size_t>(j)] >= target[static_cast<std::size_t>(j)]) continue;
        Tuple next = cur;
        ++next[static_cast<std::size_t>(j)];
        if (!chain_ok(next, d)) continue;
        path.push_back(std::move(next));
        moving.push_back(j + 1);
        rec();
        path.pop_back();
        moving.pop_back();
      }
    };
    rec();
  }
  sort_cliques(g, kind, out);
  return out;
}

std::optional<MaximalClique> clique_from_moving_sequence(const SortedGraph& g, std::span<const int> moving) {
  const ScrollParams& p = g.params();
  const int r = p.r();
  if (regime_of(p) == Regime::principal) {
    if (!moving.empty()) return std::nullopt;
    MaximalClique f;
    f.members.push_back(g.vertex(0));
    f.vertices.insert(0);
    return f;
  }
  for (int j : moving)
    if (j < 1 || j > r) return std::nullopt;
  Tuple start;
  if (regime_of(p) == Regime::generic) {
    std::vector<int> count(static_cast<std::size_t>(r + 1), 0);
    for (int j : moving) ++count[static_cast<std::size_t>(j)];
    start.push_back(1);
    for (int t = 1; t < r; ++t) start.push_back(start.back() + count[static_cast<std::size_t>(t)]);
    if (p.n_vars() - start.back() != count[static_cast<std::size_t>(r)]) return std::nullopt;
    if (!chain_ok(start, p.d()) || p.n_vars() - start.back() <= p.d()) return std::nullopt;
  } else {
    auto f = first_variable(p);
    start.assign(f.entries().begin(), f.entries().end());
  }
  const Tuple target = target_for(g, start);
  std::vector<Tuple> path{start};
  for (int j : moving) {
    Tuple next = path.back();
    if (next[static_cast<std::size_t>(j - 1)] >= target[static_cast<std::size_t>(j - 1)]) return std::nullopt;
    ++next[static_cast<std::size_t>(j - 1)];
    if (!chain_ok(next, p.d())) return std::nullopt;
    path.push_back(std::move(next));
  }
  if (path.back() != target) return std::nullopt;
  return make_clique(g, path, std::vector<int>(moving.begin(), moving.end()));
}

MaximalClique greedy_clique(const SortedGraph& g, const DiagonalIndex& start) {
  const ScrollParams& p = g.params();
  if (!g.contains(start)) throw std::invalid_argument("greedy start is not a vertex");
  if (regime_of(p) == Regime::principal) return *clique_from_moving_sequence(g, {});
  Tuple cur(start.entries().begin(), start.entries().end());
  auto legal_starts = starts_for(g);
  if (std::find(legal_starts.begin(), legal_starts.end(), cur) == legal_starts.end())
    throw std::invalid_argument("no maximal clique starts at " + start.to_string());
  const Tuple target = target_for(g, cur);
  std::vector<Tuple> path{cur};
  std::vector<int> moving;
  while (cur != target) {
    bool moved = false;
    for (int j = 0; j < p.r(); ++j) {
      if (cur[static_cast<std::size_t>(j)] >= target[static_cast<std::size_t>(j)]) continue;
      Tuple next = cur;
      ++next[static_cast<std::size_t>(j)];
      if (!chain_ok(next, p.d())) continue;
      cur = next;
      path.push_back(next);
      moving.push_back(j + 1);
      moved = true;
    }
    if (!moved) throw std::logic_error("greedy moving strategy got stuck");
  }
  return make_clique(g, path, moving);
}

bool is_valid_maximal_clique(const SortedGraph& g, const MaximalClique& f) {
  const ScrollParams& p = g.params();
  const int r = p.r();
  if (f.members.empty() || f.moving.size() + 1 != f.members.size()) return false;
  VertexSet s;
  for (const auto& m : f.members) {
    if (!g.contains(m)) return false;
    s.insert(g.index_of(m));
  }
  if (s != f.vertices || s.size() != static_cast<int>(f.members.size())) return false;
  for (std::size_t k = 0; k + 1 < f.members.size(); ++k) {
    int changed = 0, which = 0;
    for (int j = 0; j < r; ++j) {
      int diff = f.members[k + 1][static_cast<std::size_t>(j)] - f.members[k][static_cast<std::size_t>(j)];
      if (diff == 1) {
        ++changed;
        which = j + 1;
      } else if (diff != 0) {
        return false;
      }
    }
    if (changed != 1 || which != f.moving[k]) return false;
  }
  const auto& first = f.members.front();
  const auto& last = f.members.back();
  switch (regime_of(p)) {
    case Regime::principal:
      if (f.members.size() != 1) return false;
      break;
    case Regime::no_relations:
    case Regime::balanced:
      if (first != first_variable(p) || last != last_variable(p)) return false;
      break;
    case Regime::generic:
      if (first[0] != 1 || last[static_cast<std::size_t>(r - 1)] != p.n_vars()) return false;
      for (int j = 0; j + 1 < r; ++j)
        if (last[static_cast<std::size_t>(j)] != first[static_cast<std::size_t>(j + 1)]) return false;
      break;
  }
  for (std::size_t u : s.elements())
    if (!(s - VertexSet::single(u)).subset_of(g.neighbors(u))) return false;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!s.contains(v) && s.subset_of(g.neighbors(v))) return false;
  return true;
}

std::vector<VertexSet> generic_maximal_cliques(const SortedGraph& g) {
  std::vector<VertexSet> out;
  std::function<void(VertexSet, VertexSet, VertexSet)> rec = [&](VertexSet R, VertexSet P, VertexSet X) {
    if (P.empty() && X.empty()) {
      out.push_back(R);
      return;
    }
    std::size_t pivot = (P | X).elements().front();
    for (std::size_t v : (P - g.neighbors(pivot)).elements()) {
      rec(R | VertexSet::single(v), P & g.neighbors(v), X & g.neighbors(v));
      P.erase(v);
      X.insert(v);
    }
  };
  rec(VertexSet{}, g.all(), VertexSet{});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> clique_f_vector(const SortedGraph& g, std::size_t budget) {
  std::vector<long long> f{1};
  std::size_t work = 0;
  // faces are grown in increasing vertex order so each is counted once
  std::function<void(int, VertexSet)> rec = [&](int size, VertexSet cand) {
    for (std::size_t v : cand.elements()) {
      if (++work > budget) throw BudgetExceeded("clique f-vector past " + std::to_string(budget) + " faces");
      if (static_cast<int>(f.size()) <= size + 1) f.push_back(0);
      ++f[static_cast<std::size_t>(size + 1)];
      VertexSet later{cand.bits & ~((std::uint64_t{2} << v) - 1)};
      rec(size + 1, later & g.neighbors(v));
    }
  };
  rec(0, g.all());
  return f;
}

std::vector<VertexSet> complement_minimal_vertex_covers(const SortedGraph& g, std::size_t budget) {
  std::vector<VertexSet> covers{VertexSet{}};
  std::size_t work = 0;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (g.adjacent(u, v)) continue;
      std::vector<VertexSet> next;
      for (VertexSet c : covers) {
        if (c.contains(u) || c.contains(v)) {
          next.push_back(c);
        } else {
          next.push_back(c | VertexSet::single(u));
          next.push_back(c | VertexSet::single(v));
        }
      }
      std::sort(next.begin(), next.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      next.erase(std::unique(next.begin(), next.end()), next.end());
      std::vector<std::uint64_t> kept;
      for (VertexSet c : next) {
        work += kept.size() + 1;
        if (work > budget) throw BudgetExceeded("vertex cover enumeration exceeded its budget");
        if (!kernels::any_subset(kept, c.bits)) kept.push_back(c.bits);
      }
      covers.clear();
      for (auto b : kept) covers.push_back(VertexSet{b});
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace hankel
