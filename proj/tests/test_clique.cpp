#include <doctest.h>

#include <algorithm>

#include "hankel/clique.hpp"
#include "hankel/colon.hpp"
#include "hankel/equations.hpp"
#include "hankel/hankel_ideal.hpp"
#include "hankel/special_clique.hpp"
#include "support.hpp"

using namespace hankel;

namespace {

DiagonalIndex di(std::vector<int> e) { return DiagonalIndex(std::move(e)); }

std::size_t position_of(const SortedGraph& g, const std::vector<MaximalClique>& ordered,
                        const std::vector<DiagonalIndex>& members) {
  const VertexSet want = g.to_set(members);
  for (std::size_t i = 0; i < ordered.size(); ++i)
    if (ordered[i].vertices == want) return i;
  return ordered.size();
}

std::vector<ScrollParams> dual_grid(std::size_t max_minors) {
  std::vector<ScrollParams> out;
  for (const auto& p : testing::desk_grid(max_minors))
    if (p.c() >= p.r() + 2) out.push_back(p);
  return out;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

TEST_CASE("sorted graph") {
  SortedGraph g(ScrollParams(2, 3, 1));
  CHECK(g.size() == 3);
  CHECK(g.non_edge_count() == 0);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; v < 3; ++v)
      if (u != v) CHECK(g.adjacent(u, v));

  for (const auto& p : testing::desk_grid(30)) {
    SortedGraph h(p);
    MinorTable minors(p);
    CHECK(h.non_edge_count() == fiber_relation_data(minors).size());
  }
}

TEST_CASE("regimes") {
  CHECK(regime_of(ScrollParams(3, 3, 5)) == Regime::principal);
  CHECK(regime_of(ScrollParams(3, 4, 1)) == Regime::no_relations);
  CHECK(regime_of(ScrollParams(2, 4, 2)) == Regime::balanced);
  CHECK(regime_of(ScrollParams(2, 8, 1)) == Regime::generic);
  CHECK(reduced_params(ScrollParams(3, 5, 4)) == ScrollParams(3, 5, 2));
  CHECK(reduced_params(ScrollParams(2, 8, 1)) == ScrollParams(2, 8, 1));
}

TEST_CASE("a clique of (2,8,1) under lex") {
  SortedGraph g(ScrollParams(2, 8, 1));
  auto ordered = enumerate_maximal_cliques(g, OrderKind::lex);
  CHECK(ordered.size() == 198);
  std::vector<DiagonalIndex> members{di({1, 4}), di({1, 5}), di({1, 6}), di({2, 6}), di({2, 7}),
                                     di({3, 7}), di({3, 8}), di({4, 8}), di({4, 9})};
  auto pos = position_of(g, ordered, members);
  REQUIRE(pos < ordered.size());
  auto col = colon_combinatorial(g, ordered, pos, OrderKind::lex);
  CHECK(col.corners == std::vector<DiagonalIndex>{di({2, 6}), di({3, 7}), di({4, 8})});
  REQUIRE(col.tail.has_value());
  CHECK(g.from_set(col.tail->monomial) == std::vector<DiagonalIndex>{di({4, 8}), di({4, 9})});
  CHECK(col.tail_cancelled);
  CHECK(col.codim == 3);
}

TEST_CASE("cliques of (3,6,1)") {
  SortedGraph g(ScrollParams(3, 6, 1));
  auto lex = enumerate_maximal_cliques(g, OrderKind::lex);
  CHECK(lex.size() == 84);

  std::vector<int> moving{3, 3, 2, 3, 2, 1, 1};
  auto f = clique_from_moving_sequence(g, moving);
  REQUIRE(f.has_value());
  CHECK(f->moving == moving);
  auto pos = position_of(g, lex, f->members);
  REQUIRE(pos < lex.size());
  auto corners = corner_generators(g, lex[pos], OrderKind::lex);
  CHECK(std::find(corners.begin(), corners.end(), di({1, 4, 7})) != corners.end());

  auto revlex = enumerate_maximal_cliques(g, OrderKind::revlex);
  std::vector<int> rmoving{3, 2, 1, 3, 2, 3, 1};
  auto h = clique_from_moving_sequence(g, rmoving);
  REQUIRE(h.has_value());
  auto rpos = position_of(g, revlex, h->members);
  REQUIRE(rpos < revlex.size());
  auto col = colon_combinatorial(g, revlex, rpos, OrderKind::revlex);
  CHECK(col.corners == std::vector<DiagonalIndex>{di({2, 5, 8})});
}

TEST_CASE("principal case has one clique") {
  SortedGraph g(ScrollParams(3, 3, 5));
  auto all = enumerate_maximal_cliques(g, OrderKind::lex);
  REQUIRE(all.size() == 1);
  CHECK(all[0].members == std::vector<DiagonalIndex>{di({1, 7, 13})});
}

TEST_CASE("greedy clique on (3,5,1)") {
  SortedGraph g(ScrollParams(3, 5, 1));
  auto f = greedy_clique(g, di({1, 3, 5}));
  CHECK(f.moving == std::vector<int>{3, 2, 3, 1, 2, 1});
  CHECK(f.members.front() == di({1, 3, 5}));
  CHECK(f.members.back() == di({3, 5, 7}));
  CHECK(is_valid_maximal_clique(g, f));
}

TEST_CASE("special clique") {
  struct Case {
    ScrollParams p;
    OrderKind kind;
    int codim;
  };
  std::vector<Case> cases{{ScrollParams(3, 6, 1), OrderKind::revlex, 4},
                          {ScrollParams(2, 8, 1), OrderKind::lex, 4},
                          {ScrollParams(2, 5, 1), OrderKind::lex, 3},
                          {ScrollParams(3, 5, 1), OrderKind::lex, 2},
                          {ScrollParams(2, 6, 2), OrderKind::lex, 4}};
  for (const auto& c : cases) {
    CAPTURE(c.p.c());
    SortedGraph g(c.p);
    auto f0 = construct_F0(g);
    REQUIRE(f0.has_value());
    CHECK(f0->kind == c.kind);
    CHECK(is_valid_maximal_clique(g, f0->clique));
    auto ordered = enumerate_maximal_cliques(g, f0->kind);
    auto colons = all_colons(g, ordered, f0->kind);
    auto chk = check_F0_conditions(g, *f0, ordered, colons);
    CHECK(chk.ok());
    CHECK(chk.codim == c.codim);
    CHECK(chk.max_codim == c.codim);
  }
  CHECK_FALSE(construct_F0(SortedGraph(ScrollParams(3, 4, 1))).has_value());
  CHECK_FALSE(construct_F0(SortedGraph(ScrollParams(3, 3, 1))).has_value());
}

TEST_CASE("the lex clique of maximal codimension on (3,6,1) is not a valid F0") {
  SortedGraph g(ScrollParams(3, 6, 1));
  auto ordered = enumerate_maximal_cliques(g, OrderKind::lex);
  auto colons = all_colons(g, ordered, OrderKind::lex);
  int best = 0;
  std::size_t at = 0;
  for (std::size_t t = 1; t < colons.size(); ++t)
    if (colons[t].codim > best) best = colons[t].codim, at = t;
  CHECK(best == 5);
  SpecialClique candidate{ordered[at], OrderKind::lex, "max codim"};
  auto chk = check_F0_conditions(g, candidate, ordered, colons);
  CHECK(chk.c1);
  CHECK_FALSE(chk.ok());
}

TEST_CASE("sequence builders") {
  CHECK(lift_sequence({1, 2}, 2, 1).size() == 4);
  CHECK(decreasing_blocks_sequence(3, 1).size() == 7);
  CHECK(increasing_blocks_sequence(ScrollParams(2, 8, 1)).size() == 8);
}

TEST_CASE("clique enumeration matches Bron-Kerbosch and every clique is valid") {
  for (const auto& p : testing::desk_grid(36)) {
    CAPTURE(p.c());
    SortedGraph g(p);
    auto bk = generic_maximal_cliques(g);
    for (auto kind : {OrderKind::lex, OrderKind::revlex}) {
      auto ours = enumerate_maximal_cliques(g, kind);
      CHECK(ours.size() == bk.size());
      std::vector<VertexSet> a, b = bk;
      for (const auto& f : ours) {
        CHECK(is_valid_maximal_clique(g, f));
        CHECK(g.to_set(f.members) == f.vertices);
        a.push_back(f.vertices);
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
      for (std::size_t i = 1; i < ours.size(); ++i) CHECK(clique_precedes(g, kind, ours[i - 1], ours[i]));
    }
  }
}

TEST_CASE("moving sequences determine generic cliques") {
  for (const auto& p : testing::desk_grid(36)) {
    if (regime_of(p) != Regime::generic) continue;
    SortedGraph g(p);
    for (const auto& f : enumerate_maximal_cliques(g, OrderKind::lex)) {
      auto back = clique_from_moving_sequence(g, f.moving);
      REQUIRE(back.has_value());
      CHECK(*back == f);
    }
  }
}

TEST_CASE("combinatorial colons equal the brute-force colons in both orders") {
  for (const auto& p : dual_grid(36)) {
    CAPTURE(p.r());
    CAPTURE(p.c());
    CAPTURE(p.d());
    SortedGraph g(p);
    for (auto kind : {OrderKind::lex, OrderKind::revlex}) {
      auto ordered = enumerate_maximal_cliques(g, kind);
      auto duals = dual_generators(g, ordered);
      auto colons = all_colons(g, ordered, kind);
      for (std::size_t t = 1; t < ordered.size(); ++t) {
        auto brute = colon_bruteforce(std::span(duals).first(t), duals[t]);
        std::sort(brute.begin(), brute.end());
        CHECK(colons[t].minimal_generators == brute);
      }
    }
  }
}

TEST_CASE("colon lengths respect the codimension bound") {
  for (const auto& p : dual_grid(36)) {
    SortedGraph g(p);
    const int n = p.n_vars();
    const int bound = (n - 1) - ceil_div(n - 1, p.r()) + 1;
    for (auto kind : {OrderKind::lex, OrderKind::revlex}) {
      auto ordered = enumerate_maximal_cliques(g, kind);
      for (const auto& c : all_colons(g, ordered, kind)) CHECK(c.codim <= bound);
    }
  }
}

TEST_CASE("minimal vertex covers of the complement are the dual generators") {
  for (const auto& p : testing::desk_grid(28)) {
    SortedGraph g(p);
    auto covers = complement_minimal_vertex_covers(g);
    auto duals = dual_generators(g, enumerate_maximal_cliques(g, OrderKind::lex));
    std::sort(covers.begin(), covers.end());
    std::sort(duals.begin(), duals.end());
    CHECK(covers == duals);
  }
}

TEST_CASE("colon_bruteforce on a small example") {
  // (x0 x1, x1 x2) : x2 x3 = (x0 x1, x1)
  std::vector<VertexSet> pred{VertexSet{0b0011}, VertexSet{0b0110}};
  auto col = colon_bruteforce(pred, VertexSet{0b1100});
  std::sort(col.begin(), col.end());
  CHECK(col == std::vector<VertexSet>{VertexSet{0b0010}});
  CHECK(minimalize({VertexSet{0b11}, VertexSet{0b01}, VertexSet{0b110}}) ==
        std::vector<VertexSet>{VertexSet{0b01}, VertexSet{0b110}});
}
