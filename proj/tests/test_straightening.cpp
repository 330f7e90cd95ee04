#include <doctest.h>

#include <algorithm>

#include "hankel/clique.hpp"
#include "hankel/equations.hpp"
#include "hankel/straightening.hpp"
#include "support.hpp"

using namespace hankel;

namespace {

XMonomial xm(std::vector<int> idx) { return XMonomial::from_indices(6, idx); }
DiagonalIndex di(std::vector<int> e) { return DiagonalIndex(std::move(e)); }

std::size_t unsorted_pairs(const ScrollParams& p) {
  auto l = enumerate_lambda(p);
  std::size_t n = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (!is_sorted_pair(l[i], l[j]) && !is_sorted_pair(l[j], l[i])) ++n;
  return n;
}

}  // namespace

TEST_CASE("sorting operator") {
  CHECK(sort_pair(xm({3, 5}), xm({1, 4})) == std::pair{xm({1, 4}), xm({3, 5})});
  CHECK(sort_pair(xm({1, 4}), xm({3, 5})) == std::pair{xm({1, 4}), xm({3, 5})});
  CHECK(sort_pair(xm({1, 5}), xm({1, 3})) == std::pair{xm({1, 3}), xm({1, 5})});
  CHECK_THROWS(sort_pair(xm({1, 5}), xm({1})));
}

TEST_CASE("sortedness") {
  CHECK(is_sorted(xm({1, 4}), xm({3, 5})));
  CHECK_FALSE(is_sorted(xm({3, 5}), xm({1, 4})));
  CHECK(is_sorted(xm({2, 6}), xm({2, 6})));
}

TEST_CASE("sortability on small cases") {
  CHECK(verify_sortability(ScrollParams(2, 5, 1)));
  CHECK(verify_sortability(ScrollParams(3, 6, 1)));
  CHECK(verify_sortability(ScrollParams(2, 4, 2)));
}

TEST_CASE("sort_pair is idempotent, keeps the product and lands in lambda") {
  for (const auto& p : testing::desk_grid(20)) {
    auto l = enumerate_lambda(p);
    const int n = p.n_vars();
    for (const auto& a : l)
      for (const auto& b : l) {
        auto u = XMonomial::of(n, a), v = XMonomial::of(n, b);
        auto s = sort_pair(u, v);
        CHECK(s.first * s.second == u * v);
        CHECK(sort_pair(s.first, s.second) == s);
        CHECK(is_sorted(s.first, s.second));
        auto [sa, sb] = sort_indices(a, b);
        CHECK(in_lambda(p, sa));
        CHECK(in_lambda(p, sb));
      }
  }
}

TEST_CASE("straightening a sorted pair is a single term") {
  ScrollParams p(2, 4, 1);
  MinorTable minors(p);
  auto e = straighten(minors, di({1, 4}), di({2, 5}));
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].mu == 1);
  CHECK(e.terms[0].alpha == di({1, 4}));
  CHECK(e.terms[0].beta == di({2, 5}));
  CHECK(check_expansion(minors, e).ok());
}

TEST_CASE("straightening M(2,4)M(1,5) on (2,5,1)") {
  ScrollParams p(2, 5, 1);
  MinorTable minors(p);
  auto e = straighten(minors, di({2, 4}), di({1, 5}));
  REQUIRE(!e.terms.empty());
  CHECK(e.terms[0].alpha == di({1, 4}));
  CHECK(e.terms[0].beta == di({2, 5}));
  Polynomial sum(static_cast<std::size_t>(p.n_vars()));
  for (const auto& t : e.terms) sum += (minors(t.alpha) * minors(t.beta)).scaled(t.mu);
  CHECK(sum == minors(di({2, 4})) * minors(di({1, 5})));
  auto chk = check_expansion(minors, e);
  CHECK(chk.identity);
  CHECK(chk.decreasing);
  CHECK(chk.all_sorted);
}

TEST_CASE("straightening identity on random pairs") {
  testing::Rng g(2024);
  for (const auto& p : testing::desk_grid(20)) {
    MinorTable minors(p);
    const auto& l = minors.lambda();
    for (int s = 0; s < 25; ++s) {
      const auto& a = l[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<int>(l.size()) - 1))];
      const auto& b = l[static_cast<std::size_t>(testing::uniform(g, 0, static_cast<int>(l.size()) - 1))];
      CHECK(check_expansion(minors, straighten(minors, a, b)).ok());
    }
  }
}

TEST_CASE("fiber relations") {
  MinorTable m231(ScrollParams(2, 3, 1));
  CHECK(fiber_relations(m231).empty());

  ScrollParams p(2, 4, 1);
  MinorTable minors(p);
  auto rels = fiber_relation_data(minors);
  CHECK(rels.size() == unsorted_pairs(p));
  CHECK(rels.size() == SortedGraph(p).non_edge_count());
  auto layout = VariableLayout::fiber(p);
  for (const auto& r : rels) {
    CHECK(r.poly.total_degree() == 2);
    CHECK(r.poly.is_homogeneous());
    CHECK(verify_relation_vanishes(minors, layout, r.poly));
  }
}

TEST_CASE("each fiber relation is its unsorted quadric minus sorted quadrics") {
  for (const auto& p : testing::desk_grid(15)) {
    MinorTable minors(p);
    auto layout = VariableLayout::fiber(p);
    for (const auto& r : fiber_relation_data(minors)) {
      Exponents lead(layout.size(), 0);
      lead[layout.y_slot(r.alpha)] += 1;
      lead[layout.y_slot(r.beta)] += 1;
      CHECK(r.poly.coefficient(lead) == 1);
      for (const auto& [e, c] : r.poly.terms()) {
        if (e == lead) continue;
        std::vector<DiagonalIndex> pair;
        for (std::size_t s = 0; s < e.size(); ++s)
          for (int k = 0; k < e[s]; ++k) pair.push_back(layout.y_index(s));
        REQUIRE(pair.size() == 2);
        CHECK(is_sorted_pair(pair[0], pair[1]));
      }
    }
  }
}

TEST_CASE("Rees syzygies of (2,3,1)") {
  ScrollParams p(2, 3, 1);
  MinorTable minors(p);
  auto layout = VariableLayout::rees(p);
  auto syz = rees_syzygy_relations(p);
  std::vector<std::string> text;
  for (const auto& s : syz) text.push_back(s.to_string([&](std::size_t i) { return layout.name(i); }));
  CHECK(std::find(text.begin(), text.end(), "x[1]*Y[2,4] - x[2]*Y[1,4] + x[3]*Y[1,3]") != text.end());
  for (const auto& s : syz) CHECK(verify_relation_vanishes(minors, layout, s));
}

TEST_CASE("Rees syzygies vanish and show the duplicated-row leading pattern") {
  for (const auto& p : testing::desk_grid(20)) {
    MinorTable minors(p);
    auto layout = VariableLayout::rees(p);
    for (const auto& s : rees_syzygies(p)) {
      CHECK(verify_relation_vanishes(minors, layout, s.poly));
      CHECK(rees_leading_pattern(p, s));
    }
  }
}

TEST_CASE("substitution check") {
  ScrollParams p(2, 4, 1);
  MinorTable minors(p);
  auto layout = VariableLayout::fiber(p);
  auto ya = Polynomial::variable(layout.size(), layout.y_slot(di({1, 3})));
  auto yb = Polynomial::variable(layout.size(), layout.y_slot(di({2, 4})));
  CHECK(verify_relation_vanishes(minors, layout, ya * yb - yb * ya));
  CHECK_FALSE(verify_relation_vanishes(minors, layout, ya - yb));
}

TEST_CASE("Hilbert function agreement in low degree") {
  CHECK(hilbert_consistency(ScrollParams(2, 4, 1), 2) == Verdict::yes);
  CHECK(hilbert_consistency(ScrollParams(2, 3, 1), 4) == Verdict::yes);
  CHECK(hilbert_consistency(ScrollParams(3, 5, 1), 2) == Verdict::yes);
  CHECK(hilbert_consistency(ScrollParams(2, 6, 2), 3) == Verdict::yes);
  CHECK(hilbert_consistency(ScrollParams(2, 8, 1), 3, 10) == Verdict::budget_exceeded);
}
