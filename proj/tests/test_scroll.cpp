#include <doctest.h>

#include <algorithm>
#include <set>

#include "hankel/scroll.hpp"
#include "support.hpp"

using namespace hankel;

namespace {

DiagonalIndex di(std::vector<int> e) { return DiagonalIndex(std::move(e)); }

XMonomial xm(int n, std::vector<int> idx) { return XMonomial::from_indices(n, idx); }

// graded reverse lex by its textbook definition: the last nonzero entry of u - v is negative
std::strong_ordering grevlex_reference(const XMonomial& u, const XMonomial& v) {
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  for (int i = u.n_vars(); i >= 1; --i) {
    int diff = u.exponent(i) - v.exponent(i);
    if (diff < 0) return std::strong_ordering::greater;
    if (diff > 0) return std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

}  // namespace

TEST_CASE("params derive N and the Y-variable count") {
  ScrollParams p(2, 8, 1);
  CHECK(p.n_vars() == 9);
  CHECK(p.big_n() == 28);
  CHECK(ScrollParams(3, 6, 1).n_vars() == 8);
  CHECK_THROWS_AS(ScrollParams(1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(ScrollParams(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(ScrollParams(2, 3, 0), std::invalid_argument);
}

TEST_CASE("enumerate_lambda on (2,4,1)") {
  auto l = enumerate_lambda(ScrollParams(2, 4, 1));
  std::vector<DiagonalIndex> want{di({1, 3}), di({1, 4}), di({1, 5}), di({2, 4}), di({2, 5}), di({3, 5})};
  CHECK(l == want);
}

TEST_CASE("enumerate_lambda counts and the principal case") {
  CHECK(enumerate_lambda(ScrollParams(2, 8, 1)).size() == 28);
  auto one = enumerate_lambda(ScrollParams(3, 3, 5));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == di({1, 7, 13}));
}

TEST_CASE("d-chains") {
  CHECK(is_d_chain(std::vector<int>{1, 3, 5}, 1));
  CHECK_FALSE(is_d_chain(std::vector<int>{1, 2, 5}, 1));
  CHECK(is_d_chain(std::vector<int>{1, 7, 13}, 5));
  CHECK(is_d_chain(std::vector<int>{5, 1, 3}, 1));
  CHECK_THROWS(di({3, 1}));
}

TEST_CASE("compare_x examples") {
  CHECK(compare_x(OrderKind::lex, xm(4, {1, 3}), xm(4, {2, 2})) == std::strong_ordering::greater);
  CHECK(compare_x(OrderKind::lex, xm(4, {1, 3}), xm(4, {1, 3})) == std::strong_ordering::equal);
  // x4 is the smallest variable and divides the first monomial, so it is the smaller one
  CHECK(compare_x(OrderKind::revlex, xm(4, {1, 4}), xm(4, {2, 3})) == std::strong_ordering::less);
  CHECK_THROWS(compare_x(OrderKind::revlex, xm(4, {1, 4}), xm(4, {2})));
}

TEST_CASE("revlex agrees with the textbook definition on all degree-2 and degree-3 monomials in 4 variables") {
  std::vector<XMonomial> all;
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      all.push_back(xm(4, {a, b}));
      for (int c = b; c <= 4; ++c) all.push_back(xm(4, {a, b, c}));
    }
  for (const auto& u : all)
    for (const auto& v : all)
      if (u.degree() == v.degree()) CHECK(compare_x(OrderKind::revlex, u, v) == grevlex_reference(u, v));
}

TEST_CASE("compare_y examples") {
  CHECK(compare_y(OrderKind::lex, di({1, 3}), di({1, 4})) == std::strong_ordering::greater);
  CHECK(compare_y(OrderKind::lex, di({1, 4}), di({2, 4})) == std::strong_ordering::greater);
  CHECK(compare_y(OrderKind::revlex, di({1, 4}), di({2, 3})) ==
        compare_x(OrderKind::revlex, xm(4, {1, 4}), xm(4, {2, 3})));
}

TEST_CASE("lambda has binomial(c, r) elements, distinct monomials, and both Y-orders are total") {
  for (int r = 2; r <= 4; ++r)
    for (int d = 1; d <= 3; ++d)
      for (int c = r; c <= r + 5; ++c) {
        ScrollParams p(r, c, d);
        auto l = enumerate_lambda(p);
        CHECK(l.size() == binomial(c, r));
        CHECK(std::is_sorted(l.begin(), l.end()));
        std::set<std::vector<int>> monos;
        for (const auto& a : l) {
          CHECK(in_lambda(p, a));
          monos.insert(XMonomial::of(p.n_vars(), a).indices());
        }
        CHECK(monos.size() == l.size());
        if (l.size() > 30) continue;
        for (auto kind : {OrderKind::lex, OrderKind::revlex})
          for (const auto& a : l)
            for (const auto& b : l) {
              auto ab = compare_y(kind, a, b), ba = compare_y(kind, b, a);
              CHECK((ab == std::strong_ordering::equal) == (a == b));
              CHECK((ab == std::strong_ordering::less) == (ba == std::strong_ordering::greater));
              for (const auto& e : l)
                if (ab == std::strong_ordering::greater && compare_y(kind, b, e) == std::strong_ordering::greater)
                  CHECK(compare_y(kind, a, e) == std::strong_ordering::greater);
            }
      }
}

TEST_CASE("first and last ring variables, column coordinates") {
  ScrollParams p(3, 6, 1);
  CHECK(first_variable(p) == di({1, 3, 5}));
  CHECK(last_variable(p) == di({4, 6, 8}));
  CHECK(di({1, 4, 7}).columns(1) == std::vector<int>{1, 3, 5});
  CHECK(from_columns(p, std::vector<int>{1, 3, 5}) == di({1, 4, 7}));
}

TEST_CASE("order kind names") {
  CHECK(parse_order_kind("lex") == OrderKind::lex);
  CHECK(parse_order_kind("revlexType") == OrderKind::revlex);
  CHECK_THROWS(parse_order_kind("grevlex"));
  CHECK(y_name(di({1, 3})) == "Y[1,3]");
  CHECK(x_name(4) == "x[4]");
}
