#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hankel/determinant.hpp"
#include "hankel/groebner.hpp"
#include "hankel/hankel_ideal.hpp"
#include "hankel/polynomial.hpp"
#include "support.hpp"

using namespace hankel;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i - 1); }

Exponents ex(std::vector<int> v) { return Exponents(v.begin(), v.end()); }

Polynomial permutation_det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial out(m[0][0].n_vars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial t = Polynomial::constant(out.n_vars(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) t = t * m[i][perm[i]];
    out += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("leading terms under x-lex") {
  auto f = x(3, 1) * x(3, 3) - x(3, 2) * x(3, 2);
  auto lt = leading_term(f, TermOrder::x_lex());
  CHECK(lt.monomial == ex({1, 0, 1}));
  CHECK(lt.coeff == 1);

  auto five = Polynomial::constant(3, 5);
  lt = leading_term(five, TermOrder::x_lex());
  CHECK(lt.monomial == ex({0, 0, 0}));
  CHECK(lt.coeff == 5);

  lt = leading_term(-f, TermOrder::x_lex());
  CHECK(lt.monomial == ex({1, 0, 1}));
  CHECK(lt.coeff == -1);

  CHECK_THROWS(leading_term(Polynomial(3), TermOrder::x_lex()));
}

TEST_CASE("division") {
  auto g = x(3, 1) * x(3, 3) - x(3, 2) * x(3, 2);
  std::vector<Polynomial> basis{g};
  auto r = reduce(x(3, 1) * x(3, 3), basis, TermOrder::x_lex());
  CHECK(r == x(3, 2) * x(3, 2));
  CHECK(reduce(Polynomial(3), basis, TermOrder::x_lex()).is_zero());
}

TEST_CASE("Buchberger criterion") {
  ScrollParams p(2, 4, 1);
  MinorTable minors(p);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < minors.lambda().size(); ++i) gens.push_back(minors.at(i));
  CHECK(buchberger_verify(gens, TermOrder::x_lex()) == Verdict::yes);

  std::vector<Polynomial> vars{x(3, 1), x(3, 2)};
  CHECK(buchberger_verify(vars, TermOrder::x_lex()) == Verdict::yes);

  std::vector<Polynomial> bad{x(3, 1) * x(3, 2) - x(3, 3) * x(3, 3), x(3, 1)};
  CHECK(buchberger_verify(bad, TermOrder::x_lex()) == Verdict::no);
  auto done = groebner_basis(bad, TermOrder::x_lex());
  REQUIRE(done.status == Verdict::yes);
  CHECK(buchberger_verify(done.basis, TermOrder::x_lex()) == Verdict::yes);
}

TEST_CASE("term budget gives an explicit outcome") {
  ScrollParams p(3, 5, 1);
  GroebnerBudget tiny;
  tiny.max_pairs = 1;
  std::vector<Polynomial> gens;
  MinorTable minors(p);
  for (std::size_t i = 0; i < minors.lambda().size(); ++i) gens.push_back(minors.at(i));
  CHECK(buchberger_verify(gens, TermOrder::x_lex(), tiny) == Verdict::budget_exceeded);
  CHECK(std::string(to_string(Verdict::budget_exceeded)) == "budget_exceeded");
}

TEST_CASE("determinants") {
  PolyMatrix m{{x(3, 1), x(3, 2)}, {x(3, 2), x(3, 3)}};
  CHECK(determinant(m) == x(3, 1) * x(3, 3) - x(3, 2) * x(3, 2));
  PolyMatrix id{{Polynomial::constant(1, 1), Polynomial(1)}, {Polynomial(1), Polynomial::constant(1, 1)}};
  CHECK(determinant(id) == Polynomial::constant(1, 1));

  // rows k and k+1 of the extended matrix coincide
  const std::size_t n = 6;
  PolyMatrix a{{x(n, 1), x(n, 2), x(n, 3)}, {x(n, 1), x(n, 2), x(n, 3)}, {x(n, 3), x(n, 4), x(n, 5)}};
  CHECK(determinant(a).is_zero());
}

TEST_CASE("rationals stay exact") {
  Rational a = ratio(1, 3), b = ratio(2, 3);
  CHECK(a + b == 1);
  CHECK(to_string(ratio(-6, 4)) == "-3/2");
  CHECK(to_string(ratio(4, 2)) == "2");
  CHECK(parse_rational("-3/2") == ratio(-3, 2));
  Polynomial f = Polynomial::constant(2, ratio(1, 3));
  f += Polynomial::constant(2, ratio(2, 3));
  CHECK(f == Polynomial::constant(2, 1));
}

TEST_CASE("ModP arithmetic") {
  ModP a(ModP::modulus - 1), b(5);
  CHECK((a + b).value() == 4);
  CHECK((b - a).value() == 6);
  CHECK((a * a).value() == 1);
  CHECK((b / b).value() == 1);
  CHECK((b * b.inverse()).value() == 1);
  CHECK(ModP(-1) == a);
}

TEST_CASE("ring axioms and multiplicative leading terms on random polynomials") {
  testing::Rng g(7);
  const std::size_t n = 4;
  std::vector<TermOrder> orders{TermOrder::x_lex(), TermOrder::y_induced({2, 0, 3, 1}), TermOrder::rees(3)};
  for (int round = 0; round < 200; ++round) {
    auto f = testing::random_poly(g, n, testing::uniform(g, 1, 5), 3);
    auto h = testing::random_poly(g, n, testing::uniform(g, 1, 5), 3);
    auto k = testing::random_poly(g, n, testing::uniform(g, 1, 5), 3);
    CHECK((f + h) * k == f * k + h * k);
    CHECK(f * h == h * f);
    CHECK((f - f).is_zero());
    if (f.is_zero() || h.is_zero()) continue;
    for (const auto& ord : orders) {
      auto lf = leading_term(f, ord), lh = leading_term(h, ord), lfh = leading_term(f * h, ord);
      CHECK(lfh.monomial == product(lf.monomial, lh.monomial));
      CHECK(lfh.coeff == lf.coeff * lh.coeff);
    }
  }
}

TEST_CASE("term orders are multiplicative") {
  testing::Rng g(11);
  std::vector<TermOrder> orders{TermOrder::x_lex(), TermOrder::y_induced({1, 3, 0, 2}), TermOrder::rees(3)};
  for (int round = 0; round < 500; ++round) {
    Exponents a(4), b(4), m(4);
    for (std::size_t i = 0; i < 4; ++i) {
      a[i] = static_cast<std::uint16_t>(testing::uniform(g, 0, 3));
      b[i] = static_cast<std::uint16_t>(testing::uniform(g, 0, 3));
      m[i] = static_cast<std::uint16_t>(testing::uniform(g, 0, 3));
    }
    for (const auto& ord : orders) CHECK(ord.compare(a, b) == ord.compare(product(a, m), product(b, m)));
  }
}

TEST_CASE("cofactor determinant matches the permutation expansion") {
  testing::Rng g(3);
  for (int round = 0; round < 60; ++round) {
    const std::size_t size = static_cast<std::size_t>(testing::uniform(g, 1, 4));
    PolyMatrix m(size, std::vector<Polynomial>(size, Polynomial(3)));
    for (auto& row : m)
      for (auto& e : row)
        if (testing::uniform(g, 0, 2) != 0) e = testing::random_poly(g, 3, testing::uniform(g, 1, 2), 2);
    CHECK(determinant(m) == permutation_det(m));
  }
}

TEST_CASE("minimal monomial generators") {
  auto gens = minimal_monomial_generators({ex({1, 1, 0}), ex({1, 0, 0}), ex({0, 2, 0}), ex({0, 2, 1})});
  std::sort(gens.begin(), gens.end());
  CHECK(gens == std::vector<Exponents>{ex({0, 2, 0}), ex({1, 0, 0})});
}
