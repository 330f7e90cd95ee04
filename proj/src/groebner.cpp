#include "hankel/groebner.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

namespace hankel {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& ord, std::size_t max_terms) {
  std::vector<Term> lts;
  lts.reserve(basis.size());
  for (const auto& b : basis) lts.push_back(leading_term(b, ord));
  Polynomial rem(f.n_vars());
  Polynomial p = f;
  while (!p.is_zero()) {
    Term lt = leading_term(p, ord);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!divides(lts[i].monomial, lt.monomial)) continue;
      p.sub_multiple(basis[i], quotient(lt.monomial, lts[i].monomial), lt.coeff / lts[i].coeff);
      divided = true;
      break;
    }
    if (!divided) {
      rem.add_term(lt.monomial, lt.coeff);
      p.add_term(lt.monomial, -lt.coeff);
    }
    if (p.size() + rem.size() > max_terms) throw BudgetExceeded("reduction exceeded the term bound");
  }
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  Term a = leading_term(f, ord), b = leading_term(g, ord);
  Exponents l = lcm(a.monomial, b.monomial);
  Polynomial s = f.times_monomial(quotient(l, a.monomial), 1 / a.coeff);
  s.sub_multiple(g, quotient(l, b.monomial), 1 / b.coeff);
  return s;
}

namespace {

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

}  // namespace

Verdict buchberger_verify(std::span<const Polynomial> gens, const TermOrder& ord, const GroebnerBudget& budget) {
  std::vector<Exponents> lts;
  for (const auto& g : gens) lts.push_back(leading_term(g, ord).monomial);
  std::size_t pairs = 0;
  try {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (coprime(lts[i], lts[j])) continue;
        if (++pairs > budget.max_pairs) return Verdict::budget_exceeded;
        Polynomial s = s_polynomial(gens[i], gens[j], ord);
        if (!reduce(s, gens, ord, budget.max_terms).is_zero()) return Verdict::no;
      }
    }
  } catch (const BudgetExceeded&) {
    return Verdict::budget_exceeded;
  }
  return Verdict::yes;
}

GroebnerResult groebner_basis(std::vector<Polynomial> gens, const TermOrder& ord, const GroebnerBudget& budget) {
  GroebnerResult out;
  std::vector<Polynomial>& basis = out.basis;
  std::vector<Exponents> lts;
  // (lcm degree, i, j), smallest degree first
  using Pair = std::tuple<int, std::size_t, std::size_t>;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> queue;

  auto add = [&](Polynomial g) {
    Term lt = leading_term(g, ord);
    g = g.scaled(1 / lt.coeff);
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i)
      if (!coprime(lts[i], lt.monomial)) queue.emplace(degree(lcm(lts[i], lt.monomial)), i, k);
    basis.push_back(std::move(g));
    lts.push_back(lt.monomial);
  };

  try {
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      add(std::move(g));
    }
    std::size_t pairs = 0;
    while (!queue.empty()) {
      auto [deg, i, j] = queue.top();
      queue.pop();
      if (++pairs > budget.max_pairs) {
        out.status = Verdict::budget_exceeded;
        return out;
      }
      Polynomial r = reduce(s_polynomial(basis[i], basis[j], ord), basis, ord, budget.max_terms);
      if (r.is_zero()) continue;
      if (basis.size() >= budget.max_basis) {
        out.status = Verdict::budget_exceeded;
        return out;
      }
      add(std::move(r));
    }
  } catch (const BudgetExceeded&) {
    out.status = Verdict::budget_exceeded;
  }
  return out;
}

std::vector<Exponents> minimal_monomial_generators(std::vector<Exponents> gens) {
  std::sort(gens.begin(), gens.end(), [](const Exponents& a, const Exponents& b) {
    int da = degree(a), db = degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hankel
