#include "hankel/hankel_ideal.hpp"

#include <functional>
#include <stdexcept>

#include "hankel/determinant.hpp"

namespace hankel {

std::vector<std::vector<int>> hankel_matrix(const ScrollParams& p) {
  std::vector<std::vector<int>> h(static_cast<std::size_t>(p.r()), std::vector<int>(static_cast<std::size_t>(p.c())));
  for (int i = 0; i < p.r(); ++i)
    for (int j = 0; j < p.c(); ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = j + 1 + i * p.d();
  return h;
}

Exponents x_exponents(const ScrollParams& p, const DiagonalIndex& a) {
  Exponents e(static_cast<std::size_t>(p.n_vars()), 0);
  for (int i : a.entries()) ++e.at(static_cast<std::size_t>(i - 1));
  return e;
}

Minor minor(const ScrollParams& p, const DiagonalIndex& a) {
  if (!in_lambda(p, a)) throw std::invalid_argument("not a valid diagonal index for " + p.to_string() + ": " + a.to_string());
  const auto h = hankel_matrix(p);
  const std::size_t n = static_cast<std::size_t>(p.n_vars());
  Minor m{a, Polynomial(n), a.columns(p.d())};
  PolyMatrix sub(static_cast<std::size_t>(p.r()));
  for (std::size_t i = 0; i < sub.size(); ++i)
    for (int col : m.columns)
      sub[i].push_back(Polynomial::variable(n, static_cast<std::size_t>(h[i][static_cast<std::size_t>(col - 1)] - 1)));
  m.poly = determinant(sub);
  return m;
}

MinorTable::MinorTable(const ScrollParams& p) : p_(p), lambda_(enumerate_lambda(p)) {
  polys_.reserve(lambda_.size());
  for (std::size_t i = 0; i < lambda_.size(); ++i) {
    polys_.push_back(minor(p, lambda_[i]).poly);
    pos_.emplace(lambda_[i], i);
  }
}

std::size_t MinorTable::index_of(const DiagonalIndex& a) const {
  auto it = pos_.find(a);
  if (it == pos_.end()) throw std::invalid_argument("no minor with diagonal " + a.to_string());
  return it->second;
}

const Polynomial& MinorTable::operator()(const DiagonalIndex& a) const { return polys_[index_of(a)]; }

Verdict verify_minors_groebner(const ScrollParams& p, const GroebnerBudget& budget, std::size_t max_minors) {
  if (p.big_n() > max_minors) return Verdict::budget_exceeded;
  MinorTable t(p);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < t.lambda().size(); ++i) gens.push_back(t.at(i));
  return buchberger_verify(gens, TermOrder::x_lex(), budget);
}

Verdict verify_power_initial(const ScrollParams& p, int k, const GroebnerBudget& budget, std::size_t max_minors) {
  if (k < 1) throw std::invalid_argument("power must be positive");
  if (p.big_n() > max_minors) return Verdict::budget_exceeded;
  MinorTable t(p);
  const std::size_t m = t.lambda().size();
  std::vector<Polynomial> gens;
  std::vector<Exponents> ini_power;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == static_cast<std::size_t>(k)) {
      Polynomial f = Polynomial::constant(static_cast<std::size_t>(p.n_vars()), 1);
      Exponents e(static_cast<std::size_t>(p.n_vars()), 0);
      for (std::size_t i : pick) {
        f = f * t.at(i);
        e = product(e, x_exponents(p, t.lambda()[i]));
      }
      gens.push_back(std::move(f));
      ini_power.push_back(std::move(e));
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      pick.push_back(i);
      rec(i);
      pick.pop_back();
    }
  };
  rec(0);
  GroebnerResult gb = groebner_basis(gens, TermOrder::x_lex(), budget);
  if (gb.status != Verdict::yes) return gb.status;
  std::vector<Exponents> ini;
  for (const auto& g : gb.basis) ini.push_back(leading_term(g, TermOrder::x_lex()).monomial);
  return minimal_monomial_generators(ini) == minimal_monomial_generators(ini_power) ? Verdict::yes : Verdict::no;
}

}  // namespace hankel
