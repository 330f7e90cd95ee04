#include "hankel/straightening.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

namespace {

std::pair<std::vector<int>, std::vector<int>> split_merged(std::vector<int> merged) {
  std::sort(merged.begin(), merged.end());
  std::vector<int> odd, even;
  for (std::size_t i = 0; i < merged.size(); ++i) (i % 2 == 0 ? odd : even).push_back(merged[i]);
  return {odd, even};
}

}  // namespace

std::pair<XMonomial, XMonomial> sort_pair(const XMonomial& u, const XMonomial& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("sort_pair needs monomials of equal degree");
  if (u.n_vars() != v.n_vars()) throw std::invalid_argument("monomials over different rings");
  std::vector<int> merged = u.indices();
  for (int i : v.indices()) merged.push_back(i);
  auto [odd, even] = split_merged(std::move(merged));
  return {XMonomial::from_indices(u.n_vars(), odd), XMonomial::from_indices(u.n_vars(), even)};
}

bool is_sorted(const XMonomial& u, const XMonomial& v) {
  auto s = sort_pair(u, v);
  return s.first == u && s.second == v;
}

std::pair<DiagonalIndex, DiagonalIndex> sort_indices(const DiagonalIndex& a, const DiagonalIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sort needs indices of equal length");
  std::vector<int> merged(a.entries().begin(), a.entries().end());
  merged.insert(merged.end(), b.entries().begin(), b.entries().end());
  auto [odd, even] = split_merged(std::move(merged));
  return {DiagonalIndex(std::move(odd)), DiagonalIndex(std::move(even))};
}

bool is_sorted_pair(const DiagonalIndex& a, const DiagonalIndex& b) {
  auto s = sort_indices(a, b);
  return s.first == a && s.second == b;
}

bool verify_sortability(const ScrollParams& p) {
  const auto lambda = enumerate_lambda(p);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i; j < lambda.size(); ++j) {
      auto [u, v] = sort_indices(lambda[i], lambda[j]);
      if (!in_lambda(p, u) || !in_lambda(p, v)) return false;
    }
  return true;
}

StraighteningExpansion straighten(const MinorTable& minors, const DiagonalIndex& alpha, const DiagonalIndex& beta) {
  const ScrollParams& p = minors.params();
  if (!in_lambda(p, alpha) || !in_lambda(p, beta)) throw std::invalid_argument("straighten needs indices in Lambda");
  StraighteningExpansion out{alpha, beta, {}};
  Polynomial f = minors(alpha) * minors(beta);
  const std::size_t guard = 100000;
  while (!f.is_zero()) {
    if (out.terms.size() > guard) throw std::logic_error("straightening did not terminate");
    const auto& [mono, mu] = *f.terms().rbegin();
    std::vector<int> merged;
    for (std::size_t i = 0; i < mono.size(); ++i)
      for (int k = 0; k < mono[i]; ++k) merged.push_back(static_cast<int>(i) + 1);
    if (merged.size() != 2 * static_cast<std::size_t>(p.r()))
      throw std::logic_error("initial term of a product of two minors has the wrong degree");
    auto [odd, even] = split_merged(std::move(merged));
    DiagonalIndex a(std::move(odd)), b(std::move(even));
    if (!in_lambda(p, a) || !in_lambda(p, b))
      throw std::logic_error("initial monomial " + a.to_string() + "|" + b.to_string() + " is not a product of two chains");
    Rational c = mu;
    out.terms.push_back({c, a, b});
    f -= (minors(a) * minors(b)).scaled(c);
  }
  return out;
}

ExpansionCheck check_expansion(const MinorTable& minors, const StraighteningExpansion& e) {
  const ScrollParams& p = minors.params();
  ExpansionCheck chk;
  Polynomial lhs = minors(e.alpha) * minors(e.beta);
  Polynomial rhs(lhs.n_vars());
  chk.all_sorted = true;
  chk.decreasing = !e.terms.empty();
  Exponents prev;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const auto& t = e.terms[i];
    if (!in_lambda(p, t.alpha) || !in_lambda(p, t.beta) || !is_sorted_pair(t.alpha, t.beta)) chk.all_sorted = false;
    Polynomial prod = minors(t.alpha) * minors(t.beta);
    rhs += prod.scaled(t.mu);
    Exponents ini = leading_term(prod, TermOrder::x_lex()).monomial;
    if (i == 0) {
      if (ini != leading_term(lhs, TermOrder::x_lex()).monomial) chk.decreasing = false;
    } else if (!(TermOrder::x_lex().compare(ini, prev) < 0)) {
      chk.decreasing = false;
    }
    prev = ini;
  }
  chk.identity = (lhs == rhs);
  return chk;
}

}  // namespace hankel
