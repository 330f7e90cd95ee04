#include "hankel/equations.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "hankel/straightening.hpp"

namespace hankel {

VariableLayout::VariableLayout(const ScrollParams& p, bool with_x)
    : p_(p), n_x_(with_x ? static_cast<std::size_t>(p.n_vars()) : 0), lambda_(enumerate_lambda(p)) {
  for (std::size_t i = 0; i < lambda_.size(); ++i) pos_.emplace(lambda_[i], n_x_ + i);
}

VariableLayout VariableLayout::fiber(const ScrollParams& p) { return VariableLayout(p, false); }
VariableLayout VariableLayout::rees(const ScrollParams& p) { return VariableLayout(p, true); }

std::size_t VariableLayout::x_slot(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > n_x_) throw std::out_of_range("no x-variable " + std::to_string(i) + " in layout");
  return static_cast<std::size_t>(i - 1);
}

std::size_t VariableLayout::y_slot(const DiagonalIndex& a) const {
  auto it = pos_.find(a);
  if (it == pos_.end()) throw std::out_of_range("no Y-variable " + a.to_string() + " in layout");
  return it->second;
}

std::string VariableLayout::name(std::size_t slot) const {
  return is_x(slot) ? x_name(x_index(slot)) : y_name(y_index(slot));
}

namespace {

std::vector<std::size_t> y_precedence(const std::vector<DiagonalIndex>& lambda, OrderKind kind) {
  std::vector<std::size_t> order(lambda.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_y(kind, lambda[a], lambda[b]) > 0;
  });
  return order;
}

}  // namespace

std::vector<FiberRelation> fiber_relation_data(const MinorTable& minors, OrderKind kind) {
  const ScrollParams& p = minors.params();
  const VariableLayout layout = VariableLayout::fiber(p);
  const auto& lambda = minors.lambda();
  std::vector<FiberRelation> out;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      // Canonical order is lex on tuples, so x_{lambda[i]} >lex x_{lambda[j]}.
      if (is_sorted_pair(lambda[i], lambda[j]) || is_sorted_pair(lambda[j], lambda[i])) continue;
      StraighteningExpansion e = straighten(minors, lambda[i], lambda[j]);
      Exponents q(layout.size(), 0);
      ++q[layout.y_slot(lambda[i])];
      ++q[layout.y_slot(lambda[j])];
      Polynomial rel = Polynomial::monomial(q, 1);
      for (const auto& t : e.terms) {
        Exponents m(layout.size(), 0);
        ++m[layout.y_slot(t.alpha)];
        ++m[layout.y_slot(t.beta)];
        rel.add_term(m, -t.mu);
      }
      out.push_back({lambda[i], lambda[j], std::move(rel)});
    }
  }
  const TermOrder ord = TermOrder::y_induced(y_precedence(lambda, kind));
  std::stable_sort(out.begin(), out.end(), [&](const FiberRelation& a, const FiberRelation& b) {
    Exponents qa(layout.size(), 0), qb(layout.size(), 0);
    ++qa[layout.y_slot(a.alpha)];
    ++qa[layout.y_slot(a.beta)];
    ++qb[layout.y_slot(b.alpha)];
    ++qb[layout.y_slot(b.beta)];
    return ord.compare(qa, qb) > 0;
  });
  return out;
}

std::vector<Polynomial> fiber_relations(const MinorTable& minors, OrderKind kind) {
  std::vector<Polynomial> out;
  for (auto& r : fiber_relation_data(minors, kind)) out.push_back(std::move(r.poly));
  return out;
}

std::vector<ReesSyzygy> rees_syzygies(const ScrollParams& p) {
  const VariableLayout layout = VariableLayout::rees(p);
  const int r = p.r(), d = p.d();
  std::vector<ReesSyzygy> out;
  std::set<Polynomial::TermMap> seen;
  if (p.c() < r + 1) return out;
  std::vector<int> cols(static_cast<std::size_t>(r + 1));
  for (int i = 0; i <= r; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    for (int k = 1; k <= r; ++k) {
      Polynomial rel(layout.size());
      for (int j = 1; j <= r + 1; ++j) {
        std::vector<int> rest;
        for (int t = 1; t <= r + 1; ++t)
          if (t != j) rest.push_back(cols[static_cast<std::size_t>(t - 1)]);
        Exponents e(layout.size(), 0);
        ++e[layout.x_slot(cols[static_cast<std::size_t>(j - 1)] + (k - 1) * d)];
        ++e[layout.y_slot(from_columns(p, rest))];
        rel.add_term(e, (j % 2 == 1) ? 1 : -1);
      }
      Polynomial key = rel;
      if (sgn(key.terms().begin()->second) < 0) key = -key;
      if (seen.insert(key.terms()).second) out.push_back({cols, k, std::move(rel)});
    }
    int i = r;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == p.c() - (r - i)) --i;
    if (i < 0) break;
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j <= r; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<Polynomial> rees_syzygy_relations(const ScrollParams& p) {
  std::vector<Polynomial> out;
  for (auto& s : rees_syzygies(p)) out.push_back(std::move(s.poly));
  return out;
}

bool rees_leading_pattern(const ScrollParams& p, const ReesSyzygy& s) {
  const int r = p.r(), d = p.d(), k = s.k;
  const std::size_t n = static_cast<std::size_t>(p.n_vars());
  // Diagonal of the (r+1)x(r+1) matrix with row k repeated.
  Exponents diag(n + 1, 0);
  for (int i = 1; i <= r + 1; ++i) {
    int row = i <= k ? i : i - 1;
    ++diag[static_cast<std::size_t>(s.columns[static_cast<std::size_t>(i - 1)] + (row - 1) * d - 1)];
  }
  diag[n] = 1;
  const TermOrder ord = TermOrder::rees(n);
  std::vector<Exponents> images;
  for (int j = 1; j <= r + 1; ++j) {
    std::vector<int> rest;
    for (int t = 1; t <= r + 1; ++t)
      if (t != j) rest.push_back(s.columns[static_cast<std::size_t>(t - 1)]);
    Exponents e = x_exponents(p, from_columns(p, rest));
    e.push_back(1);
    ++e[static_cast<std::size_t>(s.columns[static_cast<std::size_t>(j - 1)] + (k - 1) * d - 1)];
    images.push_back(std::move(e));
  }
  Exponents best = images[0];
  for (const auto& e : images)
    if (ord.compare(e, best) > 0) best = e;
  if (best != diag) return false;
  for (int j = 1; j <= r + 1; ++j) {
    bool top = images[static_cast<std::size_t>(j - 1)] == best;
    if (top != (j == k || j == k + 1)) return false;
  }
  return true;
}

bool verify_relation_vanishes(const MinorTable& minors, const VariableLayout& layout, const Polynomial& rel) {
  if (rel.n_vars() != layout.size()) throw std::invalid_argument("relation is not over the given layout");
  const std::size_t n = static_cast<std::size_t>(minors.params().n_vars());
  Polynomial total(n);
  for (const auto& [e, c] : rel.terms()) {
    Exponents xs(n, 0);
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t slot = 0; slot < e.size(); ++slot) {
      if (!e[slot]) continue;
      if (layout.is_x(slot)) {
        xs[slot] = e[slot];
      } else {
        const Polynomial& m = minors(layout.y_index(slot));
        for (int t = 0; t < e[slot]; ++t) term = term * m;
      }
    }
    total += term.times_monomial(xs, 1);
  }
  return total.is_zero();
}

Verdict hilbert_consistency(const ScrollParams& p, int max_degree, std::size_t budget) {
  const auto lambda = enumerate_lambda(p);
  const std::size_t m = lambda.size();
  std::vector<std::vector<char>> sorted(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      sorted[i][j] = (i == j) || is_sorted_pair(lambda[i], lambda[j]) || is_sorted_pair(lambda[j], lambda[i]);

  std::set<Exponents> products{Exponents(static_cast<std::size_t>(p.n_vars()), 0)};
  std::size_t work = 0;
  for (int k = 1; k <= max_degree; ++k) {
    std::set<Exponents> next;
    for (const auto& s : products)
      for (const auto& a : lambda) {
        next.insert(product(s, x_exponents(p, a)));
        if (++work > budget) return Verdict::budget_exceeded;
      }
    products = std::move(next);

    std::size_t standard = 0;
    std::vector<std::size_t> pick;
    bool over = false;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      if (over) return;
      if (pick.size() == static_cast<std::size_t>(k)) {
        ++standard;
        return;
      }
      for (std::size_t i = from; i < m; ++i) {
        bool ok = true;
        for (std::size_t j : pick)
          if (!sorted[j][i]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        if (++work > budget) {
          over = true;
          return;
        }
        pick.push_back(i);
        rec(i);
        pick.pop_back();
      }
    };
    rec(0);
    if (over) return Verdict::budget_exceeded;
    if (standard != products.size()) return Verdict::no;
  }
  return Verdict::yes;
}

}  // namespace hankel
