#include "hankel/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& b, const Exponents& a) {
  Exponents out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a[i] > b[i]) throw std::invalid_argument("monomial quotient is not a monomial");
    out[i] = static_cast<std::uint16_t>(b[i] - a[i]);
  }
  return out;
}

Exponents product(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return out;
}

int degree(const Exponents& a) {
  int s = 0;
  for (auto e : a) s += e;
  return s;
}

TermOrder TermOrder::x_lex() { return TermOrder{}; }

TermOrder TermOrder::y_induced(std::vector<std::size_t> precedence) {
  TermOrder o;
  o.kind_ = Kind::y_induced;
  o.precedence_ = std::move(precedence);
  return o;
}

TermOrder TermOrder::rees(std::size_t n_x) {
  TermOrder o;
  o.kind_ = Kind::rees;
  o.n_x_ = n_x;
  return o;
}

std::strong_ordering TermOrder::compare(const Exponents& a, const Exponents& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("exponent vectors over different universes");
  switch (kind_) {
    case Kind::x_lex:
      return a <=> b;
    case Kind::y_induced: {
      if (precedence_.size() != a.size()) throw std::invalid_argument("variable precedence does not cover the universe");
      int da = degree(a), db = degree(b);
      if (da != db) return da <=> db;
      for (std::size_t v : precedence_)
        if (a[v] != b[v]) return a[v] <=> b[v];
      return std::strong_ordering::equal;
    }
    case Kind::rees: {
      if (a.size() != n_x_ + 1) throw std::invalid_argument("Rees order needs the x-variables plus t");
      if (a[n_x_] != b[n_x_]) return a[n_x_] <=> b[n_x_];
      for (std::size_t i = 0; i < n_x_; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(std::size_t n_vars, const Rational& c) {
  Polynomial p(n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n_vars, std::size_t slot, const Rational& c) {
  if (slot >= n_vars) throw std::out_of_range("variable slot out of range");
  Exponents e(n_vars, 0);
  e[slot] = 1;
  Polynomial p(n_vars);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::monomial(Exponents e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void Polynomial::check(const Exponents& e) const {
  if (e.size() != n_) throw std::invalid_argument("exponent vector over a different universe");
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  check(e);
  if (hankel::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (hankel::is_zero(it->second)) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int m = -1;
  for (const auto& [e, c] : terms_) m = std::max(m, degree(e));
  return m;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    if (d >= 0 && degree(e) != d) return false;
    d = degree(e);
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("polynomials over different universes");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("polynomials over different universes");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.n_ != n_) throw std::invalid_argument("polynomials over different universes");
  Polynomial p(n_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) p.add_term(product(ea, eb), ca * cb);
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial p(n_);
  if (hankel::is_zero(c)) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
  return p;
}

Polynomial Polynomial::times_monomial(const Exponents& m, const Rational& c) const {
  check(m);
  Polynomial p(n_);
  if (hankel::is_zero(c)) return p;
  for (const auto& [e, v] : terms_) p.terms_.emplace(product(e, m), v * c);
  return p;
}

void Polynomial::sub_multiple(const Polynomial& o, const Exponents& m, const Rational& c) {
  check(m);
  for (const auto& [e, v] : o.terms_) add_term(product(e, m), -(v * c));
}

std::string Polynomial::to_string(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty()) return "0";
  std::string s;
  // Highest x-lex term first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += '*';
      mono += name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += hankel::to_string(a);
    } else {
      if (a != 1) s += hankel::to_string(a) + "*";
      s += mono;
    }
  }
  return s;
}

Term leading_term(const Polynomial& f, const TermOrder& ord) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  if (ord.kind() == TermOrder::Kind::x_lex) {
    const auto& last = *f.terms().rbegin();
    return {last.first, last.second};
  }
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ord.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

}  // namespace hankel
