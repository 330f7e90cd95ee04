#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hankel/rational.hpp"

namespace hankel {

using Exponents = std::vector<std::uint16_t>;

bool divides(const Exponents& a, const Exponents& b);
Exponents lcm(const Exponents& a, const Exponents& b);
Exponents quotient(const Exponents& b, const Exponents& a);  // b / a, requires a | b
Exponents product(const Exponents& a, const Exponents& b);
int degree(const Exponents& a);

class TermOrder {
 public:
  enum class Kind { x_lex, y_induced, rees };

  // Lex with x_1 > x_2 > ...
  static TermOrder x_lex();
  // Degree first, then lex where variable precedence[0] is the largest.
  static TermOrder y_induced(std::vector<std::size_t> precedence);
  // Universe x_1..x_n, t (slot n): t-degree first, then x-lex.
  static TermOrder rees(std::size_t n_x);

  Kind kind() const { return kind_; }
  std::strong_ordering compare(const Exponents& a, const Exponents& b) const;

 private:
  Kind kind_ = Kind::x_lex;
  std::vector<std::size_t> precedence_;
  std::size_t n_x_ = 0;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(std::size_t n_vars = 0) : n_(n_vars) {}
  static Polynomial constant(std::size_t n_vars, const Rational& c);
  static Polynomial variable(std::size_t n_vars, std::size_t slot, const Rational& c = 1);
  static Polynomial monomial(Exponents e, const Rational& c);

  std::size_t n_vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Rational& c);
  int total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Exponents& e, const Rational& c) const;
  // this - c * m * o, in place
  void sub_multiple(const Polynomial& o, const Exponents& m, const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  std::string to_string(const std::function<std::string(std::size_t)>& name) const;

 private:
  void check(const Exponents& e) const;

  std::size_t n_;
  TermMap terms_;
};

struct Term {
  Exponents monomial;
  Rational coeff;
};

Term leading_term(const Polynomial& f, const TermOrder& ord);

}  // namespace hankel
