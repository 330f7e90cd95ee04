#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hankel {

// r x c extended Hankel matrix with leap d over the variables x_1..x_N.
class ScrollParams {
 public:
  ScrollParams(int r, int c, int d);

  int r() const { return r_; }
  int c() const { return c_; }
  int d() const { return d_; }
  int n_vars() const { return c_ + (r_ - 1) * d_; }
  std::size_t big_n() const;

  std::string to_string() const;
  friend bool operator==(const ScrollParams&, const ScrollParams&) = default;
  friend auto operator<=>(const ScrollParams&, const ScrollParams&) = default;

 private:
  int r_, c_, d_;
};

std::size_t binomial(int n, int k);

// Main diagonal (alpha_1 < ... < alpha_r) of a maximal minor. Entries are 1-based.
class DiagonalIndex {
 public:
  DiagonalIndex() = default;
  explicit DiagonalIndex(std::vector<int> entries);

  std::span<const int> entries() const { return e_; }
  std::size_t size() const { return e_.size(); }
  // 0-based access; entry j of the tuple is (*this)[j-1].
  int operator[](std::size_t i) const { return e_[i]; }
  std::vector<int> columns(int d) const;
  std::string to_string() const;

  friend bool operator==(const DiagonalIndex&, const DiagonalIndex&) = default;
  friend auto operator<=>(const DiagonalIndex&, const DiagonalIndex&) = default;

 private:
  std::vector<int> e_;
};

bool is_d_chain(std::span<const int> tuple, int d);
bool in_lambda(const ScrollParams& p, const DiagonalIndex& a);
DiagonalIndex from_columns(const ScrollParams& p, std::span<const int> columns);

// Lex order on entry tuples, length binomial(c, r).
std::vector<DiagonalIndex> enumerate_lambda(const ScrollParams& p);

// Y_{1, 2+d, ..., r+(r-1)d}
DiagonalIndex first_variable(const ScrollParams& p);
DiagonalIndex last_variable(const ScrollParams& p);

enum class OrderKind { lex, revlex };
const char* to_string(OrderKind k);
OrderKind parse_order_kind(const std::string& s);

class XMonomial {
 public:
  explicit XMonomial(int n_vars = 0) : exp_(static_cast<std::size_t>(n_vars), 0) {}
  static XMonomial from_indices(int n_vars, std::span<const int> indices);
  static XMonomial of(int n_vars, const DiagonalIndex& a) { return from_indices(n_vars, a.entries()); }

  int n_vars() const { return static_cast<int>(exp_.size()); }
  int exponent(int i) const { return exp_.at(static_cast<std::size_t>(i - 1)); }
  void set_exponent(int i, int e) { exp_.at(static_cast<std::size_t>(i - 1)) = e; }
  int degree() const;
  // Indices listed with multiplicity, increasing.
  std::vector<int> indices() const;
  XMonomial operator*(const XMonomial& o) const;
  std::string to_string() const;

  friend bool operator==(const XMonomial&, const XMonomial&) = default;

 private:
  std::vector<int> exp_;
};

std::strong_ordering compare_x(OrderKind kind, const XMonomial& u, const XMonomial& v);
std::strong_ordering compare_y(OrderKind kind, const DiagonalIndex& a, const DiagonalIndex& b);

class YMonomial {
 public:
  YMonomial() = default;
  void multiply(const DiagonalIndex& a, int e = 1);
  int exponent(const DiagonalIndex& a) const;
  int degree() const;
  const std::map<DiagonalIndex, int>& exponents() const { return exp_; }
  std::string to_string() const;

  friend bool operator==(const YMonomial&, const YMonomial&) = default;

 private:
  std::map<DiagonalIndex, int> exp_;
};

std::string y_name(const DiagonalIndex& a);
std::string x_name(int i);

}  // namespace hankel
