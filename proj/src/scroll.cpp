#include "hankel/scroll.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

ScrollParams::ScrollParams(int r, int c, int d) : r_(r), c_(c), d_(d) {
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  if (d < 1) throw std::invalid_argument("d must be at least 1");
  if (c < r) throw std::invalid_argument("c must be at least r");
  if (c > 200 || r > 200 || d > 200) throw std::invalid_argument("parameters out of range");
}

std::size_t ScrollParams::big_n() const { return binomial(c_, r_); }

std::string ScrollParams::to_string() const {
  return "(" + std::to_string(r_) + "," + std::to_string(c_) + "," + std::to_string(d_) + ")";
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return out;
}

DiagonalIndex::DiagonalIndex(std::vector<int> entries) : e_(std::move(entries)) {
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] < 1) throw std::invalid_argument("diagonal index entries are 1-based");
    if (i > 0 && e_[i] <= e_[i - 1]) throw std::invalid_argument("diagonal index must be strictly increasing");
  }
}

std::vector<int> DiagonalIndex::columns(int d) const {
  std::vector<int> out(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) out[i] = e_[i] - static_cast<int>(i) * d;
  return out;
}

std::string DiagonalIndex::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e_[i]);
  }
  return s;
}

bool is_d_chain(std::span<const int> tuple, int d) {
  std::vector<int> t(tuple.begin(), tuple.end());
  std::sort(t.begin(), t.end());
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i - 1] + d >= t[i]) return false;
  return true;
}

bool in_lambda(const ScrollParams& p, const DiagonalIndex& a) {
  if (static_cast<int>(a.size()) != p.r()) return false;
  if (a[0] < 1 || a[a.size() - 1] > p.n_vars()) return false;
  return is_d_chain(a.entries(), p.d());
}

DiagonalIndex from_columns(const ScrollParams& p, std::span<const int> columns) {
  std::vector<int> e(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) e[i] = columns[i] + static_cast<int>(i) * p.d();
  DiagonalIndex out(std::move(e));
  if (!in_lambda(p, out)) throw std::invalid_argument("columns do not give a valid diagonal index");
  return out;
}

std::vector<DiagonalIndex> enumerate_lambda(const ScrollParams& p) {
  // Increasing column tuples in [1,c] in lex order map monotonically onto Lambda.
  std::vector<DiagonalIndex> out;
  out.reserve(p.big_n());
  const int r = p.r();
  std::vector<int> cols(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(from_columns(p, cols));
    int i = r - 1;
    while (i >= 0 && cols[static_cast<std::size_t>(i)] == p.c() - (r - 1 - i)) --i;
    if (i < 0) break;
    ++cols[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) cols[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

DiagonalIndex first_variable(const ScrollParams& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.r()));
  for (int i = 0; i < p.r(); ++i) cols[static_cast<std::size_t>(i)] = i + 1;
  return from_columns(p, cols);
}

DiagonalIndex last_variable(const ScrollParams& p) {
  std::vector<int> cols(static_cast<std::size_t>(p.r()));
  for (int i = 0; i < p.r(); ++i) cols[static_cast<std::size_t>(i)] = p.c() - p.r() + i + 1;
  return from_columns(p, cols);
}

const char* to_string(OrderKind k) { return k == OrderKind::lex ? "lex" : "revlex"; }

OrderKind parse_order_kind(const std::string& s) {
  if (s == "lex" || s == "lexType") return OrderKind::lex;
  if (s == "revlex" || s == "revlexType") return OrderKind::revlex;
  throw std::invalid_argument("unknown order kind: " + s);
}

XMonomial XMonomial::from_indices(int n_vars, std::span<const int> indices) {
  XMonomial m(n_vars);
  for (int i : indices) {
    if (i < 1 || i > n_vars) throw std::out_of_range("x-variable index out of range");
    ++m.exp_[static_cast<std::size_t>(i - 1)];
  }
  return m;
}

int XMonomial::degree() const {
  int s = 0;
  for (int e : exp_) s += e;
  return s;
}

std::vector<int> XMonomial::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < exp_.size(); ++i)
    for (int k = 0; k < exp_[i]; ++k) out.push_back(static_cast<int>(i) + 1);
  return out;
}

XMonomial XMonomial::operator*(const XMonomial& o) const {
  if (o.n_vars() != n_vars()) throw std::invalid_argument("monomials over different rings");
  XMonomial m(*this);
  for (std::size_t i = 0; i < exp_.size(); ++i) m.exp_[i] += o.exp_[i];
  return m;
}

std::string XMonomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (!exp_[i]) continue;
    if (!s.empty()) s += '*';
    s += x_name(static_cast<int>(i) + 1);
    if (exp_[i] > 1) s += "^" + std::to_string(exp_[i]);
  }
  return s.empty() ? "1" : s;
}

std::strong_ordering compare_x(OrderKind kind, const XMonomial& u, const XMonomial& v) {
  if (u.n_vars() != v.n_vars()) throw std::invalid_argument("monomials over different rings");
  const int n = u.n_vars();
  if (kind == OrderKind::lex) {
    for (int i = 1; i <= n; ++i)
      if (u.exponent(i) != v.exponent(i)) return u.exponent(i) <=> v.exponent(i);
    return std::strong_ordering::equal;
  }
  if (u.degree() != v.degree()) throw std::invalid_argument("revlex comparison needs equal degrees");
  for (int i = n; i >= 1; --i)
    if (u.exponent(i) != v.exponent(i)) return v.exponent(i) <=> u.exponent(i);
  return std::strong_ordering::equal;
}

std::strong_ordering compare_y(OrderKind kind, const DiagonalIndex& a, const DiagonalIndex& b) {
  int n = 0;
  for (int e : a.entries()) n = std::max(n, e);
  for (int e : b.entries()) n = std::max(n, e);
  return compare_x(kind, XMonomial::of(n, a), XMonomial::of(n, b));
}

void YMonomial::multiply(const DiagonalIndex& a, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e == 0) return;
  exp_[a] += e;
}

int YMonomial::exponent(const DiagonalIndex& a) const {
  auto it = exp_.find(a);
  return it == exp_.end() ? 0 : it->second;
}

int YMonomial::degree() const {
  int s = 0;
  for (const auto& [k, e] : exp_) s += e;
  return s;
}

std::string YMonomial::to_string() const {
  std::string s;
  for (const auto& [k, e] : exp_) {
    if (!s.empty()) s += '*';
    s += y_name(k);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

std::string y_name(const DiagonalIndex& a) { return "Y[" + a.to_string() + "]"; }
std::string x_name(int i) { return "x[" + std::to_string(i) + "]"; }

}  // namespace hankel
