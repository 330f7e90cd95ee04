#include "hankel/determinant.hpp"

#include <stdexcept>

namespace hankel {

namespace {

Polynomial expand(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.size();
  const std::size_t nv = m[0][0].n_vars();
  if (row == n) return Polynomial::constant(nv, 1);
  Polynomial out(nv);
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::size_t col = cols[k];
    const Polynomial& entry = m[row][col];
    if (!entry.is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      Polynomial minor = expand(m, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
      Polynomial t = entry * minor;
      if (sign > 0) out += t;
      else out -= t;
    }
    sign = -sign;
  }
  return out;
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.empty()) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("determinant needs a square matrix");
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return expand(m, cols, 0);
}

}  // namespace hankel
