#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hankel/clique.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/scroll.hpp"

namespace testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

// Cases of the acceptance grid: r in {2,3}, d in {1,2}, r <= c <= r+7, at most 40 Y-variables.
inline std::vector<hankel::ScrollParams> desk_grid(std::size_t max_minors = 40) {
  std::vector<hankel::ScrollParams> out;
  for (int r = 2; r <= 3; ++r)
    for (int d = 1; d <= 2; ++d)
      for (int c = r; c <= r + 7; ++c) {
        hankel::ScrollParams p(r, c, d);
        if (p.big_n() <= max_minors) out.push_back(p);
      }
  return out;
}

inline hankel::Polynomial random_poly(Rng& g, std::size_t n, int terms, int max_exp) {
  hankel::Polynomial f(n);
  for (int t = 0; t < terms; ++t) {
    hankel::Exponents e(n, 0);
    for (auto& x : e) x = static_cast<std::uint16_t>(uniform(g, 0, max_exp));
    f.add_term(e, hankel::ratio(uniform(g, -9, 9), uniform(g, 1, 4)));
  }
  return f;
}

// Squarefree monomials on n variables, none dividing another.
inline std::vector<hankel::VertexSet> random_antichain(Rng& g, std::size_t n, int count, int min_deg, int max_deg) {
  std::vector<hankel::VertexSet> out;
  for (int tries = 0; tries < 200 && static_cast<int>(out.size()) < count; ++tries) {
    hankel::VertexSet s;
    int deg = std::min(uniform(g, min_deg, max_deg), static_cast<int>(n));
    while (s.size() < deg) s.insert(static_cast<std::size_t>(uniform(g, 0, static_cast<int>(n) - 1)));
    bool ok = true;
    for (auto t : out)
      if (t.subset_of(s) || s.subset_of(t)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace testing
