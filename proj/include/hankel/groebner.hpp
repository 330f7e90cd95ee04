#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/polynomial.hpp"

namespace hankel {

struct GroebnerBudget {
  std::size_t max_terms = 50000;   // per intermediate polynomial
  std::size_t max_pairs = 200000;  // S-pairs examined
  std::size_t max_basis = 2000;    // basis elements during completion
};

// Normal form; always divides by the first basis element whose leading monomial divides.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& ord,
                  std::size_t max_terms = static_cast<std::size_t>(-1));
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord);

Verdict buchberger_verify(std::span<const Polynomial> gens, const TermOrder& ord, const GroebnerBudget& budget = {});

struct GroebnerResult {
  Verdict status = Verdict::yes;
  std::vector<Polynomial> basis;
};
// Buchberger completion with the pair queue ordered by lcm degree.
GroebnerResult groebner_basis(std::vector<Polynomial> gens, const TermOrder& ord, const GroebnerBudget& budget = {});

std::vector<Exponents> minimal_monomial_generators(std::vector<Exponents> gens);

}  // namespace hankel
