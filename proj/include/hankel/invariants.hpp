#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hankel/clique.hpp"
#include "hankel/complex.hpp"
#include "hankel/groebner.hpp"
#include "hankel/scroll.hpp"

namespace hankel {

int formula_dim(const ScrollParams& p);
int formula_reg(const ScrollParams& p);
// Throws std::logic_error if it disagrees with formula_reg - formula_dim.
int formula_a_invariant(const ScrollParams& p);
int formula_reduction_number(const ScrollParams& p);
bool gorenstein_formula(const ScrollParams& p);

// Rank over Q of the exponent matrix of the x_alpha.
int bruteforce_dim(const ScrollParams& p);

// h-vector of the clique complex of the sorted graph. S/in(P) is its Stanley-Reisner ring, so this is also
// the h-vector of the toric fiber ring.
std::vector<long long> toric_h_vector(const ScrollParams& p, std::size_t budget = 50000000);
// The toric ring is a Cohen-Macaulay domain, so it is Gorenstein iff its h-vector is symmetric.
bool gorenstein_hvector(const ScrollParams& p, std::size_t budget = 50000000);

enum class Field { rational, modp };
Field parse_field(const std::string& s);
const char* to_string(Field f);

// pd of the minimized dual resolution. Throws BudgetExceeded past max_cliques.
int bruteforce_reg(const ScrollParams& p, OrderKind kind, std::size_t max_cliques = 500, Field field = Field::rational);
// Top total Betti number of the minimized dual resolution.
long long cm_type_bruteforce(const ScrollParams& p, std::size_t max_cliques = 500, Field field = Field::rational);

enum class CheckStatus { pass, fail, skipped };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::skipped;
  std::string detail;
};

struct ValidateOptions {
  bool brute = true;       // dimension, pd, CM type, colon and Betti oracles
  bool structural = true;  // Groebner, sortability, straightening, equations, F0
  std::size_t max_vars = 40;
  std::size_t max_cliques = 500;
  std::size_t max_groebner_minors = 20;
  std::size_t straightening_samples = 50;
  std::size_t taylor_bound = 18;
  int hilbert_degree = 3;
  std::uint64_t seed = 1;
  Field field = Field::rational;
  bool parallel = true;
  GroebnerBudget groebner;
};

struct InvariantReport {
  ScrollParams params{2, 2, 1};
  ScrollParams reduced{2, 2, 1};
  Regime regime = Regime::principal;
  int n_vars = 0;
  std::size_t n_minors = 0;
  Field field = Field::rational;

  int dim_formula = 0;
  std::optional<int> dim_bruteforce;
  int reg_formula = 0;
  std::optional<int> reg_bruteforce;
  int a_invariant = 0;
  int reduction_number = 0;
  bool gorenstein_formula = false;
  std::optional<long long> cm_type_bruteforce;
  std::optional<std::vector<long long>> h_vector;
  std::optional<int> ell_lex, ell_revlex;
  std::optional<int> pd_lex, pd_revlex;
  std::optional<std::size_t> clique_count;
  std::optional<BettiTable> betti;  // revlex route
  int generation_degree = 0;

  std::vector<CheckResult> checks;

  bool hard_failure() const;
  bool budget_partial() const;
  const CheckResult* find(const std::string& name) const;
};

InvariantReport cross_validate(const ScrollParams& p, const ValidateOptions& opt = {});

}  // namespace hankel
