#pragma once

#include <string>

#include <json.hpp>

#include "hankel/clique.hpp"
#include "hankel/complex.hpp"
#include "hankel/invariants.hpp"

namespace hankel {

using Json = nlohmann::ordered_json;

inline constexpr const char* artifact_version = "1.1.0";

Json params_json(const ScrollParams& p);
Json to_json(const InvariantReport& rep);
std::string to_text(const InvariantReport& rep);

Json betti_json(const BettiTable& t);
// One row per homological degree i, one column per j - i.
std::string betti_csv(const BettiTable& t);
std::string betti_text(const BettiTable& t);

enum class EquationSet { fiber, rees };
EquationSet parse_equation_set(const std::string& s);

// Relations as strings plus the "verified_vanishing" stamp. Throws BudgetExceeded past max_vars Y-variables.
Json equations_json(const ScrollParams& p, EquationSet which, OrderKind kind, std::size_t max_vars = 40);

// Members, moving sequence, corners, tail, colon generators, codimension and essential part per clique.
Json cliques_json(const SortedGraph& g, OrderKind kind, std::size_t max_cliques = 500);

}  // namespace hankel
