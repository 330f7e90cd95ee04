#include "hankel/report_io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "hankel/colon.hpp"
#include "hankel/equations.hpp"
#include "hankel/hankel_ideal.hpp"

namespace hankel {

namespace {

Json opt_json(const std::optional<int>& v) { return v ? Json(*v) : Json("skipped: budget"); }
Json opt_json(const std::optional<long long>& v) { return v ? Json(*v) : Json("skipped: budget"); }

Json names(const SortedGraph& g, VertexSet s) {
  Json out = Json::array();
  for (std::size_t v : s.elements()) out.push_back(y_name(g.vertex(v)));
  return out;
}

Json names(std::span<const DiagonalIndex> xs) {
  Json out = Json::array();
  for (const auto& a : xs) out.push_back(y_name(a));
  return out;
}

std::string monomial_name(const SortedGraph& g, VertexSet s) {
  std::string out;
  for (std::size_t v : s.elements()) {
    if (!out.empty()) out += "*";
    out += y_name(g.vertex(v));
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Json params_json(const ScrollParams& p) { return Json{{"r", p.r()}, {"c", p.c()}, {"d", p.d()}}; }

Json betti_json(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [k, v] : t.entries()) entries.push_back(Json{{"i", k.first}, {"j", k.second}, {"beta", v}});
  return Json{{"pd", t.pd()}, {"reg", t.reg()}, {"top_betti", t.top_betti()}, {"entries", entries}};
}

std::string betti_csv(const BettiTable& t) {
  std::ostringstream out;
  out << "i";
  if (t.empty()) return "i\n";
  int smin = 1 << 30, smax = -(1 << 30);
  for (const auto& [k, v] : t.entries()) {
    smin = std::min(smin, k.second - k.first);
    smax = std::max(smax, k.second - k.first);
  }
  for (int s = smin; s <= smax; ++s) out << "," << s;
  out << '\n';
  for (int i = 0; i <= t.pd(); ++i) {
    out << i;
    for (int s = smin; s <= smax; ++s) out << ',' << t.get(i, i + s);
    out << '\n';
  }
  return out.str();
}

std::string betti_text(const BettiTable& t) {
  if (t.empty()) return "(zero ideal)\n";
  int jmin = 1 << 30, jmax = -(1 << 30);
  for (const auto& [k, v] : t.entries()) {
    jmin = std::min(jmin, k.second - k.first);
    jmax = std::max(jmax, k.second - k.first);
  }
  std::ostringstream out;
  out << "      ";
  for (int i = 0; i <= t.pd(); ++i) out << std::setw(7) << i;
  out << '\n';
  for (int s = jmin; s <= jmax; ++s) {
    out << std::setw(4) << s << ": ";
    for (int i = 0; i <= t.pd(); ++i) {
      long long v = t.get(i, i + s);
      if (v == 0)
        out << std::setw(7) << '.';
      else
        out << std::setw(7) << v;
    }
    out << '\n';
  }
  out << "total:";
  for (int i = 0; i <= t.pd(); ++i) out << std::setw(7) << t.total(i);
  out << '\n';
  return out.str();
}

Json to_json(const InvariantReport& rep) {
  Json j;
  j["version"] = artifact_version;
  j["params"] = params_json(rep.params);
  j["reduced_params"] = params_json(rep.reduced);
  j["regime"] = to_string(rep.regime);
  j["n_vars"] = rep.n_vars;
  j["n_minors"] = rep.n_minors;
  j["field"] = rep.field == Field::rational ? "rational" : "modp (probabilistic)";
  j["dim_formula"] = rep.dim_formula;
  j["dim_bruteforce"] = opt_json(rep.dim_bruteforce);
  j["reg_formula"] = rep.reg_formula;
  j["reg_bruteforce"] = opt_json(rep.reg_bruteforce);
  j["a_invariant"] = rep.a_invariant;
  j["reduction_number"] = rep.reduction_number;
  j["gorenstein_formula"] = rep.gorenstein_formula;
  j["cm_type_bruteforce"] = opt_json(rep.cm_type_bruteforce);
  j["h_vector"] = rep.h_vector ? Json(*rep.h_vector) : Json();
  j["upper_bounds"] = Json{{"lex", opt_json(rep.ell_lex)}, {"revlex", opt_json(rep.ell_revlex)}};
  j["pd"] = Json{{"lex", opt_json(rep.pd_lex)}, {"revlex", opt_json(rep.pd_revlex)}};
  if (rep.clique_count) j["clique_count"] = *rep.clique_count;
  if (rep.betti) {
    j["generation_degree"] = rep.generation_degree;
    j["dual_betti"] = betti_json(*rep.betti);
  }
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j["verification_status"] = checks;
  j["hard_failure"] = rep.hard_failure();
  return j;
}

std::string to_text(const InvariantReport& rep) {
  std::ostringstream out;
  auto show = [&](const auto& v) -> std::string {
    if (!v) return "skipped";
    return std::to_string(*v);
  };
  out << "params            " << rep.params.to_string();
  if (!(rep.reduced == rep.params)) out << " (reduced " << rep.reduced.to_string() << ")";
  out << "\nregime            " << to_string(rep.regime) << "\n";
  out << "N, Y-variables    " << rep.n_vars << ", " << rep.n_minors << "\n";
  out << "dim               " << rep.dim_formula << " (bruteforce " << show(rep.dim_bruteforce) << ")\n";
  out << "reg               " << rep.reg_formula << " (bruteforce " << show(rep.reg_bruteforce) << ")\n";
  out << "a-invariant       " << rep.a_invariant << "\n";
  out << "reduction number  " << rep.reduction_number << "\n";
  out << "Gorenstein        " << (rep.gorenstein_formula ? "true" : "false") << " (CM type "
      << show(rep.cm_type_bruteforce) << ")\n";
  if (rep.h_vector) {
    out << "toric h-vector   ";
    for (long long v : *rep.h_vector) out << " " << v;
    out << "\n";
  }
  out << "ell lex/revlex    " << show(rep.ell_lex) << " / " << show(rep.ell_revlex) << "\n";
  out << "pd lex/revlex     " << show(rep.pd_lex) << " / " << show(rep.pd_revlex) << "\n";
  if (rep.betti) out << "dual Betti table (row j-i, column i)\n" << betti_text(*rep.betti);
  for (const auto& c : rep.checks) {
    out << "  [" << to_string(c.status) << "] " << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

EquationSet parse_equation_set(const std::string& s) {
  if (s == "fiber") return EquationSet::fiber;
  if (s == "rees") return EquationSet::rees;
  throw std::invalid_argument("equation set must be fiber or rees, got '" + s + "'");
}

Json equations_json(const ScrollParams& p, EquationSet which, OrderKind kind, std::size_t max_vars) {
  if (p.big_n() > max_vars)
    throw BudgetExceeded(std::to_string(p.big_n()) + " Y-variables > " + std::to_string(max_vars));
  MinorTable minors(p);
  Json j;
  j["params"] = params_json(p);
  j["which"] = which == EquationSet::fiber ? "fiber" : "rees";
  j["order"] = to_string(kind);
  bool ok = true;
  Json fiber = Json::array();
  {
    auto layout = VariableLayout::fiber(p);
    for (const auto& rel : fiber_relation_data(minors, kind)) {
      ok = ok && verify_relation_vanishes(minors, layout, rel.poly);
      fiber.push_back(rel.poly.to_string([&](std::size_t s) { return layout.name(s); }));
    }
  }
  j["fiber_relations"] = fiber;
  if (which == EquationSet::rees) {
    auto layout = VariableLayout::rees(p);
    Json syz = Json::array();
    for (const auto& s : rees_syzygies(p)) {
      ok = ok && verify_relation_vanishes(minors, layout, s.poly);
      syz.push_back(s.poly.to_string([&](std::size_t slot) { return layout.name(slot); }));
    }
    j["rees_syzygies"] = syz;
  }
  j["verified_vanishing"] = ok;
  return j;
}

Json cliques_json(const SortedGraph& g, OrderKind kind, std::size_t max_cliques) {
  auto cliques = enumerate_maximal_cliques(g, kind, max_cliques);
  auto colons = all_colons(g, cliques, kind);
  Json list = Json::array();
  for (std::size_t t = 0; t < cliques.size(); ++t) {
    const auto& f = cliques[t];
    const auto& col = colons[t];
    Json e;
    e["position"] = t;
    e["members"] = names(f.members);
    e["moving"] = f.moving;
    e["corners"] = names(col.corners);
    if (col.tail) {
      e["tail"] = Json{{"monomial", monomial_name(g, col.tail->monomial)},
                       {"special_k", col.tail->special_k},
                       {"delta_k", col.tail->delta_k},
                       {"cancelled", col.tail_cancelled}};
    } else {
      e["tail"] = nullptr;
    }
    Json gens = Json::array();
    for (VertexSet s : col.minimal_generators) gens.push_back(monomial_name(g, s));
    e["colon_generators"] = gens;
    e["codim"] = col.codim;
    e["essential"] = names(g, col.essential);
    list.push_back(std::move(e));
  }
  int ell = 0;
  for (const auto& c : colons) ell = std::max(ell, c.codim);
  return Json{{"params", params_json(g.params())},
              {"order", to_string(kind)},
              {"count", cliques.size()},
              {"max_codim", ell},
              {"cliques", list}};
}

}  // namespace hankel
