#include "hankel/invariants.hpp"

#include <algorithm>
#include <future>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hankel/colon.hpp"
#include "hankel/equations.hpp"
#include "hankel/hankel_ideal.hpp"
#include "hankel/linalg.hpp"
#include "hankel/resolution.hpp"
#include "hankel/special_clique.hpp"
#include "hankel/straightening.hpp"

namespace hankel {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

int formula_dim(const ScrollParams& p) {
  const int r = p.r(), c = p.c(), d = p.d();
  if (r + d < c) return c + (r - 1) * d;
  if (r < c) return r * c - r * r + 1;
  return 1;
}

int formula_reg(const ScrollParams& p) {
  const int r = p.r(), c = p.c(), d = p.d(), n = p.n_vars();
  if (2 * r + d <= c) return n - 1 - floor_div(n - 1, r);
  if (r + d < c) return d * r - 2 * r - 3 * d + 2 * c - 2;
  if (r < c) return (r - 1) * (c - r - 1);
  return 0;
}

int formula_a_invariant(const ScrollParams& p) {
  const int r = p.r(), c = p.c(), d = p.d(), n = p.n_vars();
  int a;
  if (2 * r + d <= c)
    a = -1 - floor_div(n - 1, r);
  else if (r + d < c)
    a = c - 2 * r - 2 * d - 2;
  else if (r < c)
    a = -c;
  else
    a = -1;
  if (a != formula_reg(p) - formula_dim(p))
    throw std::logic_error("a-invariant branch disagrees with reg - dim at " + p.to_string());
  return a;
}

int formula_reduction_number(const ScrollParams& p) { return formula_reg(p); }

bool gorenstein_formula(const ScrollParams& p) {
  const ScrollParams q = reduced_params(p);
  const int r = q.r(), c = q.c(), d = q.d();
  return c == r || c == r + 1 || c == r + d || c == r + d + 1 || c == 2 * r + d;
}

int bruteforce_dim(const ScrollParams& p) {
  const auto lambda = enumerate_lambda(p);
  DenseMatrix<Rational> m(lambda.size(), static_cast<std::size_t>(p.n_vars()));
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int a : lambda[i].entries()) m(i, static_cast<std::size_t>(a - 1)) += 1;
  return static_cast<int>(rank(std::move(m)));
}

std::vector<long long> toric_h_vector(const ScrollParams& p, std::size_t budget) {
  const auto f = clique_f_vector(SortedGraph(p), budget);
  const int dim = static_cast<int>(f.size()) - 1;
  std::vector<long long> h(static_cast<std::size_t>(dim + 1), 0);
  for (int k = 0; k <= dim; ++k)
    for (int i = 0; i <= k; ++i) {
      long long term = static_cast<long long>(binomial(dim - i, k - i)) * f[static_cast<std::size_t>(i)];
      h[static_cast<std::size_t>(k)] += (k - i) % 2 ? -term : term;
    }
  while (h.size() > 1 && h.back() == 0) h.pop_back();
  return h;
}

bool gorenstein_hvector(const ScrollParams& p, std::size_t budget) {
  const auto h = toric_h_vector(p, budget);
  return std::equal(h.begin(), h.end(), h.rbegin());
}

Field parse_field(const std::string& s) {
  if (s == "rational" || s == "QQ") return Field::rational;
  if (s == "modp" || s == "ZZ/p") return Field::modp;
  throw std::invalid_argument("unknown field '" + s + "'");
}

const char* to_string(Field f) { return f == Field::rational ? "rational" : "modp"; }

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

namespace {

bool has_dual(const ScrollParams& p) {
  Regime g = regime_of(p);
  return g == Regime::balanced || g == Regime::generic;
}

DualResolution dual(const SortedGraph& g, OrderKind kind, std::size_t max_cliques, Field f) {
  return f == Field::rational ? resolve_dual<Rational>(g, kind, max_cliques) : resolve_dual<ModP>(g, kind, max_cliques);
}

std::string set_name(const SortedGraph& g, VertexSet s) {
  std::string out;
  for (std::size_t v : s.elements()) out += y_name(g.vertex(v));
  return out.empty() ? "1" : out;
}

}  // namespace

int bruteforce_reg(const ScrollParams& p, OrderKind kind, std::size_t max_cliques, Field field) {
  if (!has_dual(p)) return 0;
  SortedGraph g(p);
  return dual(g, kind, max_cliques, field).summary.pd;
}

long long cm_type_bruteforce(const ScrollParams& p, std::size_t max_cliques, Field field) {
  if (!has_dual(p)) return 1;
  SortedGraph g(p);
  return dual(g, OrderKind::revlex, max_cliques, field).summary.top_betti;
}

bool InvariantReport::hard_failure() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

bool InvariantReport::budget_partial() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::skipped; });
}

const CheckResult* InvariantReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

CheckResult verdict(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

CheckResult skipped(std::string name, std::string why) { return {std::move(name), CheckStatus::skipped, "budget: " + why}; }

CheckResult from_verdict(std::string name, Verdict v, std::string detail = {}) {
  if (v == Verdict::budget_exceeded) return skipped(std::move(name), detail.empty() ? "groebner limits" : detail);
  return verdict(std::move(name), v == Verdict::yes, std::move(detail));
}

template <class F>
CheckResult guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return skipped(name, e.what());
  } catch (const std::exception& e) {
    return {name, CheckStatus::fail, e.what()};
  }
}

struct DualOutcome {
  std::optional<DualResolution> res;
  std::string budget;  // non-empty when skipped
  std::string error;
  CheckResult colon;
};

DualOutcome run_dual(const SortedGraph& g, OrderKind kind, const ValidateOptions& opt) {
  DualOutcome out;
  const std::string cname = std::string("colon_oracle_") + to_string(kind);
  try {
    out.res = dual(g, kind, opt.max_cliques, opt.field);
  } catch (const BudgetExceeded& e) {
    out.budget = e.what();
    out.colon = skipped(cname, e.what());
    return out;
  } catch (const std::exception& e) {
    out.error = e.what();
    out.colon = {cname, CheckStatus::fail, e.what()};
    return out;
  }
  const auto& res = *out.res;
  for (std::size_t t = 1; t < res.cliques.size(); ++t) {
    auto brute = colon_bruteforce(std::span(res.generators).first(t), res.generators[t]);
    std::sort(brute.begin(), brute.end());
    auto comb = res.colons[t].minimal_generators;
    std::sort(comb.begin(), comb.end());
    if (brute != comb) {
      std::ostringstream w;
      w << "clique #" << t << " " << set_name(g, res.cliques[t].vertices) << ": combinatorial {";
      for (auto s : comb) w << set_name(g, s) << " ";
      w << "} vs {";
      for (auto s : brute) w << set_name(g, s) << " ";
      w << "}";
      out.colon = verdict(cname, false, w.str());
      return out;
    }
  }
  out.colon = verdict(cname, true, std::to_string(res.cliques.size()) + " cliques");
  return out;
}

std::vector<CheckResult> structural_checks(const ScrollParams& p, const MinorTable& minors, const ValidateOptions& opt) {
  std::vector<CheckResult> out;
  // spot check only: larger cases are left out of the report rather than marked partial
  if (minors.lambda().size() <= opt.max_groebner_minors)
    out.push_back(guarded("groebner_minors", [&]() {
      return from_verdict("groebner_minors", verify_minors_groebner(p, opt.groebner, opt.max_groebner_minors));
    }));
  out.push_back(guarded("sortability", [&]() { return verdict("sortability", verify_sortability(p)); }));
  out.push_back(guarded("straightening", [&]() {
    const auto& lambda = minors.lambda();
    std::mt19937_64 rng(opt.seed ^ (static_cast<std::uint64_t>(p.r()) << 32 | static_cast<std::uint64_t>(p.c()) << 16 |
                                    static_cast<std::uint64_t>(p.d())));
    std::uniform_int_distribution<std::size_t> pick(0, lambda.size() - 1);
    for (std::size_t s = 0; s < opt.straightening_samples; ++s) {
      const auto& a = lambda[pick(rng)];
      const auto& b = lambda[pick(rng)];
      auto e = straighten(minors, a, b);
      if (!check_expansion(minors, e).ok())
        return verdict("straightening", false, "pair " + y_name(a) + " " + y_name(b));
    }
    return verdict("straightening", true, std::to_string(opt.straightening_samples) + " pairs");
  }));
  return out;
}

std::vector<CheckResult> equation_checks(const ScrollParams& p, const MinorTable& minors, const ValidateOptions& opt) {
  std::vector<CheckResult> out;
  out.push_back(guarded("fiber_vanishing", [&]() {
    auto layout = VariableLayout::fiber(p);
    auto rels = fiber_relation_data(minors);
    for (const auto& rel : rels)
      if (!verify_relation_vanishes(minors, layout, rel.poly))
        return verdict("fiber_vanishing", false, "pair " + y_name(rel.alpha) + " " + y_name(rel.beta));
    return verdict("fiber_vanishing", true, std::to_string(rels.size()) + " relations");
  }));
  out.push_back(guarded("rees_vanishing", [&]() {
    auto layout = VariableLayout::rees(p);
    auto syz = rees_syzygies(p);
    for (const auto& s : syz) {
      if (!verify_relation_vanishes(minors, layout, s.poly) || !rees_leading_pattern(p, s)) {
        std::string cols;
        for (int c : s.columns) cols += std::to_string(c) + ",";
        return verdict("rees_vanishing", false, "columns " + cols + " row " + std::to_string(s.k));
      }
    }
    return verdict("rees_vanishing", true, std::to_string(syz.size()) + " syzygies");
  }));
  out.push_back(guarded("hilbert", [&]() {
    int deg = p.big_n() <= 15 ? std::max(opt.hilbert_degree, 4) : opt.hilbert_degree;
    return from_verdict("hilbert", hilbert_consistency(p, deg), "degree <= " + std::to_string(deg));
  }));
  return out;
}

}  // namespace

InvariantReport cross_validate(const ScrollParams& p, const ValidateOptions& opt) {
  InvariantReport rep;
  rep.params = p;
  rep.reduced = reduced_params(p);
  rep.regime = regime_of(p);
  rep.n_vars = p.n_vars();
  rep.n_minors = p.big_n();
  rep.field = opt.field;
  rep.dim_formula = formula_dim(p);
  rep.reg_formula = formula_reg(p);
  rep.reduction_number = formula_reduction_number(p);
  rep.gorenstein_formula = gorenstein_formula(p);
  try {
    rep.a_invariant = formula_a_invariant(p);
    rep.checks.push_back(verdict("a_invariant", true, "a = reg - dim"));
  } catch (const std::logic_error& e) {
    rep.a_invariant = rep.reg_formula - rep.dim_formula;
    rep.checks.push_back(verdict("a_invariant", false, e.what()));
  }
  rep.checks.push_back(verdict("reduction_number", rep.reduction_number == rep.reg_formula));

  const bool in_budget = p.big_n() <= opt.max_vars;
  const auto launch = opt.parallel ? std::launch::async : std::launch::deferred;

  if (!in_budget) {
    const std::string why = std::to_string(p.big_n()) + " Y-variables > " + std::to_string(opt.max_vars);
    if (opt.brute) {
      rep.checks.push_back(skipped("dim", why));
      rep.checks.push_back(skipped("reg", why));
    }
    if (opt.structural) rep.checks.push_back(skipped("structural", why));
    return rep;
  }

  std::future<int> dim_f;
  std::future<DualOutcome> lex_f, revlex_f;
  std::unique_ptr<SortedGraph> graph;
  if (opt.brute) {
    dim_f = std::async(launch, [&]() { return bruteforce_dim(p); });
    if (has_dual(p)) {
      graph = std::make_unique<SortedGraph>(p);
      lex_f = std::async(launch, [&]() { return run_dual(*graph, OrderKind::lex, opt); });
      revlex_f = std::async(launch, [&]() { return run_dual(*graph, OrderKind::revlex, opt); });
    }
  }
  std::unique_ptr<MinorTable> minors;
  std::future<std::vector<CheckResult>> struct_f, eq_f;
  if (opt.structural) {
    minors = std::make_unique<MinorTable>(p);
    struct_f = std::async(launch, [&]() { return structural_checks(p, *minors, opt); });
    eq_f = std::async(launch, [&]() { return equation_checks(p, *minors, opt); });
  }

  if (opt.brute) {
    rep.dim_bruteforce = dim_f.get();
    rep.checks.push_back(verdict("dim", *rep.dim_bruteforce == rep.dim_formula,
                                 "formula " + std::to_string(rep.dim_formula) + ", rank " +
                                     std::to_string(*rep.dim_bruteforce)));
    if (!has_dual(p)) {
      rep.reg_bruteforce = 0;
      rep.cm_type_bruteforce = 1;
      rep.checks.push_back(verdict("reg", rep.reg_formula == 0, "no relations"));
      rep.checks.push_back(verdict("cm_type", rep.gorenstein_formula, "polynomial ring"));
    } else {
      DualOutcome lex = lex_f.get(), revlex = revlex_f.get();
      auto record = [&](DualOutcome& o, OrderKind kind, std::optional<int>& pd, std::optional<int>& ell) {
        const std::string name = std::string("reg_") + to_string(kind);
        if (o.res) {
          pd = o.res->summary.pd;
          ell = o.res->max_codim;
          rep.clique_count = o.res->cliques.size();
          rep.checks.push_back(verdict(name, *pd == rep.reg_formula,
                                       "pd " + std::to_string(*pd) + ", formula " + std::to_string(rep.reg_formula)));
        } else if (!o.budget.empty()) {
          rep.checks.push_back(skipped(name, o.budget));
        } else {
          rep.checks.push_back({name, CheckStatus::fail, o.error});
        }
        rep.checks.push_back(o.colon);
      };
      record(lex, OrderKind::lex, rep.pd_lex, rep.ell_lex);
      record(revlex, OrderKind::revlex, rep.pd_revlex, rep.ell_revlex);
      if (rep.pd_lex && rep.pd_revlex)
        rep.checks.push_back(verdict("pd_agreement", *rep.pd_lex == *rep.pd_revlex));
      DualOutcome* main = revlex.res ? &revlex : (lex.res ? &lex : nullptr);
      if (main) {
        const DualResolution& res = *main->res;
        rep.reg_bruteforce = res.summary.pd;
        rep.betti = res.betti;
        rep.generation_degree = res.generation_degree;
        rep.cm_type_bruteforce = res.summary.top_betti;
        rep.checks.push_back(verdict("cm_type", (res.summary.top_betti == 1) == rep.gorenstein_formula,
                                     "top Betti number " + std::to_string(res.summary.top_betti)));
        rep.checks.push_back(verdict("linear_resolution", res.summary.is_linear,
                                     "generation degree " + std::to_string(res.generation_degree)));
        if (res.generators.size() <= opt.taylor_bound)
          rep.checks.push_back(guarded("taylor_betti", [&]() {
            auto t = opt.field == Field::rational ? taylor_betti<Rational>(res.generators, opt.taylor_bound)
                                                  : taylor_betti<ModP>(res.generators, opt.taylor_bound);
            return verdict("taylor_betti", t && *t == res.betti);
          }));
      } else {
        rep.checks.push_back(skipped("cm_type", "no dual resolution"));
      }
      rep.checks.push_back(guarded("gorenstein_hvector", [&]() {
        rep.h_vector = toric_h_vector(p);
        const auto& h = *rep.h_vector;
        std::string detail = "h =";
        for (long long v : h) detail += " " + std::to_string(v);
        bool ok = std::equal(h.begin(), h.end(), h.rbegin()) == rep.gorenstein_formula;
        if (rep.cm_type_bruteforce && h.back() != *rep.cm_type_bruteforce) {
          ok = false;
          detail += "; last entry differs from the top Betti number";
        }
        return verdict("gorenstein_hvector", ok, detail);
      }));
      rep.checks.push_back(guarded("F0_conditions", [&]() {
        auto f0 = construct_F0(*graph);
        if (!f0) return verdict("F0_conditions", false, "no construction");
        DualOutcome& o = f0->kind == OrderKind::lex ? lex : revlex;
        if (!o.res) return skipped("F0_conditions", o.budget.empty() ? o.error : o.budget);
        auto chk = check_F0_conditions(*graph, *f0, o.res->cliques, o.res->colons);
        std::string detail = std::string(to_string(f0->kind)) + ", " + f0->construction + ", codim " +
                             std::to_string(chk.codim) + " of max " + std::to_string(chk.max_codim);
        if (!chk.ok()) detail += ": " + chk.witness;
        return verdict("F0_conditions", chk.ok(), detail);
      }));
    }
  }
  if (opt.structural) {
    for (auto& c : struct_f.get()) rep.checks.push_back(std::move(c));
    for (auto& c : eq_f.get()) rep.checks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace hankel
