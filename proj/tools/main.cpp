#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <regex>
#include <thread>

#include "hankel/cache.hpp"
#include "hankel/invariants.hpp"
#include "hankel/report_io.hpp"
#include "hankel/resolution.hpp"

using namespace hankel;

namespace {

constexpr int exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_budget = 3;

struct Common {
  int r = 0, c = 0, d = 0;
  std::string order = "revlex";
  std::string format = "text";
  std::string out;
  std::size_t max_vars = 40;
  std::size_t max_cliques = 500;
  std::string field = "rational";
};

void add_triple(CLI::App* app, Common& o) {
  app->add_option("-r", o.r, "number of rows")->required();
  app->add_option("-c", o.c, "number of columns")->required();
  app->add_option("-d", o.d, "leap")->required();
}

void add_budget(CLI::App* app, Common& o) {
  app->add_option("--max-vars", o.max_vars, "largest number of Y-variables (maximal minors) to compute with");
  app->add_option("--max-cliques", o.max_cliques, "largest number of maximal cliques to enumerate");
}

void emit(const Common& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ValidateOptions options_for(const Common& o, const std::string& verify) {
  ValidateOptions v;
  v.max_vars = o.max_vars;
  v.max_cliques = o.max_cliques;
  v.field = parse_field(o.field);
  if (verify == "formula") {
    v.brute = v.structural = false;
  } else if (verify == "brute") {
    v.structural = false;
  } else if (verify != "both") {
    throw std::invalid_argument("--verify must be formula, brute or both");
  }
  return v;
}

int report_exit(const InvariantReport& rep) {
  if (rep.hard_failure()) return exit_failure;
  if (rep.budget_partial()) return exit_budget;
  return exit_ok;
}

int cmd_invariants(const Common& o, const std::string& verify, bool use_cache) {
  ScrollParams p(o.r, o.c, o.d);
  ValidateOptions v = options_for(o, verify);
  if (o.format != "text" && o.format != "json") throw std::invalid_argument("--format must be text or json");

  std::optional<ReportCache> cache;
  std::string key;
  if (use_cache && verify != "formula")
    if (auto dir = default_cache_dir()) {
      cache.emplace(*dir);
      key = cache_key(o.r, o.c, o.d, "both",
                      verify + "-" + o.format + "-" + o.field + "-" + std::to_string(o.max_vars) + "-" +
                          std::to_string(o.max_cliques));
      if (auto hit = cache->load(key)) {
        auto nl = hit->find('\n');
        if (nl != std::string::npos) {
          emit(o, hit->substr(nl + 1));
          return std::stoi(hit->substr(0, nl));
        }
      }
    }

  InvariantReport rep = cross_validate(p, v);
  const std::string text = o.format == "json" ? dump(to_json(rep)) : to_text(rep);
  const int code = report_exit(rep);
  if (cache) cache->store(key, std::to_string(code) + "\n" + text);
  emit(o, text);
  return code;
}

int cmd_equations(const Common& o, const std::string& which) {
  ScrollParams p(o.r, o.c, o.d);
  Json j = equations_json(p, parse_equation_set(which), parse_order_kind(o.order), o.max_vars);
  if (o.format == "json") {
    emit(o, dump(j));
  } else {
    std::string text;
    for (const auto& e : j["fiber_relations"]) text += e.get<std::string>() + "\n";
    if (j.contains("rees_syzygies"))
      for (const auto& e : j["rees_syzygies"]) text += e.get<std::string>() + "\n";
    text += std::string("verified_vanishing: ") + (j["verified_vanishing"].get<bool>() ? "true" : "false") + "\n";
    emit(o, text);
  }
  return j["verified_vanishing"].get<bool>() ? exit_ok : exit_failure;
}

int cmd_cliques(const Common& o) {
  ScrollParams p(o.r, o.c, o.d);
  if (p.big_n() > o.max_vars)
    throw BudgetExceeded(std::to_string(p.big_n()) + " Y-variables > " + std::to_string(o.max_vars));
  SortedGraph g(p);
  Json j = cliques_json(g, parse_order_kind(o.order), o.max_cliques);
  if (o.format == "json") {
    emit(o, dump(j));
    return exit_ok;
  }
  std::string text;
  for (const auto& e : j["cliques"]) {
    text += "#" + std::to_string(e["position"].get<std::size_t>()) + " codim " + std::to_string(e["codim"].get<int>()) + ":";
    for (const auto& m : e["members"]) text += " " + m.get<std::string>();
    text += "\n   colon:";
    for (const auto& m : e["colon_generators"]) text += " " + m.get<std::string>();
    if (!e["tail"].is_null() && e["tail"]["cancelled"].get<bool>())
      text += "   (tail " + e["tail"]["monomial"].get<std::string>() + " cancelled)";
    text += "\n";
  }
  text += std::to_string(j["count"].get<std::size_t>()) + " maximal cliques, max codim " +
          std::to_string(j["max_codim"].get<int>()) + "\n";
  emit(o, text);
  return exit_ok;
}

int cmd_betti(const Common& o) {
  ScrollParams p(o.r, o.c, o.d);
  if (p.big_n() > o.max_vars)
    throw BudgetExceeded(std::to_string(p.big_n()) + " Y-variables > " + std::to_string(o.max_vars));
  const Regime regime = regime_of(p);
  BettiTable t;
  if (regime == Regime::balanced || regime == Regime::generic) {
    SortedGraph g(p);
    auto kind = parse_order_kind(o.order);
    t = parse_field(o.field) == Field::rational ? resolve_dual<Rational>(g, kind, o.max_cliques).betti
                                                 : resolve_dual<ModP>(g, kind, o.max_cliques).betti;
  }
  if (o.format == "json") {
    Json j{{"params", params_json(p)}, {"order", o.order}, {"betti", betti_json(t)}};
    emit(o, dump(j));
  } else if (o.format == "csv") {
    emit(o, betti_csv(t));
  } else {
    emit(o, betti_text(t));
  }
  return exit_ok;
}

// "2..5", "r..10", "r..r+7"
struct Bound {
  bool relative = false;
  int value = 0;
  int at(int r) const { return relative ? r + value : value; }
};

std::pair<Bound, Bound> parse_range(const std::string& s, bool allow_r) {
  static const std::regex re(R"(^\s*(r(?:\+(\d+))?|\d+)\s*\.\.\s*(r(?:\+(\d+))?|\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad range '" + s + "', expected a..b");
  auto bound = [&](int whole, int offset) {
    Bound b;
    std::string t = m[whole].str();
    if (t[0] == 'r') {
      if (!allow_r) throw std::invalid_argument("range '" + s + "' cannot refer to r");
      b.relative = true;
      b.value = m[offset].matched ? std::stoi(m[offset].str()) : 0;
    } else {
      b.value = std::stoi(t);
    }
    return b;
  };
  return {bound(1, 2), bound(3, 4)};
}

int cmd_sweep(const Common& o, const std::string& rr, const std::string& cr, const std::string& dr,
              const std::string& verify, unsigned threads) {
  if (o.out.empty()) throw std::invalid_argument("sweep needs --out");
  auto [r0, r1] = parse_range(rr, false);
  auto [c0, c1] = parse_range(cr, true);
  auto [d0, d1] = parse_range(dr, false);
  if (r0.value < 2 || d0.value < 1) throw std::invalid_argument("sweep needs r >= 2 and d >= 1");
  if (r0.value > r1.value || d0.value > d1.value) throw std::invalid_argument("empty r or d range");
  ValidateOptions v = options_for(o, verify);
  v.parallel = false;

  std::vector<ScrollParams> cases;
  for (int r = r0.value; r <= r1.value; ++r)
    for (int c = std::max(r, c0.at(r)); c <= c1.at(r); ++c)
      for (int d = d0.value; d <= d1.value; ++d) cases.emplace_back(r, c, d);

  std::vector<Json> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i; (i = next++) < cases.size();) {
      const ScrollParams& p = cases[i];
      Json e{{"params", params_json(p)}};
      if (p.big_n() > o.max_vars) {
        e["status"] = "skipped";
        e["reason"] = "budget: " + std::to_string(p.big_n()) + " Y-variables > " + std::to_string(o.max_vars);
      } else {
        InvariantReport rep = cross_validate(p, v);
        e["status"] = rep.hard_failure() ? "fail" : rep.budget_partial() ? "skipped" : "pass";
        e["report"] = to_json(rep);
      }
      results[i] = std::move(e);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::size_t pass = 0, fail = 0, skip = 0;
  Json list = Json::array();
  for (auto& e : results) {
    const std::string s = e["status"].get<std::string>();
    (s == "pass" ? pass : s == "fail" ? fail : skip)++;
    list.push_back(std::move(e));
  }
  Json j{{"version", artifact_version},
         {"grid", Json{{"r", rr}, {"c", cr}, {"d", dr}, {"verify", verify}, {"max_vars", o.max_vars}, {"max_cliques", o.max_cliques}}},
         {"summary", Json{{"cases", cases.size()}, {"pass", pass}, {"fail", fail}, {"skipped", skip}}},
         {"cases", list}};
  emit(o, dump(j));
  std::cerr << "sweep: " << cases.size() << " cases, " << pass << " pass, " << fail << " fail, " << skip << " skipped\n";
  return fail ? exit_failure : exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiber cones and Rees algebras of extended Hankel determinantal ideals"};
  app.require_subcommand(1);
  Common o;
  std::string verify = "both", which, rr = "2..3", cr = "r..r+7", dr = "1..2";
  bool no_cache = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  auto* inv = app.add_subcommand("invariants", "formulas checked against brute force");
  add_triple(inv, o);
  add_budget(inv, o);
  inv->add_option("--verify", verify, "formula, brute or both")->check(CLI::IsMember({"formula", "brute", "both"}));
  inv->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  inv->add_option("--field", o.field, "rational or modp")->check(CLI::IsMember({"rational", "modp"}));
  inv->add_option("--out", o.out, "output file");
  inv->add_flag("--no-cache", no_cache, "ignore the report cache");

  auto* eq = app.add_subcommand("equations", "defining equations of the fiber cone or Rees algebra");
  eq->add_option("which", which, "fiber or rees")->required()->check(CLI::IsMember({"fiber", "rees"}));
  add_triple(eq, o);
  add_budget(eq, o);
  eq->add_option("--order", o.order, "lex or revlex");
  eq->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  eq->add_option("--out", o.out, "output file");

  auto* cl = app.add_subcommand("cliques", "maximal cliques with their colon ideals");
  add_triple(cl, o);
  add_budget(cl, o);
  cl->add_option("--order", o.order, "lex or revlex");
  cl->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cl->add_option("--out", o.out, "output file");

  auto* bt = app.add_subcommand("betti", "Betti table of the Alexander dual of the initial ideal");
  add_triple(bt, o);
  add_budget(bt, o);
  bt->add_option("--order", o.order, "lex or revlex");
  bt->add_option("--format", o.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  bt->add_option("--field", o.field, "rational or modp")->check(CLI::IsMember({"rational", "modp"}));
  bt->add_option("--out", o.out, "output file");

  auto* sw = app.add_subcommand("sweep", "cross-validate every case of a parameter grid");
  sw->add_option("--r-range", rr, "e.g. 2..3");
  sw->add_option("--c-range", cr, "e.g. r..10 or r..r+7");
  sw->add_option("--d-range", dr, "e.g. 1..2");
  add_budget(sw, o);
  sw->add_option("--verify", verify, "formula, brute or both")->check(CLI::IsMember({"formula", "brute", "both"}));
  sw->add_option("--field", o.field, "rational or modp")->check(CLI::IsMember({"rational", "modp"}));
  sw->add_option("--threads", threads, "worker threads");
  sw->add_option("--out", o.out, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*inv) return cmd_invariants(o, verify, !no_cache);
    if (*eq) return cmd_equations(o, which);
    if (*cl) return cmd_cliques(o);
    if (*bt) return cmd_betti(o);
    if (*sw) return cmd_sweep(o, rr, cr, dr, verify, threads);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}
