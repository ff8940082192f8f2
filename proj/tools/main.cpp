#include <fstream>
#include <numeric>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pricing/baselines.hpp"
#include "pricing/constk.hpp"
#include "pricing/errors.hpp"
#include "pricing/hardness.hpp"
#include "pricing/iid2.hpp"
#include "pricing/io.hpp"
#include "pricing/market.hpp"
#include "pricing/oracles.hpp"

namespace {

using nlohmann::json;
using namespace pricing;

int g_decimal_digits = 6;

json rat(const Rational& r) {
  return {{"rational", to_string(r)}, {"decimal", decimal_string(r, g_decimal_digits)}};
}

json rats(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(rat(r));
  return out;
}

json report(const std::string& verb) {
  return {{"schema_version", 1}, {"verb", verb}};
}

void emit(const json& doc, const std::string& output_path) {
  const std::string text = doc.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    if (!out) throw ParseError("cannot write " + output_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact revenue-optimal bundle pricing for an additive buyer"};
  app.require_subcommand(1);

  std::string instance_path, menu_path, input_path, output_path;
  std::string t_text = "1";
  std::string budget_alloc_text = to_string(Rational(Integer(1) << 24));
  std::size_t budget_lp = 8192;
  std::size_t max_items = 3;
  std::size_t workers = 1;
  bool emit_candidates = false;
  std::size_t iid_n = 1;
  std::string iid_a = "0", iid_b = "1", iid_p = "1/2";

  app.add_option("--decimal-digits", g_decimal_digits, "digits in decimal annotations")
      ->check(CLI::Range(0, 64));
  app.add_option("--output", output_path, "write the report here instead of stdout");

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", instance_path, "product-distribution JSON file")->required();
  };

  auto* c_srev = app.add_subcommand("srev", "optimal per-item pricing");
  add_instance(c_srev);
  auto* c_brev = app.add_subcommand("brev", "optimal grand-bundle-only pricing");
  add_instance(c_brev);
  auto* c_drev = app.add_subcommand("drev-exact", "optimal deterministic bundle pricing");
  add_instance(c_drev);
  c_drev->add_option("--budget-allocations", budget_alloc_text,
                     "maximum number of allocation maps");
  c_drev->add_option("--workers", workers, "worker threads")->check(CLI::Range(1, 256));
  auto* c_revlp = app.add_subcommand("rev-lp", "optimal randomized (lottery) revenue");
  add_instance(c_revlp);
  c_revlp->add_option("--budget-lp", budget_lp, "maximum LP rows/columns");
  auto* c_iid2 = app.add_subcommand("solve-iid2", "i.i.d. two-value closed-form solver");
  c_iid2->add_option("--n", iid_n, "item count")->required();
  c_iid2->add_option("--a", iid_a, "low value")->required();
  c_iid2->add_option("--b", iid_b, "high value")->required();
  c_iid2->add_option("--p", iid_p, "probability of the high value")->required();
  auto* c_constk = app.add_subcommand("solve-constk", "vertex-enumeration solver");
  add_instance(c_constk);
  c_constk->add_option("--max-items", max_items, "item-count budget");
  c_constk->add_flag("--emit-candidates", emit_candidates, "include every vertex in the report");
  auto* c_eval = app.add_subcommand("eval-menu", "expected revenue of a given menu");
  add_instance(c_eval);
  c_eval->add_option("--menu", menu_path, "menu JSON file")->required();
  auto* c_reduce = app.add_subcommand("reduce-comp", "embed a COMP instance into COMP*");
  c_reduce->add_option("--input", input_path, "COMP JSON file")->required();
  auto* c_build = app.add_subcommand("build-hard-instance", "pricing instance from COMP*");
  c_build->add_option("--input", input_path, "COMP* JSON file")->required();
  c_build->add_option("--t", t_text, "threshold t");
  auto* c_compare = app.add_subcommand("compare-solutions", "revenues of Solutions 1 and 2");
  c_compare->add_option("--instance", instance_path, "hard-instance JSON file")->required();
  auto* c_verify = app.add_subcommand("verify", "validate an instance file");
  add_instance(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    json doc;
    if (*c_srev) {
      auto dist = instance_from_json(load_json_file(instance_path));
      auto result = srev(dist);
      doc = report("srev");
      doc["revenue"] = rat(result.revenue);
      doc["item_prices"] = rats(result.prices);
      doc["menu"] = menu_to_json(discounted_item_pricing_menu(
          result.prices, std::accumulate(result.prices.begin(), result.prices.end(),
                                         Rational(0))));
    } else if (*c_brev) {
      auto dist = instance_from_json(load_json_file(instance_path));
      auto result = brev(dist);
      doc = report("brev");
      doc["revenue"] = rat(result.revenue);
      doc["bundle_price"] = rat(result.prices.at(0));
      doc["menu"] = menu_to_json(
          Menu({{static_cast<Bundle>((Bundle{1} << dist.item_count()) - 1), result.prices.at(0)}}));
    } else if (*c_drev) {
      auto dist = instance_from_json(load_json_file(instance_path));
      DrevOptions options;
      options.budget_allocations = integer_from_json(json(budget_alloc_text));
      options.workers = workers;
      auto result = drev_bruteforce(dist, options);
      doc = report("drev-exact");
      doc["revenue"] = rat(result.revenue);
      json alloc = json::array();
      const auto grid = enumerate_valuations(dist);
      for (std::size_t g = 0; g < grid.size(); ++g) {
        alloc.push_back({{"valuation", rats(grid[g].values)},
                         {"prob", rat(grid[g].prob)},
                         {"bundle", bundle_to_json(result.alloc.allocated[g])},
                         {"utility", rat(result.utilities[g])}});
      }
      doc["allocation"] = std::move(alloc);
    } else if (*c_revlp) {
      auto dist = instance_from_json(load_json_file(instance_path));
      doc = report("rev-lp");
      doc["revenue"] = rat(rev_lp(dist, LpBudget{budget_lp, budget_lp}));
    } else if (*c_iid2) {
      Iid2Instance inst{iid_n, parse_rational(iid_a), parse_rational(iid_b),
                        parse_rational(iid_p)};
      auto sol = solve_iid2(inst);
      doc = report("solve-iid2");
      doc["k"] = sol.k;
      doc["item_price"] = rat(sol.item_price);
      doc["bundle_price"] = rat(sol.bundle_price);
      doc["revenue"] = rat(sol.revenue);
      doc["level_probs"] = rats(sol.level_probs);
      doc["menu"] = menu_to_json(sol.menu(inst.n));
    } else if (*c_constk) {
      auto dist = instance_from_json(load_json_file(instance_path));
      ConstkBudget budget;
      budget.max_items = max_items;
      std::vector<PriceVector> candidates;
      auto result = solve_constk(dist, budget, emit_candidates ? &candidates : nullptr);
      doc = report("solve-constk");
      doc["revenue"] = rat(result.revenue);
      doc["bundle_prices"] = rats(result.best_prices.prices);
      doc["candidates_examined"] = result.candidates_examined;
      doc["menu"] = menu_to_json(result.best_prices.menu());
      if (emit_candidates) {
        json cands = json::array();
        for (const auto& c : candidates) cands.push_back(rats(c.prices));
        doc["candidates"] = std::move(cands);
      }
    } else if (*c_eval) {
      auto dist = instance_from_json(load_json_file(instance_path));
      auto menu = menu_from_json(load_json_file(menu_path));
      doc = report("eval-menu");
      doc["revenue"] = rat(expected_revenue(menu, dist));
    } else if (*c_reduce) {
      auto inst = comp_from_json(load_json_file(input_path));
      auto [star, t_prime] = comp_to_compstar(inst);
      doc = report("reduce-comp");
      doc["compstar"] = comp_to_json(star.inst);
      doc["t_prime"] = integer_to_json(t_prime);
      doc["w_prime"] = integer_to_json(star.inst.target());
    } else if (*c_build) {
      auto comp = comp_from_json(load_json_file(input_path));
      auto hi = build_hard_instance(CompStarInstance{comp}, integer_from_json(json(t_text)));
      doc = hard_to_json(hi);
      doc["verb"] = "build-hard-instance";
    } else if (*c_compare) {
      auto hi = hard_from_json(load_json_file(instance_path));
      auto sp = build_solutions(hi);
      auto verdict = decide_winner(sp, hi.t);
      doc = report("compare-solutions");
      doc["rev1"] = rat(sp.rev1);
      doc["rev2"] = rat(sp.rev2);
      doc["t"] = integer_to_json(hi.t);
      doc["t_star"] = integer_to_json(sp.t_star);
      doc["winner"] = verdict.winner == Winner::Solution2 ? "solution2" : "solution1";
      doc["residual"] = rat(verdict.residual);
      doc["a_prime"] = rat(sp.a_prime);
      doc["rev_b_term"] = rat(sp.rev_b_term);
      doc["c_prime"] = rat(sp.c_prime);
      doc["epsilon"] = rat(hi.eps);
      doc["sol1_menu"] = menu_to_json(sp.sol1_menu);
      doc["sol2_menu"] = menu_to_json(sp.sol2_menu);
    } else if (*c_verify) {
      auto dist = instance_from_json(load_json_file(instance_path));
      doc = report("verify");
      doc["items"] = dist.item_count();
      doc["ok"] = true;
    }
    emit(doc, output_path);
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 4;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 5;
  }
}
