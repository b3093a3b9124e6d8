// clawbench: construct conflict-composition graphs from Ramsey witnesses,
// compute exact invariants, and audit LP/SDP-style relaxations of
// maximum-weight independent set with exact rational arithmetic.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "clawbench/baselines.hpp"
#include "clawbench/construction.hpp"
#include "clawbench/experiments.hpp"
#include "clawbench/invariants.hpp"
#include "clawbench/json_io.hpp"
#include "clawbench/ramsey.hpp"
#include "clawbench/relaxations.hpp"

using namespace clawbench;

namespace {

constexpr int kExitNotFound = 2;
constexpr int kExitAssertionFailed = 3;

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::size_t guard_vertices = 64;
  std::size_t guard_lp_vars = 20000;

  ExperimentGuards guards() const {
    ExperimentGuards g;
    g.vertex_guard = guard_vertices;
    g.lp_var_guard = guard_lp_vars;
    return g;
  }
};

Graph load_graph(const std::string& path) {
  return graph_from_dimacs(read_file(path));
}

// "auto" resolves a catalog/search witness for (k-1, tau); anything else is
// a DIMACS path.
Graph resolve_ramsey(const std::string& source, int k, int tau) {
  if (source != "auto") return load_graph(source);
  auto w = catalog_witness(k - 1, tau);
  if (!w)
    throw std::runtime_error(
        "no catalog witness for (" + std::to_string(k - 1) + "," +
        std::to_string(tau) + "); supply a DIMACS file instead of 'auto'");
  return *w;
}

void emit(const Globals& g, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (!g.out.empty())
    write_file(g.out, text);
  else
    std::cout << text;
}

void emit_graph(const Globals& g, const Graph& graph) {
  std::string text = graph_to_dimacs(graph);
  if (!g.out.empty())
    write_file(g.out, text);
  else
    std::cout << text;
}

std::vector<Rational> load_weights(const std::string& path, std::size_t n) {
  if (path.empty()) return unit_weights(n);
  auto w = weights_from_text(read_file(path));
  if (w.size() != n)
    throw std::runtime_error("weights file has " + std::to_string(w.size()) +
                             " entries for a graph on " + std::to_string(n) +
                             " vertices");
  return w;
}

json claims_to_json(const LemmaBoundsReport& rep) {
  json claims = json::array();
  for (const auto& c : rep.claims)
    claims.push_back(json{
        {"name", c.name},
        {"status", c.status == ClaimStatus::Pass     ? "pass"
                   : c.status == ClaimStatus::Fail ? "fail"
                                                     : "unverified"},
        {"detail", c.detail}});
  return json{{"h_is_witness", rep.h_is_witness},
              {"alpha_h", rep.alpha_h},
              {"alpha_g", rep.alpha_g},
              {"omega_g", rep.omega_g},
              {"max_claw_g", rep.max_claw_g},
              {"all_pass", rep.all_pass()},
              {"claims", claims}};
}

int emit_gap_report(const Globals& g, const GapReport& rep) {
  if (g.format == "csv") {
    std::string text = std::string(gap_report_csv_header()) + "\n" +
                       gap_report_csv_row(rep) + "\n";
    if (!g.out.empty())
      write_file(g.out, text);
    else
      std::cout << text;
  } else {
    emit(g, gap_report_to_json(rep));
  }
  return rep.assertions_hold ? 0 : kExitAssertionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "clawbench: conflict-composition graph construction, exact invariants, "
      "and exact-rational relaxation audits for claw-free independent set"};
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "random seed for stochastic subcommands");
  app.add_option("--out", g.out, "output file (default: stdout)");
  app.add_option("--format", g.format, "report format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--guard-vertices", g.guard_vertices,
                 "refuse exact solves beyond this vertex count");
  app.add_option("--guard-lp-vars", g.guard_lp_vars,
                 "refuse lift LPs beyond this variable count");

  int exit_code = 0;
  // each run-callback stores its work here; executed after parsing
  std::function<void()> run;

  // --- gen -------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "build graphs");
  {
    auto* con = gen->add_subcommand("construction", "block-ring construction");
    auto k = std::make_shared<int>(4);
    auto p = std::make_shared<int>(1);
    auto tau = std::make_shared<int>(3);
    auto ramsey = std::make_shared<std::string>("auto");
    auto labels_path = std::make_shared<std::string>();
    con->add_option("--k", *k, "claw bound (>= 4)")->required();
    con->add_option("--p", *p, "number of blocks")->required();
    con->add_option("--tau", *tau, "clique bound parameter")->required();
    con->add_option("--ramsey", *ramsey, "witness DIMACS file or 'auto'");
    con->add_option("--labels", *labels_path, "write labels JSON here");
    con->callback([&, k, p, tau, ramsey, labels_path] {
      run = [&, k, p, tau, ramsey, labels_path] {
        ConstructionParams params;
        params.k = *k;
        params.p = *p;
        params.tau = *tau;
        params.H = resolve_ramsey(*ramsey, *k, *tau);
        auto [graph, labels] = build_lemma_graph(params);
        if (!labels_path->empty())
          write_file(*labels_path, labels_to_json(labels).dump(2) + "\n");
        emit_graph(g, graph);
      };
    });

    auto* bc = gen->add_subcommand("bcc", "bi-conflict composition");
    auto h1 = std::make_shared<std::string>();
    auto h2 = std::make_shared<std::string>();
    auto matching = std::make_shared<std::string>("identity");
    bc->add_option("--h1", *h1, "first graph DIMACS")->required();
    bc->add_option("--h2", *h2, "second graph DIMACS")->required();
    bc->add_option("--matching", *matching,
                   "'identity' or JSON permutation file");
    bc->callback([&, h1, h2, matching] {
      run = [&, h1, h2, matching] {
        Graph a = load_graph(*h1);
        Graph b = load_graph(*h2);
        std::vector<int> m;
        if (*matching == "identity")
          m = identity_matching(a.vertex_count());
        else
          m = json::parse(read_file(*matching)).get<std::vector<int>>();
        emit_graph(g, bcc(a, b, m));
      };
    });
  }

  // --- invariants ------------------------------------------------------------
  {
    auto* inv = app.add_subcommand("invariants", "exact invariant report");
    auto path = std::make_shared<std::string>();
    auto want_alpha = std::make_shared<bool>(false);
    auto want_omega = std::make_shared<bool>(false);
    auto want_chi = std::make_shared<bool>(false);
    auto want_claw = std::make_shared<bool>(false);
    auto want_cliques = std::make_shared<bool>(false);
    inv->add_option("graph", *path, "graph DIMACS file")->required();
    inv->add_flag("--alpha", *want_alpha, "independence number");
    inv->add_flag("--omega", *want_omega, "clique number");
    inv->add_flag("--chi", *want_chi, "chromatic number");
    inv->add_flag("--max-claw", *want_claw, "largest induced star");
    inv->add_flag("--cliques", *want_cliques, "maximal clique list");
    inv->callback([&, path, want_alpha, want_omega, want_chi, want_claw,
                   want_cliques] {
      run = [&, path, want_alpha, want_omega, want_chi, want_claw,
             want_cliques] {
        Graph graph = load_graph(*path);
        bool all = !*want_alpha && !*want_omega && !*want_chi && !*want_claw &&
                   !*want_cliques;
        json j;
        j["n"] = graph.vertex_count();
        j["m"] = graph.edge_count();
        if (all || *want_alpha) {
          auto a = independence_number(graph, g.guard_vertices);
          j["alpha"] = a.value;
          j["alpha_witness"] = a.witness;
        }
        if (all || *want_omega) {
          auto w = clique_number(graph, g.guard_vertices);
          j["omega"] = w.value;
          j["omega_witness"] = w.witness;
        }
        if (all || *want_chi) {
          auto c = chromatic_number(graph, std::min<std::size_t>(
                                               g.guard_vertices, 40));
          j["chi"] = c.value;
          j["coloring"] = c.coloring;
        }
        if (all || *want_claw) {
          auto c = max_claw(graph, g.guard_vertices);
          j["max_claw"] = c.value;
          j["max_claw_witness"] =
              json{{"center", c.center}, {"leaves", c.leaves}};
        }
        if (*want_cliques) j["maximal_cliques"] = maximal_cliques(graph);
        emit(g, j);
      };
    });
  }

  // --- ramsey ----------------------------------------------------------------
  {
    auto* ram = app.add_subcommand("ramsey", "Ramsey witnesses");
    auto* search = ram->add_subcommand("search", "seeded local search");
    auto q = std::make_shared<RamseyQuery>();
    search->add_option("--s", q->s, "forbidden independent-set size")
        ->required();
    search->add_option("--t", q->t, "forbidden clique size")->required();
    search->add_option("--n", q->n, "vertex count")->required();
    search->add_option("--budget", q->budget, "iteration budget");
    search->callback([&, q] {
      run = [&, q] {
        q->seed = g.seed;
        auto found = search_ramsey(*q);
        if (!found) {
          std::cerr << "no witness found within the budget\n";
          exit_code = kExitNotFound;
          return;
        }
        emit_graph(g, *found);
      };
    });

    auto* cat = ram->add_subcommand("catalog", "known witnesses");
    auto s = std::make_shared<int>();
    auto t = std::make_shared<int>();
    cat->add_option("--s", *s)->required();
    cat->add_option("--t", *t)->required();
    cat->callback([&, s, t] {
      run = [&, s, t] {
        auto w = catalog_witness(*s, *t);
        if (!w) {
          std::cerr << "no catalog entry for (" << *s << "," << *t << ")\n";
          exit_code = kExitNotFound;
          return;
        }
        emit_graph(g, *w);
      };
    });
  }

  // --- verify ----------------------------------------------------------------
  {
    auto* ver = app.add_subcommand("verify", "check construction claims");
    auto* lem = ver->add_subcommand("lemma1", "block-construction bounds");
    auto graph_path = std::make_shared<std::string>();
    auto labels_path = std::make_shared<std::string>();
    auto k = std::make_shared<int>(4);
    auto p = std::make_shared<int>(1);
    auto tau = std::make_shared<int>(3);
    auto ramsey = std::make_shared<std::string>("auto");
    lem->add_option("--graph", *graph_path, "graph DIMACS")->required();
    lem->add_option("--labels", *labels_path, "labels JSON")->required();
    lem->add_option("--k", *k)->required();
    lem->add_option("--p", *p)->required();
    lem->add_option("--tau", *tau)->required();
    lem->add_option("--ramsey", *ramsey, "witness DIMACS or 'auto'");
    lem->callback([&, graph_path, labels_path, k, p, tau, ramsey] {
      run = [&, graph_path, labels_path, k, p, tau, ramsey] {
        ConstructionParams params;
        params.k = *k;
        params.p = *p;
        params.tau = *tau;
        params.H = resolve_ramsey(*ramsey, *k, *tau);
        Graph graph = load_graph(*graph_path);
        auto labels = labels_from_json(json::parse(read_file(*labels_path)));
        auto rep = verify_lemma_bounds(graph, labels, params,
                                       g.guard_vertices);
        emit(g, claims_to_json(rep));
        if (!rep.all_pass()) exit_code = kExitAssertionFailed;
      };
    });
  }

  // --- relax -----------------------------------------------------------------
  {
    auto* rel = app.add_subcommand("relax", "relaxation audits");

    auto* sac = rel->add_subcommand("sa-check", "lift feasibility of a point");
    auto sac_level = std::make_shared<int>(1);
    auto sac_point = std::make_shared<std::string>();
    auto sac_graph = std::make_shared<std::string>();
    sac->add_option("--level", *sac_level)->required();
    sac->add_option("--point", *sac_point, "pseudo-moment JSON")->required();
    sac->add_option("graph", *sac_graph)->required();
    sac->callback([&, sac_level, sac_point, sac_graph] {
      run = [&, sac_level, sac_point, sac_graph] {
        Graph graph = load_graph(*sac_graph);
        auto y = pseudo_moment_from_json(json::parse(read_file(*sac_point)));
        auto r = sa_feasible(y, *sac_level, graph);
        json j{{"feasible", r.feasible}};
        if (r.violation) {
          j["violation"] = json{{"constraint", r.violation->constraint},
                                {"S", r.violation->S},
                                {"T", r.violation->T},
                                {"clique", r.violation->clique},
                                {"vertex", r.violation->vertex},
                                {"value", format_rational(r.violation->value)}};
        }
        emit(g, j);
        if (!r.feasible) exit_code = kExitAssertionFailed;
      };
    });

    auto* sau = rel->add_subcommand("sa-uniform", "explicit feasible point");
    auto sau_level = std::make_shared<int>(1);
    auto sau_omega = std::make_shared<int>(-1);
    auto sau_graph = std::make_shared<std::string>();
    sau->add_option("--level", *sau_level)->required();
    sau->add_option("--omega-bound", *sau_omega,
                    "clique-number upper bound (skips the exact solve)");
    sau->add_option("graph", *sau_graph)->required();
    sau->callback([&, sau_level, sau_omega, sau_graph] {
      run = [&, sau_level, sau_omega, sau_graph] {
        Graph graph = load_graph(*sau_graph);
        std::optional<int> bound;
        if (*sau_omega >= 0) bound = *sau_omega;
        emit(g, pseudo_moment_to_json(
                    uniform_pseudo_moment(graph, *sau_level, bound)));
      };
    });

    auto* sao = rel->add_subcommand("sa-optimize", "exact lift optimum");
    auto sao_level = std::make_shared<int>(1);
    auto sao_graph = std::make_shared<std::string>();
    sao->add_option("--level", *sao_level)->required();
    sao->add_option("graph", *sao_graph)->required();
    sao->callback([&, sao_level, sao_graph] {
      run = [&, sao_level, sao_graph] {
        Graph graph = load_graph(*sao_graph);
        auto sol = lp_solve_exact(sa_lp(graph, *sao_level, g.guard_lp_vars));
        json j{{"level", *sao_level},
               {"status", sol.status == LpStatus::Optimal ? "optimal"
                          : sol.status == LpStatus::Unbounded ? "unbounded"
                                                              : "infeasible"}};
        if (sol.status == LpStatus::Optimal) {
          j["value"] = format_rational(sol.value);
          auto ix = sa_variable_index((int)graph.vertex_count(), *sao_level);
          json singles = json::array();
          for (int v = 0; v < (int)graph.vertex_count(); ++v)
            singles.push_back(
                format_rational(sol.x[ix.index.at(1ull << v)]));
          j["projection"] = singles;
        }
        emit(g, j);
      };
    });

    auto* qv = rel->add_subcommand("qstab-value", "clique-polytope optimum");
    auto qv_graph = std::make_shared<std::string>();
    auto qv_weights = std::make_shared<std::string>();
    qv->add_option("graph", *qv_graph)->required();
    qv->add_option("--weights", *qv_weights, "weights file");
    qv->callback([&, qv_graph, qv_weights] {
      run = [&, qv_graph, qv_weights] {
        Graph graph = load_graph(*qv_graph);
        auto w = load_weights(*qv_weights, graph.vertex_count());
        auto sol = lp_solve_exact(qstab_lp(graph, w));
        json j{{"status", sol.status == LpStatus::Optimal ? "optimal"
                                                          : "not optimal"}};
        if (sol.status == LpStatus::Optimal) {
          j["value"] = format_rational(sol.value);
          json xs = json::array();
          for (const auto& x : sol.x) xs.push_back(format_rational(x));
          j["x"] = xs;
        }
        emit(g, j);
      };
    });

    auto* qb = rel->add_subcommand("qstab-bad", "constant fractional point");
    auto qb_t = std::make_shared<int>();
    auto qb_graph = std::make_shared<std::string>();
    qb->add_option("--t", *qb_t, "denominator, must exceed omega")->required();
    qb->add_option("graph", *qb_graph)->required();
    qb->callback([&, qb_t, qb_graph] {
      run = [&, qb_t, qb_graph] {
        Graph graph = load_graph(*qb_graph);
        auto x = qstab_bad_point(graph, *qb_t);
        bool feasible = qstab_feasible(x, graph).feasible;
        json j = fractional_point_to_json(x);
        j["feasible"] = feasible;
        Rational obj = 0;
        for (const auto& v : x.values) obj += v;
        j["objective"] = format_rational(obj);
        emit(g, j);
        if (!feasible) exit_code = kExitAssertionFailed;
      };
    });

    auto* soc = rel->add_subcommand("sos-check", "moment-matrix PSD check");
    auto soc_level = std::make_shared<int>(2);
    auto soc_moments = std::make_shared<std::string>();
    auto soc_tol = std::make_shared<double>(1e-9);
    auto soc_graph = std::make_shared<std::string>();
    soc->add_option("--level", *soc_level)->required();
    soc->add_option("--moments", *soc_moments, "pseudo-moment JSON")
        ->required();
    soc->add_option("--tol", *soc_tol, "relative eigenvalue tolerance");
    soc->add_option("graph", *soc_graph)->required();
    soc->callback([&, soc_level, soc_moments, soc_tol, soc_graph] {
      run = [&, soc_level, soc_moments, soc_tol, soc_graph] {
        Graph graph = load_graph(*soc_graph);
        auto z = pseudo_moment_from_json(json::parse(read_file(*soc_moments)));
        auto [ok, diag] = sos_check(z, *soc_level, graph, *soc_tol);
        emit(g, json{{"psd", ok},
                     {"min_eigenvalue", diag.min_eigenvalue},
                     {"worst_matrix", diag.worst_matrix},
                     {"moment_min_eig", diag.moment_min_eig},
                     {"edge_min_eigs", diag.edge_min_eigs}});
        if (!ok) exit_code = kExitAssertionFailed;
      };
    });
  }

  // --- mwis ------------------------------------------------------------------
  {
    auto* mw = app.add_subcommand("mwis", "maximum-weight independent set");
    auto method = std::make_shared<std::string>();
    auto path = std::make_shared<std::string>();
    auto weights = std::make_shared<std::string>();
    mw->add_option("method", *method, "greedy|exact")
        ->required()
        ->check(CLI::IsMember({"greedy", "exact"}));
    mw->add_option("graph", *path)->required();
    mw->add_option("--weights", *weights, "weights file");
    mw->callback([&, method, path, weights] {
      run = [&, method, path, weights] {
        Graph graph = load_graph(*path);
        auto w = load_weights(*weights, graph.vertex_count());
        MwisResult r = *method == "greedy"
                           ? greedy_mwis(graph, w)
                           : exact_mwis(graph, w, g.guard_vertices);
        emit(g, json{{"method", r.method},
                     {"weight", format_rational(r.weight)},
                     {"set", r.chosen}});
      };
    });
  }

  // --- experiment ------------------------------------------------------------
  {
    auto* ex = app.add_subcommand("experiment", "end-to-end gap pipelines");

    auto* t5 = ex->add_subcommand("thm5", "construction + lift gap report");
    auto k = std::make_shared<int>(4);
    auto p = std::make_shared<int>(1);
    auto tau = std::make_shared<int>(3);
    auto ell = std::make_shared<int>(1);
    auto ramsey = std::make_shared<std::string>("auto");
    auto solve_lp = std::make_shared<bool>(false);
    t5->add_option("--k", *k)->required();
    t5->add_option("--p", *p)->required();
    t5->add_option("--tau", *tau)->required();
    t5->add_option("--ell", *ell)->required();
    t5->add_option("--ramsey", *ramsey, "witness DIMACS or 'auto'");
    t5->add_flag("--solve-lp", *solve_lp, "solve the lift LPs exactly");
    t5->callback([&, k, p, tau, ell, ramsey, solve_lp] {
      run = [&, k, p, tau, ell, ramsey, solve_lp] {
        ConstructionParams params;
        params.k = *k;
        params.p = *p;
        params.tau = *tau;
        params.H = resolve_ramsey(*ramsey, *k, *tau);
        exit_code = emit_gap_report(
            g, run_gap_experiment(params, *ell, *solve_lp, g.guards()));
      };
    });

    auto* aa = ex->add_subcommand("appendix-a", "constant-point gap");
    auto aa_graph = std::make_shared<std::string>();
    auto aa_t = std::make_shared<int>();
    aa->add_option("--graph", *aa_graph, "graph DIMACS")->required();
    aa->add_option("--t", *aa_t, "denominator, must exceed omega")->required();
    aa->callback([&, aa_graph, aa_t] {
      run = [&, aa_graph, aa_t] {
        auto rep = run_appendix_a(load_graph(*aa_graph), *aa_t, g.guards());
        emit(g, json{{"instance", rep.instance},
                     {"n", rep.n},
                     {"t", rep.t},
                     {"alpha", rep.alpha},
                     {"objective", format_rational(rep.objective)},
                     {"ratio", format_rational(rep.ratio)},
                     {"feasible", rep.feasible}});
        if (!rep.feasible) exit_code = kExitAssertionFailed;
      };
    });

    auto* ac = ex->add_subcommand("appendix-c", "p = k parameterization");
    auto ac_k = std::make_shared<int>(4);
    auto ac_fk = std::make_shared<long>(144);
    auto ac_ramsey = std::make_shared<std::string>("auto");
    auto ac_solve = std::make_shared<bool>(false);
    ac->add_option("--k", *ac_k)->required();
    ac->add_option("--fk", *ac_fk, "round divisor for the level")->required();
    ac->add_option("--ramsey", *ac_ramsey, "witness DIMACS or 'auto'");
    ac->add_flag("--solve-lp", *ac_solve);
    ac->callback([&, ac_k, ac_fk, ac_ramsey, ac_solve] {
      run = [&, ac_k, ac_fk, ac_ramsey, ac_solve] {
        Graph H = *ac_ramsey == "auto"
                      ? resolve_ramsey("auto", *ac_k, 3)
                      : load_graph(*ac_ramsey);
        exit_code = emit_gap_report(
            g, run_appendix_c(*ac_k, *ac_fk, H, *ac_solve, g.guards()));
      };
    });

    auto* t4 = ex->add_subcommand("thm4", "epsilon/target preset");
    auto t4_k = std::make_shared<int>(4);
    auto t4_eps = std::make_shared<double>(1.0 / 3.0);
    auto t4_target = std::make_shared<long>(27);
    auto t4_ramsey = std::make_shared<std::string>("auto");
    auto t4_solve = std::make_shared<bool>(false);
    t4->add_option("--k", *t4_k)->required();
    t4->add_option("--epsilon", *t4_eps, "exponent in (0, 1/3]")->required();
    t4->add_option("--target", *t4_target, "target vertex scale")->required();
    t4->add_option("--ramsey", *t4_ramsey, "witness DIMACS or 'auto'");
    t4->add_flag("--solve-lp", *t4_solve);
    t4->callback([&, t4_k, t4_eps, t4_target, t4_ramsey, t4_solve] {
      run = [&, t4_k, t4_eps, t4_target, t4_ramsey, t4_solve] {
        Graph H = *t4_ramsey == "auto"
                      ? resolve_ramsey("auto", *t4_k, 3)
                      : load_graph(*t4_ramsey);
        exit_code = emit_gap_report(
            g, run_thm4_preset(*t4_k, *t4_eps, *t4_target, H, *t4_solve,
                               g.guards()));
      };
    });
  }

  // let --out/--format/--seed and friends appear after any subcommand
  std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
    a->fallthrough();
    for (auto* sub : a->get_subcommands({})) enable_fallthrough(sub);
  };
  for (auto* sub : app.get_subcommands({})) enable_fallthrough(sub);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run) run();
  } catch (const guard_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
