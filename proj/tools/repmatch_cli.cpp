// repmatch: command-line front end for the representation-matching toolkit.
//
// Subcommands
//   table     exact irreducible-block table for one (n, d, role)
//   costs     communication-cost calculator (single report or CSV range)
//   figure    CSV series behind the standard cost/probability plots
//   simulate  drive a two-station protocol session with full transcripts
//   verify    numerical verifications (schur | bounds | rank | identities)
//
// Every command is deterministic given its flags and seeds. Output goes to
// stdout unless --out is given. Exit status is nonzero whenever a requested
// verification fails.

#include "repmatch/cost_model.hpp"
#include "repmatch/irrep_table.hpp"
#include "repmatch/rank_witness.hpp"
#include "repmatch/schur_basis.hpp"
#include "repmatch/session.hpp"
#include "repmatch/tensor_ops.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using repmatch::BigInt;
using repmatch::Role;
using repmatch::Task;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

Role parse_role(const std::string& name) {
  if (name == "unitary") return Role::kUnitaryArray;
  if (name == "permutation") return Role::kPermutation;
  throw CLI::ValidationError("--role", "expected 'unitary' or 'permutation'");
}

Task parse_task(const std::string& name) {
  auto task = repmatch::task_from_name(name);
  if (!task) throw CLI::ValidationError("--task", "unknown task: " + name);
  return *task;
}

std::string cost_csv_header() {
  return "n,d,task,num_diagrams,d_R,d_tot,d_tot_sq,c_rm,c_max,c_min,c_rs,c_naive,"
         "delta_c,small_delta_c,p_rm,p_rm_dec,p_tele,p_tele_dec,p_rs,p_rs_dec";
}

std::string cost_csv_row(const repmatch::CostReport& r) {
  std::ostringstream os;
  os << r.n << ',' << r.d << ',' << repmatch::task_name(r.task) << ',' << r.num_diagrams << ','
     << r.d_R << ',' << r.d_tot << ',' << r.d_tot_sq << ',' << r.c_rm << ',' << r.c_max << ','
     << r.c_min << ',' << r.c_rs << ',' << r.c_naive << ',' << r.delta_c << ','
     << r.small_delta_c << ',' << repmatch::rational_string(r.p_rm) << ','
     << repmatch::to_decimal(r.p_rm) << ',' << repmatch::rational_string(r.p_tele) << ','
     << repmatch::to_decimal(r.p_tele) << ',' << repmatch::rational_string(r.p_rs) << ','
     << repmatch::to_decimal(r.p_rs);
  return os.str();
}

int run_table(int n, int d, const std::string& role_name, const std::string& out) {
  const auto table = repmatch::build_table(n, d, parse_role(role_name));
  write_output(out, table.to_csv());
  return 0;
}

int run_costs(int n, int d, const std::string& task_name, bool range, bool as_json,
              bool diagnostics, const std::string& out) {
  const Task task = parse_task(task_name);
  std::ostringstream os;
  if (range) {
    os << cost_csv_header() << '\n';
    for (int k = 1; k <= n; ++k) os << cost_csv_row(repmatch::cost_report(k, d, task)) << '\n';
  } else {
    const auto report = repmatch::cost_report(n, d, task);
    if (as_json)
      os << report.to_json() << '\n';
    else
      os << cost_csv_header() << '\n' << cost_csv_row(report) << '\n';
  }
  if (diagnostics && d == 2 && task == Task::kPermutation) {
    for (int k = (n % 2 == 0) ? n : n - 1; k >= 2; k -= 2) {
      os << repmatch::permutation_total_diagnostics(k).to_json() << '\n';
      if (!range) break;
    }
  }
  write_output(out, os.str());
  return 0;
}

int run_figure(const std::string& which, int d, int n_min, int n_max, int step,
               const std::string& out) {
  repmatch::FigureKind kind;
  if (which == "fig4")
    kind = repmatch::FigureKind::kFig4;
  else if (which == "fig5")
    kind = repmatch::FigureKind::kFig5;
  else if (which == "fig6")
    kind = repmatch::FigureKind::kFig6;
  else
    throw CLI::ValidationError("--which", "expected fig4, fig5, or fig6");

  // Per-figure defaults for unset flags.
  if (d <= 0) d = (kind == repmatch::FigureKind::kFig5) ? 4 : 2;
  if (n_min <= 0) n_min = (kind == repmatch::FigureKind::kFig5) ? 2 : 1;
  if (n_max <= 0) n_max = (kind == repmatch::FigureKind::kFig5) ? 60 : 100;
  if (step <= 0) step = (kind == repmatch::FigureKind::kFig5) ? 2 : 1;

  const auto series = repmatch::figure_series(kind, d, n_min, n_max, step);
  write_output(out, series.to_csv());
  return 0;
}

int run_simulate(const repmatch::SessionConfig& config, const std::string& emit,
                 const std::string& out) {
  const auto result = repmatch::execute_session(config);
  if (!emit.empty()) write_output(emit, result.transcript.to_json());
  write_output(out, result.summary_json);
  return result.ok ? 0 : 1;
}

int run_verify(const std::string& what, int n, int d, const std::string& task_name, int samples,
               uint64_t seed, const std::string& out) {
  nlohmann::json j;
  bool pass = false;
  if (what == "schur") {
    const auto basis = repmatch::build_schur_basis(n, d);
    const auto res = repmatch::verify_schur_basis(basis, samples > 0 ? samples : 20, seed);
    pass = res.max() < 1e-9;
    j = {{"what", "schur"},
         {"n", n},
         {"d", d},
         {"samples", samples > 0 ? samples : 20},
         {"unitarity", res.unitarity},
         {"su_off_block", res.su_off_block},
         {"sym_off_block", res.sym_off_block},
         {"su_block_unitarity", res.su_block_unitarity},
         {"sym_block_unitarity", res.sym_block_unitarity},
         {"max_residual", res.max()},
         {"pass", pass}};
  } else if (what == "bounds") {
    const auto report = repmatch::verify_bounds(n, d);
    pass = report.all_hold;
    j = nlohmann::json::parse(report.to_json());
    j["what"] = "bounds";
    j["pass"] = pass;
  } else if (what == "rank") {
    const Task task = parse_task(task_name);
    const auto report =
        repmatch::matrix_element_rank(n, d, repmatch::role_for(task), samples, 1e-8, seed);
    pass = report.stable && report.measured == report.expected;
    j = nlohmann::json::parse(report.to_json());
    j["what"] = "rank";
    j["n"] = n;
    j["d"] = d;
    j["task"] = repmatch::task_name(task);
    j["pass"] = pass;
  } else if (what == "identities") {
    // Exact block-dimension identities over the full grid up to (n, d):
    //   sum_lambda d_lambda * m_lambda = d^n
    //   sum_lambda d_lambda^2         = binomial(n + d^2 - 1, n)
    int checked = 0;
    pass = true;
    nlohmann::json failures = nlohmann::json::array();
    for (int dd = 2; dd <= d; ++dd) {
      for (int nn = 1; nn <= n; ++nn) {
        const auto table = repmatch::build_table(nn, dd, Role::kUnitaryArray);
        BigInt dim_sum = 0;
        for (const auto& e : table.entries) dim_sum += e.su_dim * e.sym_dim;
        const bool ok_dim = dim_sum == repmatch::pow_int(dd, nn);
        const bool ok_sq = table.d_tot_sq == repmatch::binomial(nn + dd * dd - 1, nn);
        ++checked;
        if (!ok_dim || !ok_sq) {
          pass = false;
          failures.push_back({{"n", nn}, {"d", dd}});
        }
      }
    }
    j = {{"what", "identities"},
         {"max_n", n},
         {"max_d", d},
         {"checked", checked},
         {"failures", failures},
         {"pass", pass}};
  } else {
    throw CLI::ValidationError("--what", "expected schur, bounds, rank, or identities");
  }
  write_output(out, j.dump(2));
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"representation-matching toolkit: exact block tables, communication costs, and "
               "two-station protocol simulations"};
  app.require_subcommand(1);

  std::string out;
  app.add_option("--out", out, "write output to this file instead of stdout")->capture_default_str();

  // ---- table ----
  auto* cmd_table = app.add_subcommand("table", "irreducible-block table as CSV");
  int t_n = 4, t_d = 2;
  std::string t_role = "unitary";
  cmd_table->add_option("--n", t_n, "number of systems")->required();
  cmd_table->add_option("--d", t_d, "local dimension")->required();
  cmd_table->add_option("--role", t_role, "unitary | permutation")->capture_default_str();

  // ---- costs ----
  auto* cmd_costs = app.add_subcommand("costs", "communication-cost report");
  int c_n = 4, c_d = 2;
  std::string c_task = "unitary";
  bool c_range = false, c_json = false, c_diag = false;
  cmd_costs->add_option("--n", c_n, "number of systems (range upper end with --range)")->required();
  cmd_costs->add_option("--d", c_d, "local dimension")->required();
  cmd_costs->add_option("--task", c_task, "unitary | permutation | conjugation | storage")
      ->capture_default_str();
  cmd_costs->add_flag("--range", c_range, "emit CSV rows for every n up to --n");
  cmd_costs->add_flag("--json", c_json, "emit a JSON report instead of CSV");
  cmd_costs->add_flag("--diagnostics", c_diag,
                      "append permutation-total closed-form diagnostics (d=2)");

  // ---- figure ----
  auto* cmd_figure = app.add_subcommand("figure", "CSV data series for the standard plots");
  std::string f_which;
  int f_d = 0, f_nmin = 0, f_nmax = 0, f_step = 0;
  cmd_figure->add_option("--which", f_which, "fig4 | fig5 | fig6")->required();
  cmd_figure->add_option("--d", f_d, "local dimension (default per figure)");
  cmd_figure->add_option("--nmin", f_nmin, "smallest n (default per figure)");
  cmd_figure->add_option("--nmax", f_nmax, "largest n (default per figure)");
  cmd_figure->add_option("--step", f_step, "n increment (default per figure)");

  // ---- simulate ----
  auto* cmd_sim = app.add_subcommand("simulate", "run a two-station protocol session");
  repmatch::SessionConfig config;
  std::string s_task = "unitary", s_emit;
  cmd_sim->add_option("--protocol", config.protocol, "repmatch | teleport | store-retrieve")
      ->capture_default_str();
  cmd_sim->add_option("--task", s_task, "unitary | permutation | conjugation")
      ->capture_default_str();
  cmd_sim->add_option("--n", config.n, "number of systems")->required();
  cmd_sim->add_option("--d", config.d, "local dimension")->required();
  cmd_sim->add_option("--trials", config.trials, "independent trials")->capture_default_str();
  cmd_sim->add_option("--seed", config.seed, "input/branch sampling seed")->capture_default_str();
  cmd_sim->add_option("--g-seed", config.g_seed, "target-draw seed")->capture_default_str();
  cmd_sim->add_option("--perm", config.perm, "target permutation in cycle notation, e.g. (1 2 3)");
  cmd_sim->add_flag("--until-success", config.until_success,
                    "repeat heralded rounds until success (repmatch only)");
  cmd_sim->add_option("--max-rounds", config.max_rounds,
                      "round cap for --until-success (0 = derive from --eps)");
  cmd_sim->add_option("--eps", config.eps, "target failure probability for --until-success")
      ->capture_default_str();
  cmd_sim->add_option("--ref-dim", config.ref_dim, "external reference-register dimension")
      ->capture_default_str();
  cmd_sim->add_option("--emit", s_emit, "write the last trial's transcript JSON to this file");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "numerical verification, nonzero exit on fail");
  std::string v_what, v_task = "unitary";
  int v_n = 3, v_d = 2, v_samples = 0;
  uint64_t v_seed = 0x5eedULL;
  cmd_verify->add_option("--what", v_what, "schur | bounds | rank | identities")->required();
  cmd_verify->add_option("--n", v_n, "n (grid upper end for identities)")->capture_default_str();
  cmd_verify->add_option("--d", v_d, "d (grid upper end for identities)")->capture_default_str();
  cmd_verify->add_option("--task", v_task, "task for rank witnesses")->capture_default_str();
  cmd_verify->add_option("--samples", v_samples, "sample count (0 = default)");
  cmd_verify->add_option("--seed", v_seed, "sampling seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_table) return run_table(t_n, t_d, t_role, out);
    if (*cmd_costs) return run_costs(c_n, c_d, c_task, c_range, c_json, c_diag, out);
    if (*cmd_figure) return run_figure(f_which, f_d, f_nmin, f_nmax, f_step, out);
    if (*cmd_sim) {
      config.task = parse_task(s_task);
      return run_simulate(config, s_emit, out);
    }
    if (*cmd_verify) return run_verify(v_what, v_n, v_d, v_task, v_samples, v_seed, out);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
