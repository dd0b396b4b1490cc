#include "repmatch/cost_model.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace repmatch {

std::string task_name(Task task) {
  switch (task) {
    case Task::kUnitaryArray: return "unitary-array";
    case Task::kPermutation: return "permutation";
    case Task::kConjugation: return "conjugation";
    case Task::kStorageRetrieval: return "storage-retrieval";
  }
  return "?";
}

std::optional<Task> task_from_name(const std::string& name) {
  if (name == "unitary-array" || name == "unitary") return Task::kUnitaryArray;
  if (name == "permutation") return Task::kPermutation;
  if (name == "conjugation") return Task::kConjugation;
  if (name == "storage-retrieval" || name == "store-retrieve" || name == "storage")
    return Task::kStorageRetrieval;
  return std::nullopt;
}

Role role_for(Task task) {
  return task == Task::kPermutation ? Role::kPermutation : Role::kUnitaryArray;
}

CostReport cost_report(const IrrepTable& table, Task task) {
  if (table.role != role_for(task))
    throw std::invalid_argument("cost_report: table role does not match task");
  CostReport r;
  r.n = table.n;
  r.d = table.d;
  r.task = task;
  r.num_diagrams = table.block_count();
  r.d_R = table.d_R;
  r.d_tot = table.d_tot;
  r.d_tot_sq = table.d_tot_sq;
  r.c_rm = ceil_log2(r.d_R) + ceil_log2(r.d_tot);
  r.c_max = 2 * ceil_log2(r.d_tot);
  r.c_min = ceil_log2(r.d_tot_sq);
  r.c_rs = r.c_min;
  r.c_naive = table.n * ceil_log2(BigInt(table.d) * table.d);
  r.delta_c = r.c_max - r.c_rm;
  r.small_delta_c = r.c_rm - r.c_min;
  r.p_rm = BigRat(BigInt(1), r.num_diagrams);
  r.p_tele = BigRat(BigInt(1), r.d_tot * r.d_tot);
  r.p_rs = BigRat(BigInt(1), r.d_tot_sq);
  r.p_naive = BigRat(BigInt(1), pow_int(BigInt(table.d), 2 * table.n));
  return r;
}

CostReport cost_report(int n, int d, Task task) {
  if (n < 1 || d < 2) throw std::invalid_argument("cost_report: need n >= 1, d >= 2");
  return cost_report(build_table(n, d, role_for(task)), task);
}

std::string CostReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["d"] = d;
  j["task"] = task_name(task);
  j["num_diagrams"] = num_diagrams.str();
  j["d_R"] = d_R.str();
  j["d_tot"] = d_tot.str();
  j["d_tot_sq"] = d_tot_sq.str();
  j["c_rm"] = c_rm;
  j["c_max"] = c_max;
  j["c_min"] = c_min;
  j["c_rs"] = c_rs;
  j["c_naive"] = c_naive;
  j["delta_c"] = delta_c;
  j["small_delta_c"] = small_delta_c;
  j["p_rm"] = rational_string(p_rm);
  j["p_tele"] = rational_string(p_tele);
  j["p_rs"] = rational_string(p_rs);
  j["p_naive"] = rational_string(p_naive);
  j["p_rm_decimal"] = to_decimal(p_rm);
  j["p_tele_decimal"] = to_decimal(p_tele);
  j["p_rs_decimal"] = to_decimal(p_rs);
  j["p_naive_decimal"] = to_decimal(p_naive);
  return j.dump(2);
}

long long amplify_rounds(const BigRat& p, const BigRat& eps) {
  if (p <= 0 || p > 1) throw std::invalid_argument("amplify_rounds: need 0 < p <= 1");
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("amplify_rounds: need 0 < eps < 1");
  if (p == 1) return 1;
  const BigRat q = BigRat(1) - p;
  // Exact incremental products; the values in scope keep k small.
  BigRat pw = 1;
  for (long long k = 1; k <= 1000000; ++k) {
    pw *= q;
    if (pw <= eps) return k;
  }
  const long double lq = std::log(static_cast<long double>(q));
  const long double le = std::log(static_cast<long double>(eps));
  return static_cast<long long>(std::ceil(le / lq));
}

namespace {

const char* figure_name(FigureKind k) {
  switch (k) {
    case FigureKind::kFig4: return "fig4";
    case FigureKind::kFig5: return "fig5";
    case FigureKind::kFig6: return "fig6";
  }
  return "?";
}

}  // namespace

std::string FigureSeries::to_csv() const {
  std::string out;
  switch (kind) {
    case FigureKind::kFig4:
      out = "n,c_rm,c_min,c_max\n";
      for (const auto& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.c_rm) + "," +
               std::to_string(r.c_min) + "," + std::to_string(r.c_max) + "\n";
      break;
    case FigureKind::kFig5:
      out = "n,delta_c,small_delta_c\n";
      for (const auto& r : rows)
        out += std::to_string(r.n) + "," + std::to_string(r.delta_c) + "," +
               std::to_string(r.small_delta_c) + "\n";
      break;
    case FigureKind::kFig6:
      out = "n,p_rm,p_rm_decimal,p_tele,p_tele_decimal\n";
      for (const auto& r : rows)
        out += std::to_string(r.n) + "," + rational_string(r.p_rm) + "," + to_decimal(r.p_rm) +
               "," + rational_string(r.p_tele) + "," + to_decimal(r.p_tele) + "\n";
      break;
  }
  return out;
}

FigureSeries figure_series(FigureKind kind, int d, int n_min, int n_max, int step) {
  if (n_min < 1 || n_max < n_min || step < 1)
    throw std::invalid_argument("figure_series: bad n range");
  const Task task = kind == FigureKind::kFig5 ? Task::kPermutation : Task::kUnitaryArray;
  FigureSeries s;
  s.kind = kind;
  s.d = d;
  const auto tables = build_tables_up_to(n_max, d, role_for(task));
  for (int n = n_min; n <= n_max; n += step)
    s.rows.push_back(cost_report(tables[static_cast<size_t>(n)], task));
  return s;
}

BoundsReport verify_bounds(int n, int d) {
  if (n < 1 || d < 2) throw std::invalid_argument("verify_bounds: need n >= 1, d >= 2");
  const IrrepTable t = build_table(n, d, Role::kUnitaryArray);
  const BigInt np1 = n + 1;
  BoundsReport rep;
  rep.n = n;
  rep.d = d;

  auto add = [&rep](std::string name, const BigInt& lhs, const BigInt& rhs) {
    rep.checks.push_back({std::move(name), lhs.str(), rhs.str(), lhs <= rhs});
  };
  add("num_diagrams <= (n+1)^(d-1)", t.block_count(), pow_int(np1, d - 1));
  add("d_R <= (n+1)^(d(d-1)/2)", t.d_R, pow_int(np1, d * (d - 1) / 2));
  add("d_tot <= (n+1)^((d+2)(d-1)/2)", t.d_tot, pow_int(np1, (d + 2) * (d - 1) / 2));

  // c_rm <= (d^2-1) log2(n+1) + 2, exactly: 2^(c_rm-2) <= (n+1)^(d^2-1).
  const int c_rm = ceil_log2(t.d_R) + ceil_log2(t.d_tot);
  const BigInt lhs = c_rm >= 2 ? pow_int(BigInt(2), c_rm - 2) : BigInt(0);
  add("2^(c_rm-2) <= (n+1)^(d^2-1)", lhs, pow_int(np1, d * d - 1));

  rep.all_hold = true;
  for (const auto& c : rep.checks) rep.all_hold = rep.all_hold && c.holds;
  return rep;
}

std::string BoundsReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["d"] = d;
  j["all_hold"] = all_hold;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds}});
  }
  return j.dump(2);
}

PermutationTotalDiagnostics permutation_total_diagnostics(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("permutation_total_diagnostics: needs even n >= 2");
  PermutationTotalDiagnostics diag;
  diag.n = n;
  diag.direct_sum = build_table(n, 2, Role::kPermutation).d_tot;
  diag.closed_form = BigRat(BigInt(n + 2) * binomial(n + 1, n / 2), BigInt(n + 1));
  return diag;
}

std::string PermutationTotalDiagnostics::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["d_tot_direct"] = direct_sum.str();
  j["d_tot_closed_form"] = rational_string(closed_form);
  j["ratio_direct_over_closed"] =
      rational_string(BigRat(direct_sum) / closed_form);
  return j.dump(2);
}

}  // namespace repmatch
