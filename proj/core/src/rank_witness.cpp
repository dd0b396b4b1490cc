#include "repmatch/rank_witness.hpp"

#include "repmatch/permutation.hpp"
#include "repmatch/random_unitary.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <stdexcept>

namespace repmatch {

namespace {

int rank_at(const Eigen::VectorXd& sv, double tol) {
  if (sv.size() == 0) return 0;
  const double cutoff = tol * sv[0];
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) ++rank;
  return rank;
}

Matrix nfold_gate_matrix(const Matrix& u, int n) {
  Matrix out = Matrix::Identity(1, 1);
  for (int k = 0; k < n; ++k) {
    Matrix next(out.rows() * u.rows(), out.cols() * u.cols());
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j)
        next.block(i * u.rows(), j * u.cols(), u.rows(), u.cols()) = out(i, j) * u;
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::string RankReport::to_json() const {
  nlohmann::json j;
  j["expected"] = expected;
  j["measured"] = measured;
  j["stable"] = stable;
  j["tol"] = tol;
  j["samples"] = samples;
  return j.dump(2);
}

RankReport matrix_element_rank(int n, int d, Role role, int sample_count, double tol,
                               uint64_t seed) {
  const long long dim = checked_power(d, n);
  const IrrepTable table = build_table(n, d, role);
  RankReport report;
  report.tol = tol;
  report.expected = table.d_tot_sq.convert_to<long long>();
  if (sample_count <= 0) sample_count = static_cast<int>(report.expected) + 8;

  const long long cols = dim * dim;
  if (cols > dimension_cap() * dimension_cap())
    throw std::runtime_error("flattened operators exceed the dimension cap");

  std::mt19937_64 rng(seed);
  std::vector<Matrix> ops;
  if (role == Role::kPermutation) {
    // The span of finitely many operators: enumerate the whole group when it
    // is small, otherwise oversample it.
    BigInt order = factorial(n);
    if (order <= 1000) {
      for (const Permutation& pi : Permutation::all(n)) ops.push_back(permutation_matrix(pi, d));
    } else {
      for (int s = 0; s < sample_count; ++s)
        ops.push_back(permutation_matrix(Permutation::random(n, rng), d));
    }
  } else {
    for (int s = 0; s < sample_count; ++s) ops.push_back(nfold_gate_matrix(haar_su(d, rng), n));
  }
  report.samples = static_cast<int>(ops.size());

  Matrix rows(static_cast<Eigen::Index>(ops.size()), cols);
  for (size_t s = 0; s < ops.size(); ++s) {
    Eigen::Map<const Vector> flat(ops[s].data(), cols);
    rows.row(static_cast<Eigen::Index>(s)) = flat.transpose();
  }
  Eigen::BDCSVD<Matrix> svd(rows);
  const Eigen::VectorXd sv = svd.singularValues();
  report.measured = rank_at(sv, tol);
  report.stable =
      rank_at(sv, tol * 0.1) == report.measured && rank_at(sv, tol * 10.0) == report.measured;
  return report;
}

std::string LowerBoundReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["d"] = d;
  j["task"] = task_name(task);
  j["c_rm"] = c_rm;
  j["d_tot_sq"] = d_tot_sq.str();
  j["holds"] = holds;
  if (rank) j["rank"] = nlohmann::json::parse(rank->to_json());
  return j.dump(2);
}

LowerBoundReport check_lower_bound(int n, int d, Task task, bool with_rank, uint64_t seed) {
  const CostReport costs = cost_report(n, d, task);
  LowerBoundReport report;
  report.n = n;
  report.d = d;
  report.task = task;
  report.c_rm = costs.c_rm;
  report.d_tot_sq = costs.d_tot_sq;
  report.holds = (BigInt(1) << costs.c_rm) >= costs.d_tot_sq;
  if (with_rank) report.rank = matrix_element_rank(n, d, role_for(task), 0, 1e-8, seed);
  return report;
}

}  // namespace repmatch
