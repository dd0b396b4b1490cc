#pragma once

#include "repmatch/cost_model.hpp"
#include "repmatch/tensor_ops.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace repmatch {

struct RankReport {
  long long expected = 0;  // sum of squared representation dimensions
  long long measured = 0;  // numerical rank at the given tolerance
  bool stable = false;     // identical rank at tol/10 and tol*10
  double tol = 1e-8;
  int samples = 0;
  std::string to_json() const;
};

// Rank of the matrix whose rows are flattened n-fold target operators:
// U_{g_k}^(x n) for Haar samples (unitary-array role) or site permutation
// operators (permutation role; all n! are enumerated when n! <= 1000,
// otherwise uniformly sampled). sample_count <= 0 requests expected + 8 rows.
// Singular values above tol * sigma_max count toward the rank; the report is
// marked unstable when shifting the tolerance a decade either way changes it.
RankReport matrix_element_rank(int n, int d, Role role, int sample_count = 0, double tol = 1e-8,
                               uint64_t seed = 0x1decafe);

struct LowerBoundReport {
  int n = 0;
  int d = 0;
  Task task = Task::kUnitaryArray;
  int c_rm = 0;
  BigInt d_tot_sq;
  bool holds = false;  // 2^c_rm >= d_tot_sq
  std::optional<RankReport> rank;
  std::string to_json() const;
};

// The memory footprint any zero-error protocol needs covers the span of the
// target's matrix elements; check 2^c_rm >= d_tot_sq and optionally confirm
// the span dimension numerically.
LowerBoundReport check_lower_bound(int n, int d, Task task, bool with_rank = false,
                                   uint64_t seed = 0x1decafe);

}  // namespace repmatch
