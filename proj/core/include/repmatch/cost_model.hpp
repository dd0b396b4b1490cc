#pragma once

#include "repmatch/bigint.hpp"
#include "repmatch/irrep_table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace repmatch {

enum class Task { kUnitaryArray, kPermutation, kConjugation, kStorageRetrieval };

std::string task_name(Task task);
std::optional<Task> task_from_name(const std::string& name);

// Conjugation compresses the same block structure as the n-copy unitary array
// (the associated diagrams have equal dimensions), so it shares the
// unitary-array role; only the permutation task swaps the factors.
Role role_for(Task task);

// One-shot qubit costs and success probabilities for a target on n qudits of
// dimension d:
//   c_rm  = ceil(log2 d_R) + ceil(log2 d_tot)   forward + backward legs
//   c_max = 2 ceil(log2 d_tot)                  gate teleportation
//   c_min = ceil(log2 d_tot_sq)                 lower bound / storage-retrieval
struct CostReport {
  int n = 0;
  int d = 0;
  Task task = Task::kUnitaryArray;

  BigInt num_diagrams;  // |R|
  BigInt d_R, d_tot, d_tot_sq;

  int c_rm = 0;
  int c_max = 0;
  int c_min = 0;
  int c_rs = 0;         // memory cost of storage-retrieval, = c_min
  int c_naive = 0;      // n * ceil(log2 d^2): send every gate description
  int delta_c = 0;      // c_max - c_rm, saving over teleportation
  int small_delta_c = 0;  // c_rm - c_min, overhead above the lower bound

  BigRat p_rm, p_tele, p_rs, p_naive;

  std::string to_json() const;  // exact values rendered as strings
};

CostReport cost_report(int n, int d, Task task);
CostReport cost_report(const IrrepTable& table, Task task);

// Smallest k with (1 - p)^k <= eps (k = 1 when p = 1). Exact rational
// comparison; falls back to long-double logarithms only when the exact k
// would exceed 10^6 iterations.
long long amplify_rounds(const BigRat& p, const BigRat& eps);

enum class FigureKind { kFig4, kFig5, kFig6 };

struct FigureSeries {
  FigureKind kind;
  int d;
  std::vector<CostReport> rows;  // one per n in the requested range
  std::string to_csv() const;
};

// Defaults per figure: fig4 (n, c_rm, c_min, c_max), unitary role; fig5
// (n, delta_c, small_delta_c), permutation role, d=4, even n; fig6
// (n, p_rm, p_tele), d=2, rationals plus decimal columns.
FigureSeries figure_series(FigureKind kind, int d, int n_min, int n_max, int step);

struct BoundCheck {
  std::string name;
  std::string lhs, rhs;  // exact integers as strings
  bool holds = false;
};

struct BoundsReport {
  int n = 0, d = 0;
  std::vector<BoundCheck> checks;
  bool all_hold = false;
  std::string to_json() const;
};

// Polynomial sanity bounds: |R| <= (n+1)^(d-1), d_R <= (n+1)^(d(d-1)/2),
// d_tot <= (n+1)^((d+2)(d-1)/2), and c_rm <= (d^2-1) log2(n+1) + 2, the last
// compared exactly as 2^(c_rm-2) <= (n+1)^(d^2-1).
BoundsReport verify_bounds(int n, int d);

// A textbook-looking closed form for the permutation-role d_tot at d=2 (even n),
// ((n+2)/(n+1)) * binomial(n+1, n/2), disagrees with direct summation by an
// exact factor of 2 at every even n. Diagnostics expose both values; nothing
// downstream consumes the closed form.
struct PermutationTotalDiagnostics {
  int n = 0;
  BigInt direct_sum;
  BigRat closed_form;
  std::string to_json() const;
};

PermutationTotalDiagnostics permutation_total_diagnostics(int n);

}  // namespace repmatch
