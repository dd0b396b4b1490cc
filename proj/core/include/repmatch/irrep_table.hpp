#pragma once

#include "repmatch/bigint.hpp"
#include "repmatch/young.hpp"

#include <functional>
#include <string>
#include <vector>

namespace repmatch {

// Which tensor factor of the Schur decomposition plays the "representation"
// role. For target gates of product form U^(x n) it is the SU(d) factor of
// dimension d_lambda; for site permutations it is the S(n) factor of
// dimension m_lambda.
enum class Role { kUnitaryArray, kPermutation };

std::string role_name(Role role);

struct IrrepEntry {
  YoungDiagram lambda;
  BigInt su_dim;   // d_lambda
  BigInt sym_dim;  // m_lambda

  const BigInt& rep_dim(Role role) const {
    return role == Role::kUnitaryArray ? su_dim : sym_dim;
  }
  const BigInt& mult_dim(Role role) const {
    return role == Role::kUnitaryArray ? sym_dim : su_dim;
  }
};

// The block structure of (C^d)^(x n): one entry per diagram in canonical
// (descending lexicographic) order, plus the aggregates of the chosen role's
// representation dimensions.
struct IrrepTable {
  int n = 0;
  int d = 0;
  Role role = Role::kUnitaryArray;
  std::vector<IrrepEntry> entries;

  BigInt d_R;       // max_lambda rep_dim
  BigInt d_tot;     // sum_lambda rep_dim
  BigInt d_tot_sq;  // sum_lambda rep_dim^2

  int block_count() const { return static_cast<int>(entries.size()); }
  // Index in canonical order; -1 if absent.
  int index_of(const YoungDiagram& lambda) const;

  // CSV with columns lambda,d_lambda,m_lambda followed by an aggregate
  // comment line.
  std::string to_csv() const;
};

IrrepTable build_table(int n, int d, Role role);

// Visits the table for every n in [0, n_max] in order, holding only one
// level in memory at a time. The multiplicities are filled by the branching
// rule m_lambda(n) = sum over corner-removed diagrams of m(n-1), which is far
// cheaper than per-entry factorial formulas on large grids; results agree
// with sym_dimension (tested). Use this instead of build_tables_up_to when
// the grid is large (all d=5 tables up to n=200 held at once are several GB).
void scan_tables_up_to(int n_max, int d, Role role,
                       const std::function<void(const IrrepTable&)>& visit);

// Tables for every n in [0, n_max] at once (collects scan_tables_up_to).
std::vector<IrrepTable> build_tables_up_to(int n_max, int d, Role role);

}  // namespace repmatch
