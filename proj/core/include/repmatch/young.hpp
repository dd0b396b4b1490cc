#pragma once

#include "repmatch/bigint.hpp"

#include <string>
#include <vector>

namespace repmatch {

// Partition of n into at most d parts, lambda_1 >= lambda_2 >= ... >= 0.
// Trailing zero rows are normalized away; two diagrams are equal iff their
// nonzero row sequences coincide.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);

  int row(int i) const { return i < static_cast<int>(rows_.size()) ? rows_[i] : 0; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int box_count() const;
  const std::vector<int>& rows() const { return rows_; }

  // Column heights, longest first (the conjugate partition).
  std::vector<int> column_heights() const;

  bool operator==(const YoungDiagram& o) const { return rows_ == o.rows_; }
  bool operator!=(const YoungDiagram& o) const { return rows_ != o.rows_; }
  // Descending lexicographic: larger first rows sort earlier.
  bool operator<(const YoungDiagram& o) const;

  std::string to_string() const;  // "[3,1]"; "[]" for the empty diagram

 private:
  std::vector<int> rows_;
};

// Cycle type of a permutation of n letters, stored as a partition of n.
using CycleType = YoungDiagram;

// All diagrams with n boxes and at most d rows, in descending lexicographic
// order: [n] first, the most balanced shape last.
std::vector<YoungDiagram> enumerate_diagrams(int n, int d);

// Dimension of the irreducible SU(d) representation with highest weight
// lambda:  d_lambda = prod_{i<j} (lambda_i - lambda_j - i + j) / prod_k k! .
BigInt su_dimension(const YoungDiagram& lambda, int d);

// Multiplicity of that representation in (C^d)^(x n): the dimension of the
// S(n) irrep of shape lambda,
//   m_lambda = n! * prod_{j<k} (l_j - l_k) / prod_i l_i!,  l_i = lambda_i + r - i,
// equivalently the number of standard Young tableaux of shape lambda.
BigInt sym_dimension(const YoungDiagram& lambda, int n, int d);

// Associated diagram: every column of height k is replaced by a column of
// height d - k and the columns are re-sorted. If pad_to >= 0, full columns of
// height d are prepended until the box count reaches pad_to (the box deficit
// must be a nonnegative multiple of d).
YoungDiagram associated_diagram(const YoungDiagram& lambda, int d, int pad_to = -1);

// Character chi^lambda(mu) of S(n), by the Murnaghan-Nakayama rule on
// beta-sets: removing a border strip of length t replaces a beta number b by
// b - t, with sign (-1)^(number of beta numbers strictly between b-t and b).
BigInt mn_character(const YoungDiagram& lambda, const CycleType& mu);

// Order of the centralizer of a permutation of cycle type mu:
// z_mu = prod_k k^(a_k) a_k!. The conjugacy class has size n!/z_mu.
BigInt centralizer_order(const CycleType& mu);

}  // namespace repmatch
