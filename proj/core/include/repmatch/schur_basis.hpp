#pragma once

#include "repmatch/irrep_table.hpp"
#include "repmatch/tensor_ops.hpp"

#include <random>
#include <string>
#include <vector>

namespace repmatch {

// Bumped whenever the construction's deterministic conventions (sweep order,
// phase fixing) change; cache files are keyed on it.
inline constexpr int kSchurBasisFormatVersion = 1;

struct SchurBlock {
  YoungDiagram lambda;
  int su_dim = 0;   // d_lambda
  int sym_dim = 0;  // m_lambda
  int offset = 0;   // first column of the block
  int size() const { return su_dim * sym_dim; }
  int column(int q, int alpha) const { return offset + q * sym_dim + alpha; }
};

// Orthonormal change of basis B on (C^d)^(x n) adapted to Schur-Weyl duality:
//   B^H U^(x n) B      = blockdiag_lambda( U^lambda (x) I_{m_lambda} )
//   B^H P_pi B         = blockdiag_lambda( I_{d_lambda} (x) V^lambda_pi )
// Columns are ordered block-major in canonical diagram order, then by the
// SU(d) index q (weight-descending generation order), then the multiplicity
// index alpha.
//
// Construction: within the weight-lambda subspace the common kernel of the
// raising operators sum_k E_{i,i+1}^(k) is exactly the highest-weight space of
// the lambda-isotypic component (dimension m_lambda); an orthonormal kernel
// basis seeds alpha. Each block is generated by applying lowering operators
// sum_k E_{ji}^(k) in a fixed (i,j)-lexicographic sweep, weight level by
// weight level, with twice-repeated Gram-Schmidt; the schedule recorded on the
// alpha = 0 copy is replayed verbatim on every other copy, which forces the
// extracted U^lambda to be alpha-independent. Phases: every highest-weight
// vector, and every alpha = 0 column, has its largest-magnitude amplitude
// rotated to the positive real axis; each q rotation is applied uniformly
// across alpha (per-column phases would break the (x) I_m structure).
class SchurBasis {
 public:
  int n = 0;
  int d = 0;
  std::vector<SchurBlock> blocks;
  Matrix matrix;  // d^n x d^n

  long long dim() const { return matrix.rows(); }
  int block_index(const YoungDiagram& lambda) const;
  const SchurBlock& block(const YoungDiagram& lambda) const;
  // Contiguous columns of one block.
  Eigen::Block<const Matrix, Eigen::Dynamic, Eigen::Dynamic, true> block_columns(int bi) const;
};

SchurBasis build_schur_basis(int n, int d);

// U^lambda_g extracted from multiplicity slot alpha (alpha-independent within
// numerical error; see su_alpha_spread).
Matrix su_irrep_matrix(const SchurBasis& basis, const YoungDiagram& lambda, const Matrix& g,
                       int alpha = 0);
// V^lambda_pi extracted at SU(d) index q.
Matrix sym_irrep_matrix(const SchurBasis& basis, const YoungDiagram& lambda,
                        const Permutation& pi, int q = 0);

// max_alpha max_entry | U^lambda(alpha) - U^lambda(0) |
double su_alpha_spread(const SchurBasis& basis, const YoungDiagram& lambda, const Matrix& g);
// max_q max_entry | V^lambda(q) - V^lambda(0) |
double sym_q_spread(const SchurBasis& basis, const YoungDiagram& lambda, const Permutation& pi);

struct BasisResiduals {
  double unitarity = 0;        // max |B^H B - I|
  double su_off_block = 0;     // max |U^(x n) B - B blockdiag(U^lambda (x) I)|
  double sym_off_block = 0;    // max |P_pi B - B blockdiag(I (x) V^lambda)|
  double su_block_unitarity = 0;   // worst extracted U^lambda unitarity defect
  double sym_block_unitarity = 0;  // worst extracted V^lambda unitarity defect
  double max() const;
};

// Residuals over `samples` Haar-SU(d) gates and `samples` uniform site
// permutations.
BasisResiduals verify_schur_basis(const SchurBasis& basis, int samples, uint64_t seed);

// Binary cache: magic + JSON header (format version, n, d, block index map)
// + row-major little-endian complex doubles.
void save_schur_basis(const SchurBasis& basis, const std::string& path);
SchurBasis load_schur_basis(const std::string& path);
std::string schur_cache_filename(int n, int d);

}  // namespace repmatch
