#pragma once

#include "repmatch/schur_basis.hpp"

#include <cstdint>
#include <vector>

namespace repmatch {

// Unitary V with (U^lambda_g)^* = V U^{lambdabar}_g V^H for all g in SU(d),
// where lambdabar is the associated diagram of lambda padded to pad_to boxes
// (pad_to = (d-1) * n makes the conjugate block reachable with that many
// queries of g). basis_n must hold lambda, basis_m must hold the padded
// associated diagram.
//
// Found by stacking the linear intertwiner constraints
// (U^lambda_{g_k})^* X = X U^{lambdabar}_{g_k} over sampled gates, taking the
// one-dimensional null space, and rescaling the solution to a unitary (it is
// proportional to one, the two irreps being equivalent); the sign/phase is
// fixed by rotating the largest-magnitude entry to the positive real axis.
Matrix conjugation_intertwiner(const SchurBasis& basis_n, const SchurBasis& basis_m,
                               const YoungDiagram& lambda, int samples = 6,
                               uint64_t seed = 0x5eed1234);

// max entry of | (U^lambda_g)^* - V U^{lambdabar}_g V^H | over fresh samples.
double intertwiner_residual(const SchurBasis& basis_n, const SchurBasis& basis_m,
                            const YoungDiagram& lambda, const Matrix& v, int samples,
                            uint64_t seed);

// Everything the conjugation target needs: the m = (d-1)n box basis and one
// intertwiner per block of the n-box basis, in canonical order.
struct ConjugationContext {
  const SchurBasis* basis_m = nullptr;
  std::vector<Matrix> intertwiners;
};

ConjugationContext make_conjugation_context(const SchurBasis& basis_n,
                                            const SchurBasis& basis_m, int samples = 6,
                                            uint64_t seed = 0x5eed1234);

// The block the conjugation target applies in place of U^lambda:
// V U^{lambdabar}_g V^H, equal to (U^lambda_g)^* within the intertwiner
// residual.
Matrix conjugated_block(const SchurBasis& basis_n, const ConjugationContext& ctx, int block_index,
                        const Matrix& g);

}  // namespace repmatch
