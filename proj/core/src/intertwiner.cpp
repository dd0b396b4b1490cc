#include "repmatch/intertwiner.hpp"

#include "repmatch/random_unitary.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace repmatch {

namespace {

YoungDiagram padded_associated(const SchurBasis& basis_n, const SchurBasis& basis_m,
                               const YoungDiagram& lambda) {
  if (basis_n.d != basis_m.d) throw std::invalid_argument("bases have different local dimension");
  if (basis_m.n != (basis_n.d - 1) * basis_n.n)
    throw std::invalid_argument("conjugate basis must cover m = (d-1) n boxes");
  return associated_diagram(lambda, basis_n.d, basis_m.n);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace

Matrix conjugation_intertwiner(const SchurBasis& basis_n, const SchurBasis& basis_m,
                               const YoungDiagram& lambda, int samples, uint64_t seed) {
  const YoungDiagram bar = padded_associated(basis_n, basis_m, lambda);
  const int dl = basis_n.block(lambda).su_dim;
  if (basis_m.block(bar).su_dim != dl)
    throw std::logic_error("associated block dimension mismatch for " + lambda.to_string());

  // vec(X) is column-major: the constraint B X - X A = 0 becomes
  // (I (x) B - A^T (x) I) vec(X) = 0 with B = (U^lambda)^*, A = U^lambdabar.
  std::mt19937_64 rng(seed);
  const int sq = dl * dl;
  Matrix stacked(static_cast<Eigen::Index>(samples) * sq, sq);
  for (int k = 0; k < samples; ++k) {
    const Matrix g = haar_su(basis_n.d, rng);
    const Matrix b = su_irrep_matrix(basis_n, lambda, g).conjugate();
    const Matrix a = su_irrep_matrix(basis_m, bar, g);
    stacked.middleRows(static_cast<Eigen::Index>(k) * sq, sq) =
        kron(Matrix::Identity(dl, dl), b) - kron(a.transpose(), Matrix::Identity(dl, dl));
  }

  Eigen::BDCSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  // The floor matters for one-dimensional representations: both sides of the
  // constraint are the trivial block, the stacked matrix is zero up to
  // rounding, and a purely relative threshold would mistake that noise for
  // rank. Genuine constraints have singular values of order 1.
  const double tol = 1e-8 * std::max(sv.size() ? sv[0] : 0.0, 1.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > tol) ++rank;
  if (rank != sq - 1)
    throw std::logic_error("intertwiner null space for " + lambda.to_string() + " has dimension " +
                           std::to_string(sq - rank) + ", expected 1");

  Matrix v(dl, dl);
  for (int c = 0; c < dl; ++c)
    for (int r = 0; r < dl; ++r) v(r, c) = svd.matrixV()(c * dl + r, sq - 1);
  // Proportional to a unitary: rescale so its Frobenius norm is sqrt(dl), and
  // rotate the largest entry to the positive real axis.
  v *= std::sqrt(static_cast<double>(dl)) / v.norm();
  Eigen::Index rmax = 0, cmax = 0;
  v.cwiseAbs().maxCoeff(&rmax, &cmax);
  const Complex top = v(rmax, cmax);
  v *= std::conj(top) / std::abs(top);
  return v;
}

double intertwiner_residual(const SchurBasis& basis_n, const SchurBasis& basis_m,
                            const YoungDiagram& lambda, const Matrix& v, int samples,
                            uint64_t seed) {
  const YoungDiagram bar = padded_associated(basis_n, basis_m, lambda);
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    const Matrix g = haar_su(basis_n.d, rng);
    const Matrix lhs = su_irrep_matrix(basis_n, lambda, g).conjugate();
    const Matrix rhs = v * su_irrep_matrix(basis_m, bar, g) * v.adjoint();
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

ConjugationContext make_conjugation_context(const SchurBasis& basis_n,
                                            const SchurBasis& basis_m, int samples,
                                            uint64_t seed) {
  ConjugationContext ctx;
  ctx.basis_m = &basis_m;
  for (const SchurBlock& b : basis_n.blocks)
    ctx.intertwiners.push_back(
        conjugation_intertwiner(basis_n, basis_m, b.lambda, samples, seed));
  return ctx;
}

Matrix conjugated_block(const SchurBasis& basis_n, const ConjugationContext& ctx, int block_index,
                        const Matrix& g) {
  const SchurBlock& b = basis_n.blocks.at(static_cast<size_t>(block_index));
  const YoungDiagram bar = padded_associated(basis_n, *ctx.basis_m, b.lambda);
  const Matrix& v = ctx.intertwiners.at(static_cast<size_t>(block_index));
  return v * su_irrep_matrix(*ctx.basis_m, bar, g) * v.adjoint();
}

}  // namespace repmatch
