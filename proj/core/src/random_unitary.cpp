#include "repmatch/random_unitary.hpp"

#include <cmath>
#include <stdexcept>

namespace repmatch {

Matrix haar_unitary(int d, std::mt19937_64& rng) {
  if (d < 1) throw std::invalid_argument("haar_unitary: need d >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= a > 0 ? rjj / a : Complex(1, 0);
  }
  return q;
}

Matrix haar_su(int d, std::mt19937_64& rng) {
  Matrix u = haar_unitary(d, rng);
  const Complex det = u.determinant();
  // remove the determinant phase by a global d-th root
  u *= std::exp(Complex(0, -std::arg(det) / d));
  return u;
}

Vector random_state(long long dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("random_state: need dim >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (long long i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

}  // namespace repmatch
