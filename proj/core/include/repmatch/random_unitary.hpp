#pragma once

#include "repmatch/tensor_ops.hpp"

#include <random>

namespace repmatch {

// Haar-distributed U(d): QR of a complex Ginibre matrix with the R-diagonal
// phase correction (without it the distribution is not Haar).
Matrix haar_unitary(int d, std::mt19937_64& rng);

// Haar SU(d): haar_unitary with the determinant normalized away by a global
// phase, det = 1 within 1e-10.
Matrix haar_su(int d, std::mt19937_64& rng);

// Unit vector, complex-Gaussian direction.
Vector random_state(long long dim, std::mt19937_64& rng);

}  // namespace repmatch
