#pragma once

#include "repmatch/permutation.hpp"

#include <Eigen/Dense>

#include <complex>

namespace repmatch {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Exponential-size objects are guarded: d^n may not exceed the configured cap
// (default 4096; env REPMATCH_DIM_CAP overrides, with a warning on stderr the
// first time a raised cap is used).
long long dimension_cap();
// d^n, throwing std::runtime_error when it exceeds the cap.
long long checked_power(int d, int n);

// States are vectors of dimension d^n * ref_dim. Basis index
// x = (((i_1 d + i_2) d + ...) d + i_n) * ref_dim + e: site 1 is the most
// significant digit, the reference register the least significant factor.
Vector apply_single_site(const Matrix& u, int site, int n, int d, const Vector& psi,
                         int ref_dim = 1);
Vector apply_gate_array(const Matrix& u, int n, int d, const Vector& psi, int ref_dim = 1);
// |i_1 ... i_n> -> |i_{pi^{-1}(1)} ... i_{pi^{-1}(n)}>: site k's content moves
// to site pi(k), so P_pi P_sigma = P_{pi sigma}.
Vector apply_site_permutation(const Permutation& pi, int d, const Vector& psi, int ref_dim = 1);
Matrix permutation_matrix(const Permutation& pi, int d);

double fidelity(const Vector& a, const Vector& b);  // |<a|b>|^2 / (|a|^2 |b|^2)

}  // namespace repmatch
