#include "repmatch/tensor_ops.hpp"

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

namespace repmatch {

long long dimension_cap() {
  static const long long cap = [] {
    long long v = 4096;
    if (const char* env = std::getenv("REPMATCH_DIM_CAP")) {
      try {
        v = std::stoll(env);
      } catch (...) {
        throw std::runtime_error("REPMATCH_DIM_CAP is not an integer");
      }
      if (v < 1) throw std::runtime_error("REPMATCH_DIM_CAP must be >= 1");
      if (v > 4096)
        std::cerr << "warning: REPMATCH_DIM_CAP raised to " << v
                  << "; dense objects scale as the square of this\n";
    }
    return v;
  }();
  return cap;
}

long long checked_power(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("checked_power: need d >= 1, n >= 0");
  const long long cap = dimension_cap();
  long long v = 1;
  for (int i = 0; i < n; ++i) {
    v *= d;
    if (v > cap)
      throw std::runtime_error("dimension d^n = " + std::to_string(d) + "^" + std::to_string(n) +
                               " exceeds the cap of " + std::to_string(cap) +
                               " (set REPMATCH_DIM_CAP to raise)");
  }
  return v;
}

Vector apply_single_site(const Matrix& u, int site, int n, int d, const Vector& psi,
                         int ref_dim) {
  if (u.rows() != d || u.cols() != d) throw std::invalid_argument("apply_single_site: bad gate");
  if (site < 0 || site >= n) throw std::invalid_argument("apply_single_site: bad site");
  const long long dim = checked_power(d, n);
  if (psi.size() != dim * ref_dim) throw std::invalid_argument("apply_single_site: bad state");
  // stride of the site's digit; block = everything less significant than it.
  long long stride = ref_dim;
  for (int k = n - 1; k > site; --k) stride *= d;
  const long long outer = (dim * ref_dim) / (stride * d);
  Vector out(psi.size());
  for (long long o = 0; o < outer; ++o) {
    const long long base = o * stride * d;
    for (long long s = 0; s < stride; ++s) {
      for (int a = 0; a < d; ++a) {
        Complex acc = 0;
        for (int b = 0; b < d; ++b) acc += u(a, b) * psi[base + b * stride + s];
        out[base + a * stride + s] = acc;
      }
    }
  }
  return out;
}

Vector apply_gate_array(const Matrix& u, int n, int d, const Vector& psi, int ref_dim) {
  Vector out = psi;
  for (int site = 0; site < n; ++site) out = apply_single_site(u, site, n, d, out, ref_dim);
  return out;
}

Vector apply_site_permutation(const Permutation& pi, int d, const Vector& psi, int ref_dim) {
  const int n = pi.size();
  const long long dim = checked_power(d, n);
  if (psi.size() != dim * ref_dim)
    throw std::invalid_argument("apply_site_permutation: bad state");
  // digit strides, site 0 most significant
  std::vector<long long> stride(static_cast<size_t>(n));
  long long s = 1;
  for (int k = n - 1; k >= 0; --k) {
    stride[static_cast<size_t>(k)] = s;
    s *= d;
  }
  Vector out(psi.size());
  std::vector<int> digits(static_cast<size_t>(n));
  for (long long x = 0; x < dim; ++x) {
    long long r = x;
    for (int k = 0; k < n; ++k) {
      digits[static_cast<size_t>(k)] = static_cast<int>(r / stride[static_cast<size_t>(k)]);
      r %= stride[static_cast<size_t>(k)];
    }
    long long y = 0;
    for (int k = 0; k < n; ++k) y += digits[static_cast<size_t>(k)] * stride[static_cast<size_t>(pi(k))];
    for (int e = 0; e < ref_dim; ++e) out[y * ref_dim + e] = psi[x * ref_dim + e];
  }
  return out;
}

Matrix permutation_matrix(const Permutation& pi, int d) {
  const long long dim = checked_power(d, pi.size());
  Matrix m = Matrix::Zero(dim, dim);
  Vector basis = Vector::Zero(dim);
  for (long long x = 0; x < dim; ++x) {
    basis[x] = 1;
    Vector img = apply_site_permutation(pi, d, basis);
    for (long long y = 0; y < dim; ++y)
      if (img[y] != Complex(0)) m(y, x) = img[y];
    basis[x] = 0;
  }
  return m;
}

double fidelity(const Vector& a, const Vector& b) {
  const double na = a.squaredNorm(), nb = b.squaredNorm();
  if (na == 0 || nb == 0) throw std::invalid_argument("fidelity: zero vector");
  return std::norm(a.dot(b)) / (na * nb);
}

}  // namespace repmatch
