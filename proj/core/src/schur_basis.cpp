#include "repmatch/schur_basis.hpp"

#include "repmatch/random_unitary.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

namespace repmatch {

namespace {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using json = nlohmann::json;

int to_int(const BigInt& v, const char* what) {
  if (v < 0 || v > BigInt(1) << 30) throw std::overflow_error(std::string(what) + " out of int range");
  return static_cast<int>(v.convert_to<long long>());
}

struct SiteIndex {
  int n, d;
  long long dim;
  std::vector<long long> stride;  // site 0 most significant

  SiteIndex(int n_, int d_) : n(n_), d(d_), dim(checked_power(d_, n_)), stride(n_) {
    long long s = 1;
    for (int k = n - 1; k >= 0; --k) {
      stride[static_cast<size_t>(k)] = s;
      s *= d;
    }
  }
  int digit(long long x, int site) const {
    return static_cast<int>((x / stride[static_cast<size_t>(site)]) % d);
  }
  std::vector<int> weight(long long x) const {
    std::vector<int> w(static_cast<size_t>(d), 0);
    for (int k = 0; k < n; ++k) ++w[static_cast<size_t>(digit(x, k))];
    return w;
  }
};

// sum_k E^{(k)}_{to,from}: replaces one letter `from` by `to` at each site in
// turn and adds the results. Raising uses (to, from) = (i, i+1); a general
// lowering step uses (to, from) = (j, i) with j > i.
RealVector letter_move(const SiteIndex& ix, const RealVector& v, int from, int to) {
  RealVector out = RealVector::Zero(ix.dim);
  const long long shift_per_stride = to - from;
  for (long long x = 0; x < ix.dim; ++x) {
    const double a = v[x];
    if (a == 0.0) continue;
    for (int k = 0; k < ix.n; ++k)
      if (ix.digit(x, k) == from) out[x + shift_per_stride * ix.stride[static_cast<size_t>(k)]] += a;
  }
  return out;
}

// Flip sign so the largest-magnitude entry is positive (ties: lowest index).
void canonical_sign(RealVector& v) {
  int best = 0;
  double mag = std::abs(v[0]);
  for (int i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > mag) {
      mag = std::abs(v[i]);
      best = i;
    }
  if (v[best] < 0) v = -v;
}

// Two rounds of classical Gram-Schmidt against the first `count` columns.
void orthogonalize(const std::vector<RealVector>& cols, size_t count, RealVector& v) {
  for (int round = 0; round < 2; ++round)
    for (size_t c = 0; c < count; ++c) v -= cols[c].dot(v) * cols[c];
}

struct ScheduleStep {
  int src;      // column index the lowering operator is applied to
  int from;     // letter moved: from -> to, from < to
  int to;
  double sign;  // canonical sign chosen on the alpha = 0 copy
  double norm;  // post-orthogonalization norm on the alpha = 0 copy
};

// Orthonormal basis of the highest-weight space of the lambda block: the
// common kernel of the raising operators restricted to the weight-lambda
// subspace.
std::vector<RealVector> highest_weight_vectors(const SiteIndex& ix, const YoungDiagram& lambda,
                                               int expected) {
  // Enumerate the weight-lambda computational states.
  std::vector<int> content(static_cast<size_t>(ix.d), 0);
  for (int i = 0; i < lambda.row_count(); ++i) content[static_cast<size_t>(i)] = lambda.row(i);
  std::vector<long long> states;
  std::map<long long, int> pos;
  for (long long x = 0; x < ix.dim; ++x)
    if (ix.weight(x) == content) {
      pos[x] = static_cast<int>(states.size());
      states.push_back(x);
    }
  const int w = static_cast<int>(states.size());
  if (w < expected) throw std::logic_error("weight space smaller than multiplicity");

  // Stack the raising operators' matrices on this weight space. Raising
  // letter i+1 -> i lands in the weight (content + e_i - e_{i+1}) subspace.
  struct Entry {
    int row, col;
  };
  std::vector<Entry> trips;
  int rows = 0;
  for (int i = 0; i + 1 < ix.d; ++i) {
    if (content[static_cast<size_t>(i) + 1] == 0) continue;  // operator annihilates the space
    std::map<long long, int> target;
    for (int c = 0; c < w; ++c) {
      const long long x = states[static_cast<size_t>(c)];
      for (int k = 0; k < ix.n; ++k) {
        if (ix.digit(x, k) != i + 1) continue;
        const long long y = x - ix.stride[static_cast<size_t>(k)];
        auto [it, fresh] = target.emplace(y, rows + static_cast<int>(target.size()));
        (void)fresh;
        trips.push_back({it->second, c});
      }
    }
    rows += static_cast<int>(target.size());
  }

  std::vector<RealVector> hw;
  if (rows == 0) {
    // Whole weight space is highest weight (only happens for lambda = (n)).
    for (int c = 0; c < w; ++c) {
      RealVector v = RealVector::Zero(ix.dim);
      v[states[static_cast<size_t>(c)]] = 1.0;
      hw.push_back(std::move(v));
    }
  } else {
    RealMatrix a = RealMatrix::Zero(rows, w);
    for (const auto& t : trips) a(t.row, t.col) += 1.0;
    Eigen::BDCSVD<RealMatrix> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double tol = 1e-10 * std::max(rows, w) * (sv.size() ? sv[0] : 0.0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv[i] > tol) ++rank;
    for (int c = rank; c < w; ++c) {
      RealVector v = RealVector::Zero(ix.dim);
      for (int r = 0; r < w; ++r) v[states[static_cast<size_t>(r)]] = svd.matrixV()(r, c);
      hw.push_back(std::move(v));
    }
  }
  if (static_cast<int>(hw.size()) != expected)
    throw std::logic_error("highest-weight space of " + lambda.to_string() + " has dimension " +
                           std::to_string(hw.size()) + ", expected " + std::to_string(expected));
  // Re-orthonormalize (identity basis / SVD columns are already orthonormal,
  // this only fixes roundoff) and fix signs.
  for (size_t a = 0; a < hw.size(); ++a) {
    orthogonalize(hw, a, hw[a]);
    hw[a].normalize();
    canonical_sign(hw[a]);
  }
  return hw;
}

// Orders column indices by weight (descending lexicographic), then insertion.
std::vector<int> sweep_order(const std::vector<std::vector<int>>& weights) {
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[static_cast<size_t>(a)] > weights[static_cast<size_t>(b)]; });
  return order;
}

// Generates the alpha = 0 copy of a block from its highest-weight vector,
// recording the accepted lowering steps.
void generate_reference_copy(const SiteIndex& ix, const RealVector& hw,
                             const std::vector<int>& hw_weight, int su_dim,
                             std::vector<RealVector>& cols, std::vector<ScheduleStep>& schedule) {
  cols.clear();
  schedule.clear();
  cols.push_back(hw);
  std::vector<std::vector<int>> weights{hw_weight};
  constexpr double kAccept = 1e-6;
  bool progress = true;
  while (progress && static_cast<int>(cols.size()) < su_dim) {
    progress = false;
    const std::vector<int> order = sweep_order(weights);
    for (int src : order) {
      for (int i = 0; i + 1 < ix.d && static_cast<int>(cols.size()) < su_dim; ++i) {
        for (int j = i + 1; j < ix.d && static_cast<int>(cols.size()) < su_dim; ++j) {
          RealVector cand = letter_move(ix, cols[static_cast<size_t>(src)], i, j);
          const double raw = cand.norm();
          if (raw < kAccept) continue;
          orthogonalize(cols, cols.size(), cand);
          const double nrm = cand.norm();
          if (nrm < kAccept * raw) continue;
          cand /= nrm;
          const RealVector before = cand;
          canonical_sign(cand);
          const double sign = (cand == before) ? 1.0 : -1.0;
          std::vector<int> w = weights[static_cast<size_t>(src)];
          --w[static_cast<size_t>(i)];
          ++w[static_cast<size_t>(j)];
          cols.push_back(std::move(cand));
          weights.push_back(std::move(w));
          schedule.push_back({src, i, j, sign, nrm});
          progress = true;
        }
      }
    }
  }
  if (static_cast<int>(cols.size()) != su_dim)
    throw std::logic_error("lowering sweep produced " + std::to_string(cols.size()) +
                           " columns, expected " + std::to_string(su_dim));
}

// Replays the recorded schedule on another highest-weight vector. Exactly the
// same inner products arise as on the reference copy (the two copies are
// related by an intertwiner), so the recorded signs and norms carry over.
void replay_copy(const SiteIndex& ix, const RealVector& hw,
                 const std::vector<ScheduleStep>& schedule, std::vector<RealVector>& cols) {
  cols.clear();
  cols.push_back(hw);
  for (const auto& step : schedule) {
    RealVector cand = letter_move(ix, cols[static_cast<size_t>(step.src)], step.from, step.to);
    orthogonalize(cols, cols.size(), cand);
    const double nrm = cand.norm();
    if (std::abs(nrm - step.norm) > 1e-6 * (1.0 + step.norm))
      throw std::logic_error("schedule replay diverged from the reference copy");
    cols.push_back(step.sign / nrm * cand);
  }
}

bool platform_is_little_endian() {
  const uint32_t probe = 1;
  uint8_t first;
  std::memcpy(&first, &probe, 1);
  return first == 1;
}

}  // namespace

int SchurBasis::block_index(const YoungDiagram& lambda) const {
  for (size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].lambda == lambda) return static_cast<int>(i);
  throw std::out_of_range("no block for diagram " + lambda.to_string());
}

const SchurBlock& SchurBasis::block(const YoungDiagram& lambda) const {
  return blocks[static_cast<size_t>(block_index(lambda))];
}

Eigen::Block<const Matrix, Eigen::Dynamic, Eigen::Dynamic, true> SchurBasis::block_columns(int bi) const {
  const SchurBlock& b = blocks[static_cast<size_t>(bi)];
  return matrix.middleCols(b.offset, b.size());
}

SchurBasis build_schur_basis(int n, int d) {
  const SiteIndex ix(n, d);
  const IrrepTable table = build_table(n, d, Role::kUnitaryArray);

  SchurBasis basis;
  basis.n = n;
  basis.d = d;
  RealMatrix cols = RealMatrix::Zero(ix.dim, ix.dim);

  int offset = 0;
  for (const IrrepEntry& entry : table.entries) {
    SchurBlock block;
    block.lambda = entry.lambda;
    block.su_dim = to_int(entry.su_dim, "su_dim");
    block.sym_dim = to_int(entry.sym_dim, "sym_dim");
    block.offset = offset;

    const std::vector<RealVector> hw = highest_weight_vectors(ix, entry.lambda, block.sym_dim);
    std::vector<int> content(static_cast<size_t>(d), 0);
    for (int i = 0; i < entry.lambda.row_count(); ++i)
      content[static_cast<size_t>(i)] = entry.lambda.row(i);
    std::vector<ScheduleStep> schedule;
    for (int alpha = 0; alpha < block.sym_dim; ++alpha) {
      std::vector<RealVector> copy;
      if (alpha == 0)
        generate_reference_copy(ix, hw[0], content, block.su_dim, copy, schedule);
      else
        replay_copy(ix, hw[static_cast<size_t>(alpha)], schedule, copy);
      for (int q = 0; q < block.su_dim; ++q)
        cols.col(block.column(q, alpha)) = copy[static_cast<size_t>(q)];
    }

    offset += block.size();
    basis.blocks.push_back(std::move(block));
  }
  if (offset != ix.dim) throw std::logic_error("Schur blocks do not fill the space");
  basis.matrix = cols.cast<Complex>();
  return basis;
}

Matrix su_irrep_matrix(const SchurBasis& basis, const YoungDiagram& lambda, const Matrix& g,
                       int alpha) {
  const SchurBlock& b = basis.block(lambda);
  if (alpha < 0 || alpha >= b.sym_dim) throw std::out_of_range("alpha out of range");
  Matrix m(b.su_dim, b.su_dim);
  for (int q = 0; q < b.su_dim; ++q) {
    const Vector img =
        apply_gate_array(g, basis.n, basis.d, basis.matrix.col(b.column(q, alpha)));
    for (int p = 0; p < b.su_dim; ++p) m(p, q) = basis.matrix.col(b.column(p, alpha)).dot(img);
  }
  return m;
}

Matrix sym_irrep_matrix(const SchurBasis& basis, const YoungDiagram& lambda,
                        const Permutation& pi, int q) {
  const SchurBlock& b = basis.block(lambda);
  if (q < 0 || q >= b.su_dim) throw std::out_of_range("q out of range");
  Matrix m(b.sym_dim, b.sym_dim);
  for (int a = 0; a < b.sym_dim; ++a) {
    const Vector img = apply_site_permutation(pi, basis.d, basis.matrix.col(b.column(q, a)));
    for (int p = 0; p < b.sym_dim; ++p) m(p, a) = basis.matrix.col(b.column(q, p)).dot(img);
  }
  return m;
}

double su_alpha_spread(const SchurBasis& basis, const YoungDiagram& lambda, const Matrix& g) {
  const SchurBlock& b = basis.block(lambda);
  const Matrix ref = su_irrep_matrix(basis, lambda, g, 0);
  double spread = 0;
  for (int alpha = 1; alpha < b.sym_dim; ++alpha)
    spread = std::max(spread,
                      (su_irrep_matrix(basis, lambda, g, alpha) - ref).cwiseAbs().maxCoeff());
  return spread;
}

double sym_q_spread(const SchurBasis& basis, const YoungDiagram& lambda, const Permutation& pi) {
  const SchurBlock& b = basis.block(lambda);
  const Matrix ref = sym_irrep_matrix(basis, lambda, pi, 0);
  double spread = 0;
  for (int q = 1; q < b.su_dim; ++q)
    spread =
        std::max(spread, (sym_irrep_matrix(basis, lambda, pi, q) - ref).cwiseAbs().maxCoeff());
  return spread;
}

double BasisResiduals::max() const {
  return std::max({unitarity, su_off_block, sym_off_block, su_block_unitarity,
                   sym_block_unitarity});
}

BasisResiduals verify_schur_basis(const SchurBasis& basis, int samples, uint64_t seed) {
  const long long dim = basis.dim();
  BasisResiduals res;

  // Gram matrix. The construction is real-valued; when the imaginary part is
  // exactly zero the real Gram matrix is the exact same quantity at a quarter
  // of the cost.
  const double imag_max = basis.matrix.imag().cwiseAbs().maxCoeff();
  if (imag_max == 0.0) {
    const RealMatrix br = basis.matrix.real();
    RealMatrix gram;
    gram.noalias() = br.transpose() * br;
    gram.diagonal().array() -= 1.0;
    res.unitarity = gram.cwiseAbs().maxCoeff();
  } else {
    Matrix gram;
    gram.noalias() = basis.matrix.adjoint() * basis.matrix;
    gram.diagonal().array() -= Complex(1.0);
    res.unitarity = gram.cwiseAbs().maxCoeff();
  }

  std::mt19937_64 rng(seed);
  using StridedMap = Eigen::Map<const Matrix, 0, Eigen::OuterStride<>>;

  for (int s = 0; s < samples; ++s) {
    const Matrix g = haar_su(basis.d, rng);
    Matrix full(dim, dim);
    for (long long c = 0; c < dim; ++c)
      full.col(c) = apply_gate_array(g, basis.n, basis.d, basis.matrix.col(c));
    Matrix recon(dim, dim);
    for (const SchurBlock& b : basis.blocks) {
      // U^lambda extracted from the alpha = 0 slot of the transformed matrix.
      Matrix u(b.su_dim, b.su_dim);
      for (int q = 0; q < b.su_dim; ++q)
        for (int p = 0; p < b.su_dim; ++p)
          u(p, q) = basis.matrix.col(b.column(p, 0)).dot(full.col(b.column(q, 0)));
      res.su_block_unitarity = std::max(
          res.su_block_unitarity,
          (u.adjoint() * u - Matrix::Identity(b.su_dim, b.su_dim)).cwiseAbs().maxCoeff());
      // Reconstruction B * (U^lambda (x) I_m): columns with fixed alpha are
      // spaced sym_dim apart.
      const Eigen::OuterStride<> stride(static_cast<Eigen::Index>(b.sym_dim) * dim);
      for (int alpha = 0; alpha < b.sym_dim; ++alpha) {
        StridedMap sub(basis.matrix.data() + static_cast<Eigen::Index>(b.column(0, alpha)) * dim,
                       dim, b.su_dim, stride);
        Matrix prod = sub * u;
        for (int q = 0; q < b.su_dim; ++q) recon.col(b.column(q, alpha)) = prod.col(q);
      }
    }
    res.su_off_block = std::max(res.su_off_block, (full - recon).cwiseAbs().maxCoeff());
  }

  for (int s = 0; s < samples; ++s) {
    const Permutation pi = Permutation::random(basis.n, rng);
    Matrix full(dim, dim);
    for (long long c = 0; c < dim; ++c)
      full.col(c) = apply_site_permutation(pi, basis.d, basis.matrix.col(c));
    Matrix recon(dim, dim);
    for (const SchurBlock& b : basis.blocks) {
      Matrix v(b.sym_dim, b.sym_dim);
      for (int a = 0; a < b.sym_dim; ++a)
        for (int p = 0; p < b.sym_dim; ++p)
          v(p, a) = basis.matrix.col(b.column(0, p)).dot(full.col(b.column(0, a)));
      res.sym_block_unitarity = std::max(
          res.sym_block_unitarity,
          (v.adjoint() * v - Matrix::Identity(b.sym_dim, b.sym_dim)).cwiseAbs().maxCoeff());
      for (int q = 0; q < b.su_dim; ++q)
        recon.middleCols(b.column(q, 0), b.sym_dim).noalias() =
            basis.matrix.middleCols(b.column(q, 0), b.sym_dim) * v;
    }
    res.sym_off_block = std::max(res.sym_off_block, (full - recon).cwiseAbs().maxCoeff());
  }
  return res;
}

std::string schur_cache_filename(int n, int d) {
  return "schur_n" + std::to_string(n) + "_d" + std::to_string(d) + "_v" +
         std::to_string(kSchurBasisFormatVersion) + ".bin";
}

void save_schur_basis(const SchurBasis& basis, const std::string& path) {
  if (!platform_is_little_endian())
    throw std::runtime_error("cache files are little-endian only");
  json header;
  header["format"] = "schur-basis";
  header["version"] = kSchurBasisFormatVersion;
  header["endian"] = "little";
  header["n"] = basis.n;
  header["d"] = basis.d;
  const double imag_max = basis.matrix.imag().cwiseAbs().maxCoeff();
  const bool real_scalars = imag_max == 0.0;
  header["scalar"] = real_scalars ? "real" : "complex";
  json blocks = json::array();
  for (const SchurBlock& b : basis.blocks)
    blocks.push_back({{"lambda", b.lambda.rows()},
                      {"su_dim", b.su_dim},
                      {"sym_dim", b.sym_dim},
                      {"offset", b.offset}});
  header["blocks"] = std::move(blocks);
  const std::string htext = header.dump();

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  const char magic[8] = {'R', 'M', 'S', 'C', 'H', 'U', 'R', '\0'};
  out.write(magic, 8);
  const uint64_t hlen = htext.size();
  out.write(reinterpret_cast<const char*>(&hlen), 8);
  out.write(htext.data(), static_cast<std::streamsize>(htext.size()));
  const long long dim = basis.dim();
  if (real_scalars) {
    const RealMatrix br = basis.matrix.real();
    for (long long r = 0; r < dim; ++r)  // row-major payload
      for (long long c = 0; c < dim; ++c) {
        const double v = br(r, c);
        out.write(reinterpret_cast<const char*>(&v), 8);
      }
  } else {
    for (long long r = 0; r < dim; ++r)
      for (long long c = 0; c < dim; ++c) {
        const Complex v = basis.matrix(r, c);
        out.write(reinterpret_cast<const char*>(&v), 16);
      }
  }
  if (!out) throw std::runtime_error("short write to " + path);
}

SchurBasis load_schur_basis(const std::string& path) {
  if (!platform_is_little_endian())
    throw std::runtime_error("cache files are little-endian only");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, "RMSCHUR\0", 8) != 0)
    throw std::runtime_error(path + " is not a Schur basis cache");
  uint64_t hlen = 0;
  in.read(reinterpret_cast<char*>(&hlen), 8);
  if (!in || hlen > (1u << 20)) throw std::runtime_error(path + ": bad header length");
  std::string htext(hlen, '\0');
  in.read(htext.data(), static_cast<std::streamsize>(hlen));
  const json header = json::parse(htext);
  if (header.at("version").get<int>() != kSchurBasisFormatVersion)
    throw std::runtime_error(path + ": cache format version mismatch");

  SchurBasis basis;
  basis.n = header.at("n").get<int>();
  basis.d = header.at("d").get<int>();
  const long long dim = checked_power(basis.d, basis.n);
  for (const json& jb : header.at("blocks")) {
    SchurBlock b;
    b.lambda = YoungDiagram(jb.at("lambda").get<std::vector<int>>());
    b.su_dim = jb.at("su_dim").get<int>();
    b.sym_dim = jb.at("sym_dim").get<int>();
    b.offset = jb.at("offset").get<int>();
    basis.blocks.push_back(std::move(b));
  }
  basis.matrix.resize(dim, dim);
  const bool real_scalars = header.at("scalar").get<std::string>() == "real";
  if (real_scalars) {
    std::vector<double> row(static_cast<size_t>(dim));
    for (long long r = 0; r < dim; ++r) {
      in.read(reinterpret_cast<char*>(row.data()), dim * 8);
      for (long long c = 0; c < dim; ++c) basis.matrix(r, c) = row[static_cast<size_t>(c)];
    }
  } else {
    std::vector<Complex> row(static_cast<size_t>(dim));
    for (long long r = 0; r < dim; ++r) {
      in.read(reinterpret_cast<char*>(row.data()), dim * 16);
      for (long long c = 0; c < dim; ++c) basis.matrix(r, c) = row[static_cast<size_t>(c)];
    }
  }
  if (!in) throw std::runtime_error(path + ": truncated payload");
  return basis;
}

}  // namespace repmatch
