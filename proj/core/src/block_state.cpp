#include "repmatch/block_state.hpp"

#include <cmath>
#include <stdexcept>

namespace repmatch {

namespace {

// (q, alpha) -> (rep index, spectator index) for the given role.
inline std::pair<int, int> role_split(Role role, int q, int alpha) {
  return role == Role::kUnitaryArray ? std::pair<int, int>{q, alpha}
                                     : std::pair<int, int>{alpha, q};
}

}  // namespace

BlockState BlockState::zero(const SchurBasis& basis, Role role, int ref_dim) {
  if (ref_dim < 1) throw std::invalid_argument("ref_dim must be >= 1");
  BlockState s;
  s.n = basis.n;
  s.d = basis.d;
  s.role = role;
  s.ref_dim = ref_dim;
  for (const SchurBlock& b : basis.blocks) {
    BlockShape shape;
    shape.lambda = b.lambda;
    shape.rep_dim = role == Role::kUnitaryArray ? b.su_dim : b.sym_dim;
    shape.spect_dim = role == Role::kUnitaryArray ? b.sym_dim : b.su_dim;
    s.rep_cap = std::max(s.rep_cap, shape.rep_dim);
    s.shapes.push_back(std::move(shape));
  }
  for (const BlockShape& shape : s.shapes)
    s.amp.push_back(Matrix::Zero(s.rep_cap, static_cast<Eigen::Index>(shape.spect_dim) * ref_dim));
  return s;
}

double BlockState::norm_sq() const {
  double total = 0;
  for (const Matrix& m : amp) total += m.squaredNorm();
  return total;
}

double BlockState::norm() const { return std::sqrt(norm_sq()); }

Complex BlockState::inner(const BlockState& other) const {
  if (shapes.size() != other.shapes.size() || ref_dim != other.ref_dim || rep_cap != other.rep_cap)
    throw std::invalid_argument("block states have different layouts");
  Complex total = 0;
  for (size_t b = 0; b < amp.size(); ++b)
    total += (amp[b].conjugate().cwiseProduct(other.amp[b])).sum();
  return total;
}

double BlockState::padding_mass() const {
  double total = 0;
  for (size_t b = 0; b < amp.size(); ++b) {
    const int rep = shapes[b].rep_dim;
    if (rep < rep_cap) total += amp[b].bottomRows(rep_cap - rep).squaredNorm();
  }
  return total;
}

BlockState& BlockState::operator*=(Complex c) {
  for (Matrix& m : amp) m *= c;
  return *this;
}

double block_fidelity(const BlockState& a, const BlockState& b) {
  const double na = a.norm_sq(), nb = b.norm_sq();
  if (na == 0 || nb == 0) throw std::invalid_argument("block_fidelity: zero state");
  return std::norm(a.inner(b)) / (na * nb);
}

BlockState decompose_input(const Vector& psi, const SchurBasis& basis, Role role, int ref_dim) {
  const long long dim = basis.dim();
  if (psi.size() != dim * ref_dim) throw std::invalid_argument("decompose_input: bad dimension");
  BlockState s = BlockState::zero(basis, role, ref_dim);
  // psi as a (ref_dim x dim) column-major view: entry (e, x) = psi[x*ref + e].
  Eigen::Map<const Matrix> view(psi.data(), ref_dim, dim);
  for (int bi = 0; bi < s.block_count(); ++bi) {
    const SchurBlock& b = basis.blocks[static_cast<size_t>(bi)];
    for (int q = 0; q < b.su_dim; ++q)
      for (int alpha = 0; alpha < b.sym_dim; ++alpha) {
        const Vector coeff = view * basis.matrix.col(b.column(q, alpha)).conjugate();
        const auto [rep, spect] = role_split(role, q, alpha);
        for (int e = 0; e < ref_dim; ++e)
          s.amp[static_cast<size_t>(bi)](rep, static_cast<Eigen::Index>(spect) * ref_dim + e) =
              coeff[e];
      }
  }
  return s;
}

Vector compose_output(const BlockState& state, const SchurBasis& basis) {
  if (state.padding_mass() > 1e-12)
    throw std::runtime_error("compose_output: state has amplitude on padding slots");
  const long long dim = basis.dim();
  Vector psi = Vector::Zero(dim * state.ref_dim);
  Eigen::Map<Matrix> view(psi.data(), state.ref_dim, dim);
  for (int bi = 0; bi < state.block_count(); ++bi) {
    const SchurBlock& b = basis.blocks[static_cast<size_t>(bi)];
    for (int q = 0; q < b.su_dim; ++q)
      for (int alpha = 0; alpha < b.sym_dim; ++alpha) {
        const auto [rep, spect] = role_split(state.role, q, alpha);
        Vector coeff(state.ref_dim);
        for (int e = 0; e < state.ref_dim; ++e)
          coeff[e] = state.amp[static_cast<size_t>(bi)](
              rep, static_cast<Eigen::Index>(spect) * state.ref_dim + e);
        view.noalias() += coeff * basis.matrix.col(b.column(q, alpha)).transpose();
      }
  }
  return psi;
}

long long merge_registers(const IrrepTable& table, int block_index, long long slot) {
  if (block_index < 0 || block_index >= table.block_count())
    throw std::out_of_range("merge_registers: bad diagram index");
  long long offset = 0;
  for (int i = 0; i < block_index; ++i)
    offset += table.entries[static_cast<size_t>(i)].rep_dim(table.role).convert_to<long long>();
  const long long rep =
      table.entries[static_cast<size_t>(block_index)].rep_dim(table.role).convert_to<long long>();
  if (slot < 0 || slot >= rep) throw std::out_of_range("merge_registers: slot out of range");
  return offset + slot;
}

std::pair<int, long long> split_memory_index(const IrrepTable& table, long long memory_index) {
  long long offset = 0;
  for (int i = 0; i < table.block_count(); ++i) {
    const long long rep =
        table.entries[static_cast<size_t>(i)].rep_dim(table.role).convert_to<long long>();
    if (memory_index < offset + rep) return {i, memory_index - offset};
    offset += rep;
  }
  throw std::out_of_range("split_memory_index: index beyond d_tot");
}

}  // namespace repmatch
