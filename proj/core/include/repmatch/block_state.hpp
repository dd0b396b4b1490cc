#pragma once

#include "repmatch/irrep_table.hpp"
#include "repmatch/schur_basis.hpp"

namespace repmatch {

struct BlockShape {
  YoungDiagram lambda;
  int rep_dim = 0;    // representation factor per the role (d_lambda or m_lambda)
  int spect_dim = 0;  // the spectator factor the target acts trivially on
};

// State over the registers a station works with once the Schur isometry has
// been applied: index register (one slot per diagram), representation
// register padded to the common dimension rep_cap = max_lambda rep_dim,
// spectator (multiplicity) register, and an optional external reference
// register that purifies entangled inputs. Block lambda holds a
// rep_cap x (spect_dim * ref_dim) matrix; rows >= rep_dim are the padding
// slots of the communicated register, zero on any state that embeds back into
// (C^d)^(x n) but populated on failed matching branches.
class BlockState {
 public:
  int n = 0;
  int d = 0;
  Role role = Role::kUnitaryArray;
  int ref_dim = 1;
  int rep_cap = 0;
  std::vector<BlockShape> shapes;
  std::vector<Matrix> amp;

  static BlockState zero(const SchurBasis& basis, Role role, int ref_dim = 1);

  int block_count() const { return static_cast<int>(shapes.size()); }
  double norm() const;
  double norm_sq() const;
  Complex inner(const BlockState& other) const;  // <this|other>
  // Squared amplitude sitting in padding rows; 0 iff the state is legal.
  double padding_mass() const;
  BlockState& operator*=(Complex c);
};

// |<a|b>|^2 / (|a|^2 |b|^2)
double block_fidelity(const BlockState& a, const BlockState& b);

// psi has dimension d^n * ref_dim, reference register least significant.
BlockState decompose_input(const Vector& psi, const SchurBasis& basis, Role role,
                           int ref_dim = 1);
// Inverse of decompose_input; requires clean padding (mass < 1e-12).
Vector compose_output(const BlockState& state, const SchurBasis& basis);

// The memory encoding that packs (diagram, representation slot) pairs into
// [0, d_tot): cumulative representation dimensions in canonical order.
long long merge_registers(const IrrepTable& table, int block_index, long long slot);
std::pair<int, long long> split_memory_index(const IrrepTable& table, long long memory_index);

}  // namespace repmatch
