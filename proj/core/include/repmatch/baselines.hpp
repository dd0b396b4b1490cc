#pragma once

#include "repmatch/block_state.hpp"
#include "repmatch/transcript.hpp"

#include <vector>

namespace repmatch {

// Block-entangled resource over (index A, pair registers R1/R2, spectator
// eta_0): amplitude sqrt(d_lambda / d_tot) on |lambda> (x) |Phi+_lambda>.
// After the black box acts, the R2 half carries U^lambda.
struct TeleportResource {
  int n = 0;
  int d = 0;
  long long d_tot = 0;
  long long d_tot_sq = 0;
  std::vector<YoungDiagram> labels;
  std::vector<double> weights;     // sqrt(d_lambda / d_tot)
  std::vector<BigRat> weights_sq;  // exact d_lambda / d_tot
  std::vector<Matrix> pairs;       // (R1, R2) amplitudes, unrotated: I/sqrt(d_lambda)
  bool rotated = false;

  BigRat exact_norm_sq() const;  // sum of weights_sq, identically 1
};

TeleportResource build_teleport_resource(const SchurBasis& basis);
// Station B's action: U^lambda on the R2 half of every pair.
void rotate_teleport_resource(TeleportResource& resource, const SchurBasis& basis,
                              const Matrix& g);

struct BaselineRun {
  double probability = 0;
  BigRat p_exact;
  BlockState post;  // normalized success-branch state
  double fidelity_to_ideal = 0;
  Transcript transcript;
};

// Generalised Bell measurement on (input representation register, R1); only
// the zero-error j = 0 element is materialized:
//   B_0 = sum_mu sqrt(d_mu / d_tot) <mu|_A (x) |mu><mu|_I (x) <Phi+_mu|_{R,R1}
// Its success amplitude is (1/d_tot) times the ideal output on every input,
// so p = 1/d_tot^2 exactly. The remaining Bell outcomes are aggregated into
// the complementary probability mass.
BaselineRun run_gate_teleport(const Vector& psi_in, const Matrix& g, const SchurBasis& basis,
                              int ref_dim = 1);

// Storage memory over (index A, pair R1/R2): amplitude d_lambda /
// sqrt(d_tot_sq) on |lambda> (x) |Phi+_lambda>, R1 half rotated by U^lambda.
// Supported on sum_lambda d_lambda^2 = d_tot_sq levels.
struct GateMemory {
  int n = 0;
  int d = 0;
  long long d_tot_sq = 0;
  int memory_qubits = 0;  // ceil(log2 d_tot_sq)
  std::vector<YoungDiagram> labels;
  std::vector<double> weights;     // d_lambda / sqrt(d_tot_sq)
  std::vector<BigRat> weights_sq;  // exact d_lambda^2 / d_tot_sq
  std::vector<Matrix> pairs;       // U^lambda / sqrt(d_lambda), entries (R1, R2)
  Matrix stored_gate;              // kept for independent verification only

  BigRat exact_norm_sq() const;
};

GateMemory store(const Matrix& g, const SchurBasis& basis);

// Projects with N_yes = sum_lambda <lambda|_A (x) |lambda><lambda|_I (x)
// <Phi+_lambda|_{R,R2}: the input representation register is contracted
// against the unrotated memory half, leaving U^lambda phi_lambda on R1 with
// uniform amplitude 1/sqrt(d_tot_sq); p = 1/d_tot_sq exactly.
BaselineRun retrieve(const Vector& psi_in, const GateMemory& memory, const SchurBasis& basis,
                     int ref_dim = 1);

}  // namespace repmatch
