#pragma once

#include "repmatch/block_state.hpp"
#include "repmatch/intertwiner.hpp"
#include "repmatch/permutation.hpp"
#include "repmatch/transcript.hpp"

#include <cstdint>
#include <vector>

namespace repmatch {

struct TargetSpec {
  Task task = Task::kUnitaryArray;
  int n = 0;
  int d = 0;
  Matrix g;        // unitary-array / conjugation targets
  Permutation pi;  // permutation target

  // Black-box queries one application of the target consumes.
  int copies() const { return task == Task::kConjugation ? (d - 1) * n : n; }
};

// The target applied to the full-space input.
Vector ideal_output(const TargetSpec& target, const Vector& psi_in, int ref_dim = 1);

// What station B applies, conditioned on each possible ansatz value: for
// ansatz r the padded representation-register unitary op[r] (the target's
// lambda_r block, extended by the identity on the padding slots). Composite
// targets built from failed rounds track their black-box query footprint.
struct BranchOperators {
  int rep_cap = 0;
  std::vector<Matrix> ops;
  long long forward_queries = 0;
  long long inverse_queries = 0;
};

BranchOperators target_block_operators(const TargetSpec& target, const SchurBasis& basis,
                                       const ConjugationContext* conj = nullptr);

// Retry target after a failed matching outcome r_hat: station B's next-round
// block for ansatz s is ops[s] * ops[(s + r_hat) mod |R|]^H, which first
// undoes the failed round's action and then applies the target; its success
// branch therefore yields the ideal output.
BranchOperators composed_retry_operators(const BranchOperators& ops, int r_hat);

// Index-controlled block unitary Sum_lambda |lambda><lambda| (x) K_lambda
// (x) I_spectator on the station's registers. Failed branches occupy padding
// slots, so this does not reduce to a d^n x d^n matrix in general.
struct BlockOperator {
  std::vector<Matrix> blocks;  // rep_cap x rep_cap each
  void apply(BlockState& state) const;
};

// For branch r_hat != 0 of a round that applied `ops`: K_lambda =
// ops[(lambda + r_hat) mod |R|]^H. Applying it to the branch state restores
// the round's input exactly (reference entanglement included).
BlockOperator recovery_operator(const BranchOperators& ops, int r_hat);

struct ProtocolOutcome {
  int r_hat = 0;
  double probability = 0;
  BlockState post;  // normalized post-branch state
  double fidelity_to_ideal = 0;
};

struct RepmatchResult {
  std::vector<ProtocolOutcome> outcomes;  // r_hat ascending, 0 first
  BigRat p_yes;                           // exact: 1 / |R|
  Transcript transcript;
};

// One full round with exhaustive branch enumeration: station A splits off the
// representation register, station B entangles it with the uniform ansatz and
// applies the target per ansatz value, and the coherent matching test
// measures the ansatz against the index register in the shifted basis,
// branch r_hat picking out ops[(lambda + r_hat) mod |R|] on block lambda.
RepmatchResult run_repmatch(const Vector& psi_in, const TargetSpec& target,
                            const SchurBasis& basis, const ConjugationContext* conj = nullptr,
                            int ref_dim = 1);

struct UntilSuccessResult {
  bool success = false;
  int rounds = 0;
  Vector output;  // target output on success; restored input on heralded failure
  double fidelity_to_ideal = 0;    // success only
  double fidelity_to_input = 0;    // heralded failure only
  Transcript transcript;
};

// Samples branches by their exact probabilities; on failure the next round
// runs the composed retry target on the unrecovered branch state, so a later
// success still delivers the ideal output and round-limit exhaustion recovers
// the original input (heralded failure).
UntilSuccessResult run_until_success(const Vector& psi_in, const TargetSpec& target,
                                     const SchurBasis& basis, int max_rounds, uint64_t seed,
                                     const ConjugationContext* conj = nullptr, int ref_dim = 1);

}  // namespace repmatch
