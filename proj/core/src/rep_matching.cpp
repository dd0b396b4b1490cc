#include "repmatch/rep_matching.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace repmatch {

namespace {

Matrix pad_block(const Matrix& op, int cap) {
  Matrix out = Matrix::Identity(cap, cap);
  out.topLeftCorner(op.rows(), op.cols()) = op;
  return out;
}

long long saturating_add(long long a, long long b) {
  if (a > std::numeric_limits<long long>::max() - b) return std::numeric_limits<long long>::max();
  return a + b;
}

// Branch r_hat of one round: block lambda receives ops[(lambda + r_hat) mod
// |R|], everything scaled by the uniform ansatz amplitude 1/sqrt(|R|).
BlockState matching_branch(const BlockState& state, const BranchOperators& ops, int r_hat) {
  const int r_count = static_cast<int>(ops.ops.size());
  BlockState out = state;
  const double ansatz = 1.0 / std::sqrt(static_cast<double>(r_count));
  for (int bi = 0; bi < state.block_count(); ++bi) {
    const Matrix& op = ops.ops[static_cast<size_t>((bi + r_hat) % r_count)];
    out.amp[static_cast<size_t>(bi)] = ansatz * (op * state.amp[static_cast<size_t>(bi)]);
  }
  return out;
}

void meter_round(Transcript& transcript, const BlockState& layout, int round,
                 const BranchOperators& ops) {
  const int r_count = layout.block_count();
  long long d_r = 0, d_tot = 0;
  for (const BlockShape& s : layout.shapes) {
    d_r = std::max(d_r, static_cast<long long>(s.rep_dim));
    d_tot += s.rep_dim;
  }
  transcript.add_message("A->B", "R", d_r, d_r, round);
  transcript.add_message("B->A", "C", d_tot,
                         static_cast<long long>(r_count) * layout.rep_cap, round);
  (void)ops;
}

}  // namespace

Vector ideal_output(const TargetSpec& target, const Vector& psi_in, int ref_dim) {
  switch (target.task) {
    case Task::kUnitaryArray:
      return apply_gate_array(target.g, target.n, target.d, psi_in, ref_dim);
    case Task::kConjugation:
      return apply_gate_array(target.g.conjugate(), target.n, target.d, psi_in, ref_dim);
    case Task::kPermutation:
      return apply_site_permutation(target.pi, target.d, psi_in, ref_dim);
    case Task::kStorageRetrieval:
      break;
  }
  throw std::invalid_argument("no representation-matching target for this task");
}

BranchOperators target_block_operators(const TargetSpec& target, const SchurBasis& basis,
                                       const ConjugationContext* conj) {
  if (target.n != basis.n || target.d != basis.d)
    throw std::invalid_argument("target and basis disagree on (n, d)");
  const Role role = role_for(target.task);
  BranchOperators result;
  for (const SchurBlock& b : basis.blocks)
    result.rep_cap =
        std::max(result.rep_cap, role == Role::kUnitaryArray ? b.su_dim : b.sym_dim);
  for (int bi = 0; bi < static_cast<int>(basis.blocks.size()); ++bi) {
    const SchurBlock& b = basis.blocks[static_cast<size_t>(bi)];
    Matrix block;
    switch (target.task) {
      case Task::kUnitaryArray:
        block = su_irrep_matrix(basis, b.lambda, target.g);
        break;
      case Task::kPermutation:
        block = sym_irrep_matrix(basis, b.lambda, target.pi);
        break;
      case Task::kConjugation:
        if (conj == nullptr)
          throw std::invalid_argument("conjugation target needs a ConjugationContext");
        block = conjugated_block(basis, *conj, bi, target.g);
        break;
      case Task::kStorageRetrieval:
        throw std::invalid_argument("no representation-matching target for this task");
    }
    result.ops.push_back(pad_block(block, result.rep_cap));
  }
  result.forward_queries = target.copies();
  result.inverse_queries = 0;
  return result;
}

BranchOperators composed_retry_operators(const BranchOperators& ops, int r_hat) {
  const int r_count = static_cast<int>(ops.ops.size());
  if (r_hat % r_count == 0) throw std::invalid_argument("retry needs a failed branch");
  BranchOperators next;
  next.rep_cap = ops.rep_cap;
  for (int s = 0; s < r_count; ++s)
    next.ops.push_back(ops.ops[static_cast<size_t>(s)] *
                       ops.ops[static_cast<size_t>((s + r_hat) % r_count)].adjoint());
  // The composite contains the previous round's target once forward and once
  // inverted, so both query directions inherit the previous round's total.
  next.forward_queries = saturating_add(ops.forward_queries, ops.inverse_queries);
  next.inverse_queries = next.forward_queries;
  return next;
}

void BlockOperator::apply(BlockState& state) const {
  if (blocks.size() != state.amp.size())
    throw std::invalid_argument("operator and state have different block counts");
  for (size_t bi = 0; bi < blocks.size(); ++bi)
    state.amp[bi] = blocks[bi] * state.amp[bi];
}

BlockOperator recovery_operator(const BranchOperators& ops, int r_hat) {
  const int r_count = static_cast<int>(ops.ops.size());
  if (r_hat % r_count == 0)
    throw std::invalid_argument("branch 0 succeeded; there is nothing to recover");
  BlockOperator rec;
  for (int bi = 0; bi < r_count; ++bi)
    rec.blocks.push_back(ops.ops[static_cast<size_t>((bi + r_hat) % r_count)].adjoint());
  return rec;
}

RepmatchResult run_repmatch(const Vector& psi_in, const TargetSpec& target,
                            const SchurBasis& basis, const ConjugationContext* conj,
                            int ref_dim) {
  const double in_norm = psi_in.norm();
  if (std::abs(in_norm - 1.0) > 1e-9)
    throw std::invalid_argument("input state must be normalized");
  const Role role = role_for(target.task);
  const BlockState input = decompose_input(psi_in, basis, role, ref_dim);
  const BranchOperators ops = target_block_operators(target, basis, conj);
  const BlockState ideal = decompose_input(ideal_output(target, psi_in, ref_dim), basis, role,
                                           ref_dim);
  const int r_count = input.block_count();

  RepmatchResult result;
  result.p_yes = BigRat(BigInt(1), BigInt(r_count));
  result.transcript.protocol = "repmatch";
  result.transcript.task = target.task;
  result.transcript.n = target.n;
  result.transcript.d = target.d;
  meter_round(result.transcript, input, 1, ops);
  result.transcript.rounds.push_back({1, -1, ops.forward_queries, ops.inverse_queries});

  for (int r_hat = 0; r_hat < r_count; ++r_hat) {
    ProtocolOutcome outcome;
    outcome.r_hat = r_hat;
    BlockState branch = matching_branch(input, ops, r_hat);
    outcome.probability = branch.norm_sq();
    if (outcome.probability > 0) branch *= Complex(1.0 / std::sqrt(outcome.probability));
    outcome.fidelity_to_ideal = block_fidelity(branch, ideal);
    outcome.post = std::move(branch);
    result.outcomes.push_back(std::move(outcome));
  }
  return result;
}

UntilSuccessResult run_until_success(const Vector& psi_in, const TargetSpec& target,
                                     const SchurBasis& basis, int max_rounds, uint64_t seed,
                                     const ConjugationContext* conj, int ref_dim) {
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
  const Role role = role_for(target.task);
  BlockState state = decompose_input(psi_in, basis, role, ref_dim);
  const Vector ideal = ideal_output(target, psi_in, ref_dim);
  const BlockState ideal_blocks = decompose_input(ideal, basis, role, ref_dim);
  const BranchOperators base_ops = target_block_operators(target, basis, conj);
  BranchOperators ops = base_ops;
  const int r_count = state.block_count();

  UntilSuccessResult result;
  result.transcript.protocol = "repmatch";
  result.transcript.task = target.task;
  result.transcript.n = target.n;
  result.transcript.d = target.d;

  std::mt19937_64 rng(seed);
  for (int round = 1; round <= max_rounds; ++round) {
    result.rounds = round;
    meter_round(result.transcript, state, round, ops);

    std::vector<double> probs(static_cast<size_t>(r_count));
    for (int r_hat = 0; r_hat < r_count; ++r_hat)
      probs[static_cast<size_t>(r_hat)] = matching_branch(state, ops, r_hat).norm_sq();
    // Portable inverse-CDF draw (uniform in [0,1) from the top 53 bits).
    const double u = static_cast<double>(rng() >> 11) * 0x1p-53;
    int picked = r_count - 1;
    double acc = 0;
    for (int r_hat = 0; r_hat < r_count; ++r_hat) {
      acc += probs[static_cast<size_t>(r_hat)];
      if (u < acc) {
        picked = r_hat;
        break;
      }
    }
    result.transcript.rounds.push_back(
        {round, picked, ops.forward_queries, ops.inverse_queries});

    BlockState branch = matching_branch(state, ops, picked);
    branch *= Complex(1.0 / std::sqrt(probs[static_cast<size_t>(picked)]));
    if (picked == 0) {
      result.success = true;
      result.fidelity_to_ideal = block_fidelity(branch, ideal_blocks);
      result.output = compose_output(branch, basis);
      return result;
    }
    if (round == max_rounds) {
      // Heralded failure: undo the whole history and hand the input back. The
      // would-be next composite applied to the branch state yields the ideal
      // output, so undoing one clean target application on top of it inverts
      // the entire history in one go.
      const BranchOperators next = composed_retry_operators(ops, picked);
      BlockOperator rewind;
      for (int bi = 0; bi < r_count; ++bi)
        rewind.blocks.push_back(base_ops.ops[static_cast<size_t>(bi)].adjoint() *
                                next.ops[static_cast<size_t>(bi)]);
      rewind.apply(branch);
      result.transcript.rounds.push_back(
          {round + 1, -1,
           saturating_add(next.forward_queries, base_ops.inverse_queries),
           saturating_add(next.inverse_queries, base_ops.forward_queries)});
      result.success = false;
      result.output = compose_output(branch, basis);
      result.fidelity_to_input = std::norm(psi_in.dot(result.output));
      return result;
    }
    state = std::move(branch);
    ops = composed_retry_operators(ops, picked);
  }
  throw std::logic_error("unreachable");
}

}  // namespace repmatch
