#include "repmatch/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace repmatch {

namespace {

BigRat sum_rats(const std::vector<BigRat>& v) {
  BigRat total = 0;
  for (const BigRat& x : v) total += x;
  return total;
}

}  // namespace

BigRat TeleportResource::exact_norm_sq() const { return sum_rats(weights_sq); }
BigRat GateMemory::exact_norm_sq() const { return sum_rats(weights_sq); }

TeleportResource build_teleport_resource(const SchurBasis& basis) {
  TeleportResource res;
  res.n = basis.n;
  res.d = basis.d;
  for (const SchurBlock& b : basis.blocks) {
    res.d_tot += b.su_dim;
    res.d_tot_sq += static_cast<long long>(b.su_dim) * b.su_dim;
  }
  for (const SchurBlock& b : basis.blocks) {
    res.labels.push_back(b.lambda);
    res.weights.push_back(std::sqrt(static_cast<double>(b.su_dim) / res.d_tot));
    res.weights_sq.emplace_back(BigInt(b.su_dim), BigInt(res.d_tot));
    res.pairs.push_back(Matrix::Identity(b.su_dim, b.su_dim) /
                        std::sqrt(static_cast<double>(b.su_dim)));
  }
  return res;
}

void rotate_teleport_resource(TeleportResource& resource, const SchurBasis& basis,
                              const Matrix& g) {
  if (resource.rotated) throw std::logic_error("resource already rotated");
  for (size_t bi = 0; bi < resource.pairs.size(); ++bi) {
    const Matrix u = su_irrep_matrix(basis, resource.labels[bi], g);
    // R2 half: |k>_{R1} |k>_{R2} -> |k>_{R1} U|k>_{R2}, i.e. columns rotate.
    resource.pairs[bi] = resource.pairs[bi] * u.transpose();
  }
  resource.rotated = true;
}

BaselineRun run_gate_teleport(const Vector& psi_in, const Matrix& g, const SchurBasis& basis,
                              int ref_dim) {
  if (std::abs(psi_in.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("input state must be normalized");
  TeleportResource res = build_teleport_resource(basis);
  rotate_teleport_resource(res, basis, g);

  const BlockState input = decompose_input(psi_in, basis, Role::kUnitaryArray, ref_dim);
  BlockState out = BlockState::zero(basis, Role::kUnitaryArray, ref_dim);
  for (int bi = 0; bi < input.block_count(); ++bi) {
    const int dl = input.shapes[static_cast<size_t>(bi)].rep_dim;
    const double resource = res.weights[static_cast<size_t>(bi)];  // state amplitude
    const double b0 = res.weights[static_cast<size_t>(bi)];        // measurement coefficient
    const double bell = 1.0 / std::sqrt(static_cast<double>(dl));  // <Phi+| normalization
    // out(j, s) = resource * b0 * bell * sum_i pairs(i, j) * phi(i, s)
    //           = (1 / d_tot) * (U^lambda phi)(j, s)
    out.amp[static_cast<size_t>(bi)].topRows(dl) =
        resource * b0 * bell *
        (res.pairs[static_cast<size_t>(bi)].transpose() *
         input.amp[static_cast<size_t>(bi)].topRows(dl));
  }

  BaselineRun run;
  run.probability = out.norm_sq();
  run.p_exact = BigRat(BigInt(1), BigInt(res.d_tot) * BigInt(res.d_tot));
  out *= Complex(1.0 / std::sqrt(run.probability));
  const Vector ideal = apply_gate_array(g, basis.n, basis.d, psi_in, ref_dim);
  run.fidelity_to_ideal =
      block_fidelity(out, decompose_input(ideal, basis, Role::kUnitaryArray, ref_dim));
  run.post = std::move(out);

  run.transcript.protocol = "teleport";
  run.transcript.task = Task::kUnitaryArray;
  run.transcript.n = basis.n;
  run.transcript.d = basis.d;
  // One transfer of the rotated resource; it spans only the block-diagonal
  // pair subspace of the merged (A,R1) x (R2) registers.
  run.transcript.add_message("B->A", "E", res.d_tot_sq, res.d_tot * res.d_tot, 1);
  run.transcript.rounds.push_back({1, 0, basis.n, 0});
  return run;
}

GateMemory store(const Matrix& g, const SchurBasis& basis) {
  GateMemory mem;
  mem.n = basis.n;
  mem.d = basis.d;
  for (const SchurBlock& b : basis.blocks)
    mem.d_tot_sq += static_cast<long long>(b.su_dim) * b.su_dim;
  mem.memory_qubits = qubits_for_dimension(mem.d_tot_sq);
  mem.stored_gate = g;
  for (const SchurBlock& b : basis.blocks) {
    mem.labels.push_back(b.lambda);
    mem.weights.push_back(b.su_dim / std::sqrt(static_cast<double>(mem.d_tot_sq)));
    mem.weights_sq.emplace_back(BigInt(b.su_dim) * BigInt(b.su_dim), BigInt(mem.d_tot_sq));
    // R1 half carries the gate: |k>|k> -> (U|k>)|k>, rows rotate.
    mem.pairs.push_back(su_irrep_matrix(basis, b.lambda, g) /
                        std::sqrt(static_cast<double>(b.su_dim)));
  }
  return mem;
}

BaselineRun retrieve(const Vector& psi_in, const GateMemory& memory, const SchurBasis& basis,
                     int ref_dim) {
  if (memory.n != basis.n || memory.d != basis.d)
    throw std::invalid_argument("memory and basis disagree on (n, d)");
  if (std::abs(psi_in.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("input state must be normalized");

  const BlockState input = decompose_input(psi_in, basis, Role::kUnitaryArray, ref_dim);
  BlockState out = BlockState::zero(basis, Role::kUnitaryArray, ref_dim);
  for (int bi = 0; bi < input.block_count(); ++bi) {
    const int dl = input.shapes[static_cast<size_t>(bi)].rep_dim;
    const double bell = 1.0 / std::sqrt(static_cast<double>(dl));  // <Phi+| contraction
    const double w = memory.weights[static_cast<size_t>(bi)];
    // out(i, s) = w * bell * sum_k pairs(i, k) * phi(k, s)
    out.amp[static_cast<size_t>(bi)].topRows(dl) =
        w * bell *
        (memory.pairs[static_cast<size_t>(bi)] * input.amp[static_cast<size_t>(bi)].topRows(dl));
  }

  BaselineRun run;
  run.probability = out.norm_sq();
  run.p_exact = BigRat(BigInt(1), BigInt(memory.d_tot_sq));
  out *= Complex(1.0 / std::sqrt(run.probability));
  const Vector ideal =
      apply_gate_array(memory.stored_gate, basis.n, basis.d, psi_in, ref_dim);
  run.fidelity_to_ideal =
      block_fidelity(out, decompose_input(ideal, basis, Role::kUnitaryArray, ref_dim));
  run.post = std::move(out);

  run.transcript.protocol = "store-retrieve";
  run.transcript.task = Task::kStorageRetrieval;
  run.transcript.n = basis.n;
  run.transcript.d = basis.d;
  const long long d_tot =
      [&] {
        long long t = 0;
        for (const SchurBlock& b : basis.blocks) t += b.su_dim;
        return t;
      }();
  run.transcript.add_message("B->A", "M", memory.d_tot_sq, d_tot * d_tot, 1);
  run.transcript.rounds.push_back({1, 0, basis.n, 0});
  return run;
}

}  // namespace repmatch
