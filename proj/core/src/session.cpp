#include "repmatch/session.hpp"

#include "repmatch/random_unitary.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace repmatch {

namespace {

void absorb_queries(GateOracle& oracle, const Transcript& transcript) {
  oracle.forward += transcript.forward_queries();
  oracle.inverse += transcript.inverse_queries();
}

}  // namespace

SessionResult execute_session(const SessionConfig& config) {
  if (config.n < 1 || config.d < 2) throw std::invalid_argument("need n >= 1, d >= 2");
  if (config.trials < 1) throw std::invalid_argument("need trials >= 1");
  const bool is_repmatch = config.protocol == "repmatch";
  if (!is_repmatch && config.protocol != "teleport" && config.protocol != "store-retrieve")
    throw std::invalid_argument("unknown protocol: " + config.protocol);
  if (!is_repmatch && config.task != Task::kUnitaryArray &&
      config.task != Task::kStorageRetrieval)
    throw std::invalid_argument("baseline protocols target n-fold gate arrays only");

  const SchurBasis basis = build_schur_basis(config.n, config.d);
  const long long dim = basis.dim();

  TargetSpec target;
  target.task = config.protocol == "store-retrieve" ? Task::kStorageRetrieval : config.task;
  target.n = config.n;
  target.d = config.d;
  std::mt19937_64 g_rng(config.g_seed);
  if (config.task == Task::kPermutation) {
    target.pi = config.perm.empty() ? Permutation::random(config.n, g_rng)
                                    : Permutation::from_cycles(config.perm, config.n);
  } else {
    target.g = haar_su(config.d, g_rng);
  }

  // Conjugation needs the basis on m = (d-1) n boxes; for qubits it is the
  // same basis object.
  std::unique_ptr<SchurBasis> basis_m_store;
  ConjugationContext conj;
  const ConjugationContext* conj_ptr = nullptr;
  if (config.task == Task::kConjugation) {
    const SchurBasis* basis_m = &basis;
    if (config.d != 2) {
      basis_m_store =
          std::make_unique<SchurBasis>(build_schur_basis((config.d - 1) * config.n, config.d));
      basis_m = basis_m_store.get();
    }
    conj = make_conjugation_context(basis, *basis_m);
    conj_ptr = &conj;
  }

  SessionResult result;
  result.oracle.uses_per_application = target.copies();

  nlohmann::json summary;
  summary["protocol"] = config.protocol;
  summary["task"] = task_name(target.task);
  summary["n"] = config.n;
  summary["d"] = config.d;
  summary["trials"] = config.trials;
  summary["seed"] = config.seed;
  summary["g_seed"] = config.g_seed;
  if (config.task == Task::kPermutation) summary["pi"] = target.pi.to_cycles();

  std::mt19937_64 input_rng(config.seed);
  double min_fidelity = 1.0;
  double prob_min = 1.0, prob_max = 0.0;
  long long successes = 0, total_rounds = 0;
  std::string p_exact;
  bool ok = true;

  GateMemory memory;
  if (config.protocol == "store-retrieve") memory = store(target.g, basis);

  for (int t = 0; t < config.trials; ++t) {
    const Vector psi = random_state(dim * config.ref_dim, input_rng);
    if (is_repmatch && config.until_success) {
      long long rounds = config.max_rounds;
      if (rounds <= 0) {
        const BigRat p(BigInt(1), BigInt(static_cast<long long>(basis.blocks.size())));
        rounds = amplify_rounds(p, BigRat(BigInt(1), BigInt(1000000)));
        if (config.eps > 0) {
          // eps as a rational approximation keeps the bound exact
          const long long denom = static_cast<long long>(std::llround(1.0 / config.eps));
          rounds = amplify_rounds(p, BigRat(BigInt(1), BigInt(std::max<long long>(denom, 2))));
        }
      }
      rounds = std::max<long long>(1, std::min<long long>(rounds, 1000000));
      UntilSuccessResult run =
          run_until_success(psi, target, basis, static_cast<int>(rounds),
                            config.seed + 1000003ULL * static_cast<uint64_t>(t) + 17ULL,
                            conj_ptr, config.ref_dim);
      successes += run.success ? 1 : 0;
      total_rounds += run.rounds;
      min_fidelity = std::min(min_fidelity,
                              run.success ? run.fidelity_to_ideal : run.fidelity_to_input);
      absorb_queries(result.oracle, run.transcript);
      result.transcript = std::move(run.transcript);
      p_exact = "1/" + std::to_string(basis.blocks.size());
    } else if (is_repmatch) {
      RepmatchResult run = run_repmatch(psi, target, basis, conj_ptr, config.ref_dim);
      double total = 0;
      for (const ProtocolOutcome& o : run.outcomes) total += o.probability;
      ok = ok && std::abs(total - 1.0) < 1e-10;
      prob_min = std::min(prob_min, run.outcomes[0].probability);
      prob_max = std::max(prob_max, run.outcomes[0].probability);
      min_fidelity = std::min(min_fidelity, run.outcomes[0].fidelity_to_ideal);
      successes += 1;
      total_rounds += 1;
      absorb_queries(result.oracle, run.transcript);
      result.transcript = std::move(run.transcript);
      p_exact = rational_string(run.p_yes);
    } else if (config.protocol == "teleport") {
      BaselineRun run = run_gate_teleport(psi, target.g, basis, config.ref_dim);
      prob_min = std::min(prob_min, run.probability);
      prob_max = std::max(prob_max, run.probability);
      min_fidelity = std::min(min_fidelity, run.fidelity_to_ideal);
      successes += 1;
      total_rounds += 1;
      absorb_queries(result.oracle, run.transcript);
      result.transcript = std::move(run.transcript);
      p_exact = rational_string(run.p_exact);
    } else {
      BaselineRun run = retrieve(psi, memory, basis, config.ref_dim);
      prob_min = std::min(prob_min, run.probability);
      prob_max = std::max(prob_max, run.probability);
      min_fidelity = std::min(min_fidelity, run.fidelity_to_ideal);
      successes += 1;
      total_rounds += 1;
      absorb_queries(result.oracle, run.transcript);
      result.transcript = std::move(run.transcript);
      p_exact = rational_string(run.p_exact);
      summary["memory_qubits"] = memory.memory_qubits;
    }
  }

  ok = ok && min_fidelity >= 1.0 - 1e-9;
  summary["p_exact"] = p_exact;
  if (config.until_success) {
    summary["success_rate"] = static_cast<double>(successes) / config.trials;
    summary["mean_rounds"] = static_cast<double>(total_rounds) / config.trials;
  } else {
    summary["p_min"] = prob_min;
    summary["p_max"] = prob_max;
  }
  summary["min_fidelity"] = min_fidelity;
  summary["totals"] = {{"forward_qubits", result.transcript.forward_qubits()},
                       {"backward_qubits", result.transcript.backward_qubits()},
                       {"oracle_forward", result.oracle.forward},
                       {"oracle_inverse", result.oracle.inverse}};
  summary["ok"] = ok;
  result.ok = ok;
  result.summary_json = summary.dump(2);
  return result;
}

}  // namespace repmatch
