#include "repmatch/rep_matching.hpp"

#include "repmatch/block_state.hpp"
#include "repmatch/cost_model.hpp"
#include "repmatch/random_unitary.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using repmatch::BigRat;
using repmatch::BlockState;
using repmatch::Matrix;
using repmatch::Permutation;
using repmatch::Role;
using repmatch::TargetSpec;
using repmatch::Task;
using repmatch::Vector;

namespace {

TargetSpec unitary_target(int n, int d, const Matrix& g) {
  TargetSpec t;
  t.task = Task::kUnitaryArray;
  t.n = n;
  t.d = d;
  t.g = g;
  return t;
}

}  // namespace

TEST_CASE("block decomposition round-trips") {
  const auto basis = repmatch::build_schur_basis(3, 2);
  std::mt19937_64 rng(51);
  for (const int ref_dim : {1, 2}) {
    const Vector psi = repmatch::random_state(8 * ref_dim, rng);
    for (const Role role : {Role::kUnitaryArray, Role::kPermutation}) {
      const auto state = repmatch::decompose_input(psi, basis, role, ref_dim);
      CHECK(state.norm() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(state.padding_mass() == 0.0);
      const Vector back = repmatch::compose_output(state, basis);
      CHECK((back - psi).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("memory index packing is a bijection") {
  const auto table = repmatch::build_table(4, 2, Role::kUnitaryArray);
  long long seen = 0;
  for (int bi = 0; bi < table.block_count(); ++bi) {
    const long long rd =
        table.entries[static_cast<size_t>(bi)].rep_dim(table.role).convert_to<long long>();
    for (long long s = 0; s < rd; ++s) {
      const long long packed = repmatch::merge_registers(table, bi, s);
      CHECK(packed == seen);  // canonical order, no gaps
      const auto [b2, s2] = repmatch::split_memory_index(table, packed);
      CHECK(b2 == bi);
      CHECK(s2 == s);
      ++seen;
    }
  }
  CHECK(seen == table.d_tot.convert_to<long long>());
}

TEST_CASE("single system succeeds deterministically") {
  const auto basis = repmatch::build_schur_basis(1, 2);
  std::mt19937_64 rng(53);
  const Matrix g = repmatch::haar_su(2, rng);
  const Vector psi = repmatch::random_state(2, rng);
  const auto run = repmatch::run_repmatch(psi, unitary_target(1, 2, g), basis);
  REQUIRE(run.outcomes.size() == 1);
  CHECK(run.p_yes == BigRat(1));
  CHECK(run.outcomes[0].probability == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(run.outcomes[0].fidelity_to_ideal >= 1.0 - 1e-9);
  CHECK(run.transcript.total_qubits() == 2);
}

TEST_CASE("branch probabilities are uniform and input-independent") {
  std::mt19937_64 rng(59);
  for (const int n : {2, 3, 4}) {
    const auto basis = repmatch::build_schur_basis(n, 2);
    const auto table = repmatch::build_table(n, 2, Role::kUnitaryArray);
    const double uniform = 1.0 / static_cast<double>(table.block_count());

    std::vector<std::vector<double>> seen_probs;
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix g = repmatch::haar_su(2, rng);
      const Vector psi = repmatch::random_state(1LL << n, rng);
      const auto run = repmatch::run_repmatch(psi, unitary_target(n, 2, g), basis);
      REQUIRE(static_cast<int>(run.outcomes.size()) == table.block_count());
      CHECK(run.p_yes == BigRat(1, table.block_count()));
      double total = 0;
      std::vector<double> probs;
      for (const auto& o : run.outcomes) {
        CHECK(std::abs(o.probability - uniform) < 1e-12);
        total += o.probability;
        probs.push_back(o.probability);
      }
      CHECK(std::abs(total - 1.0) < 1e-12);
      CHECK(run.outcomes[0].fidelity_to_ideal >= 1.0 - 1e-9);
      seen_probs.push_back(std::move(probs));
    }
    // Spread across different inputs and gates.
    for (size_t i = 1; i < seen_probs.size(); ++i)
      for (size_t k = 0; k < seen_probs[i].size(); ++k)
        CHECK(std::abs(seen_probs[i][k] - seen_probs[0][k]) < 1e-10);
  }
}

TEST_CASE("permutation targets run through the multiplicity blocks") {
  const auto basis = repmatch::build_schur_basis(4, 2);
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    TargetSpec t;
    t.task = Task::kPermutation;
    t.n = 4;
    t.d = 2;
    t.pi = Permutation::random(4, rng);
    const Vector psi = repmatch::random_state(16, rng);
    const auto run = repmatch::run_repmatch(psi, t, basis);
    CHECK(run.p_yes == BigRat(1, 3));
    CHECK(run.outcomes[0].probability == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(run.outcomes[0].fidelity_to_ideal >= 1.0 - 1e-9);
  }
}

TEST_CASE("conjugation targets produce the conjugated gate array") {
  std::mt19937_64 rng(67);
  for (const int n : {2, 3}) {
    const auto basis = repmatch::build_schur_basis(n, 2);
    const auto ctx = repmatch::make_conjugation_context(basis, basis);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix g = repmatch::haar_su(2, rng);
      const Vector psi = repmatch::random_state(1LL << n, rng);
      TargetSpec t;
      t.task = Task::kConjugation;
      t.n = n;
      t.d = 2;
      t.g = g;
      CHECK(t.copies() == n);  // (d - 1) * n
      const auto run = repmatch::run_repmatch(psi, t, basis, &ctx);
      const Vector direct = repmatch::apply_gate_array(g.conjugate(), n, 2, psi);
      const Vector composed = repmatch::compose_output(run.outcomes[0].post, basis);
      CHECK(run.outcomes[0].fidelity_to_ideal >= 1.0 - 1e-9);
      CHECK(repmatch::fidelity(composed, direct) >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("failed branches rewind to the input, reference entanglement included") {
  const auto basis = repmatch::build_schur_basis(3, 2);
  std::mt19937_64 rng(71);
  const int ref_dim = 2;
  for (int trial = 0; trial < 4; ++trial) {
    const Matrix g = repmatch::haar_su(2, rng);
    const Vector psi = repmatch::random_state(8 * ref_dim, rng);
    const TargetSpec t = unitary_target(3, 2, g);
    const auto ops = repmatch::target_block_operators(t, basis);
    const auto run = repmatch::run_repmatch(psi, t, basis, nullptr, ref_dim);
    const auto reference = repmatch::decompose_input(psi, basis, Role::kUnitaryArray, ref_dim);
    for (size_t r = 1; r < run.outcomes.size(); ++r) {
      BlockState recovered = run.outcomes[r].post;
      repmatch::recovery_operator(ops, static_cast<int>(r)).apply(recovered);
      CHECK(repmatch::block_fidelity(recovered, reference) >= 1.0 - 1e-9);
      CHECK(recovered.padding_mass() < 1e-12);
      const Vector back = repmatch::compose_output(recovered, basis);
      CHECK(repmatch::fidelity(back, psi) >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("retry rounds keep success exact and exhaustion restores the input") {
  const auto basis = repmatch::build_schur_basis(4, 2);
  std::mt19937_64 rng(73);
  const Matrix g = repmatch::haar_su(2, rng);
  const Vector psi = repmatch::random_state(16, rng);
  const TargetSpec t = unitary_target(4, 2, g);
  const Vector ideal = repmatch::ideal_output(t, psi);

  bool saw_late_success = false, saw_exhaustion = false;
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    const auto run = repmatch::run_until_success(psi, t, basis, 2, seed);
    if (run.success) {
      CHECK(run.fidelity_to_ideal >= 1.0 - 1e-9);
      CHECK(repmatch::fidelity(run.output, ideal) >= 1.0 - 1e-9);
      if (run.rounds == 2) saw_late_success = true;
    } else {
      CHECK(run.rounds == 2);
      CHECK(run.fidelity_to_input >= 1.0 - 1e-9);
      CHECK(repmatch::fidelity(run.output, psi) >= 1.0 - 1e-9);
      saw_exhaustion = true;
    }
  }
  CHECK(saw_late_success);  // p = 1/3, so both behaviours appear in 60 seeds
  CHECK(saw_exhaustion);
}

TEST_CASE("repeat-until-success round counts follow the geometric law") {
  const auto basis = repmatch::build_schur_basis(2, 2);
  std::mt19937_64 rng(79);
  const Matrix g = repmatch::haar_su(2, rng);
  const Vector psi = repmatch::random_state(4, rng);
  const TargetSpec t = unitary_target(2, 2, g);

  const int trials = 2000;
  const double p = 0.5;
  double total_rounds = 0;
  for (int k = 0; k < trials; ++k) {
    const auto run = repmatch::run_until_success(psi, t, basis, 64, 1000 + k);
    REQUIRE(run.success);
    CHECK(run.fidelity_to_ideal >= 1.0 - 1e-9);
    total_rounds += run.rounds;
  }
  const double mean = total_rounds / trials;
  const double sigma = std::sqrt((1 - p) / (p * p) / trials);  // geometric sd of the mean
  CHECK(std::abs(mean - 1.0 / p) < 3 * sigma + 1e-9);
}

TEST_CASE("composite retry targets charge the documented query counts") {
  const auto basis = repmatch::build_schur_basis(2, 2);
  std::mt19937_64 rng(83);
  const Matrix g = repmatch::haar_su(2, rng);
  const Vector psi = repmatch::random_state(4, rng);
  const TargetSpec t = unitary_target(2, 2, g);

  // Round k's target is the previous round's target composed with the undo of
  // its failed branch, so the (forward, inverse) counts evolve as
  // f' = i' = f + i from (n, 0). Exhaustion appends one rewind record that
  // additionally pays for undoing the whole history: (f' + 0, i' + n).
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    const auto run = repmatch::run_until_success(psi, t, basis, 4, seed);
    const int records = run.transcript.round_count();
    const int played_rounds = run.success ? records : records - 1;
    long long f = t.n, inv = 0;
    for (int k = 0; k < played_rounds; ++k) {
      const auto& rec = run.transcript.rounds[static_cast<size_t>(k)];
      CHECK(rec.forward_queries == f);
      CHECK(rec.inverse_queries == inv);
      const long long next = f + inv;
      f = next;
      inv = next;
    }
    if (!run.success) {
      CHECK(run.rounds == 4);
      // After the loop (f, inv) hold the counts of the composite that the
      // rewind is built from.
      const auto& rec = run.transcript.rounds[static_cast<size_t>(records - 1)];
      CHECK(rec.forward_queries == f);
      CHECK(rec.inverse_queries == inv + t.n);
    }
  }
}
