#include "repmatch/session.hpp"

#include "repmatch/cost_model.hpp"
#include "repmatch/transcript.hpp"

#include <doctest.h>

using repmatch::SessionConfig;
using repmatch::Task;

TEST_CASE("qubit counts per register dimension") {
  CHECK(repmatch::qubits_for_dimension(1) == 0);
  CHECK(repmatch::qubits_for_dimension(2) == 1);
  CHECK(repmatch::qubits_for_dimension(3) == 2);
  CHECK(repmatch::qubits_for_dimension(16) == 4);
  CHECK(repmatch::qubits_for_dimension(17) == 5);
}

TEST_CASE("transcript totals are sums of their parts") {
  repmatch::Transcript t;
  t.add_message("A->B", "R", 5, 5, 1);
  t.add_message("B->A", "C", 9, 15, 1);
  t.add_message("A->B", "R", 5, 5, 2);
  CHECK(t.forward_qubits() == 6);
  CHECK(t.backward_qubits() == 4);
  CHECK(t.total_qubits() == 10);
  CHECK(t.messages[1].qubits == 4);
  CHECK(t.messages[1].ambient_dimension == 15);
  t.rounds.push_back({1, 2, 4, 0});
  t.rounds.push_back({2, 0, 4, 4});
  CHECK(t.forward_queries() == 8);
  CHECK(t.inverse_queries() == 4);
  CHECK(t.round_count() == 2);
  CHECK(t.to_json().find("\"schema\": \"transcript/1\"") != std::string::npos);
}

TEST_CASE("matching sessions meter exactly the calculator cost") {
  for (int n = 1; n <= 10; ++n) {
    SessionConfig config;
    config.protocol = "repmatch";
    config.task = Task::kUnitaryArray;
    config.n = n;
    config.d = 2;
    config.trials = 1;
    const auto result = repmatch::execute_session(config);
    const auto report = repmatch::cost_report(n, 2, Task::kUnitaryArray);
    CHECK(result.ok);
    CHECK(result.transcript.total_qubits() == report.c_rm);
    CHECK(result.oracle.forward == n);  // one application per round
  }

  SessionConfig perm;
  perm.protocol = "repmatch";
  perm.task = Task::kPermutation;
  perm.n = 6;
  perm.d = 2;
  perm.perm = "(1 2)(3 4 5)";
  const auto presult = repmatch::execute_session(perm);
  CHECK(presult.ok);
  CHECK(presult.transcript.total_qubits() ==
        repmatch::cost_report(6, 2, Task::kPermutation).c_rm);

  SessionConfig conj;
  conj.protocol = "repmatch";
  conj.task = Task::kConjugation;
  conj.n = 3;
  conj.d = 2;
  const auto cresult = repmatch::execute_session(conj);
  CHECK(cresult.ok);
  CHECK(cresult.transcript.total_qubits() ==
        repmatch::cost_report(3, 2, Task::kConjugation).c_rm);
  CHECK(cresult.oracle.forward == 3);  // (d - 1) * n conjugation queries
}

TEST_CASE("oracle queries accumulate over trials") {
  SessionConfig config;
  config.protocol = "repmatch";
  config.task = Task::kUnitaryArray;
  config.n = 4;
  config.d = 2;
  config.trials = 3;
  const auto result = repmatch::execute_session(config);
  CHECK(result.ok);
  CHECK(result.oracle.forward == 12);
  CHECK(result.oracle.inverse == 0);
}

TEST_CASE("teleportation sessions transfer one backward resource register") {
  SessionConfig config;
  config.protocol = "teleport";
  config.task = Task::kUnitaryArray;
  config.n = 2;
  config.d = 2;
  config.trials = 2;
  const auto result = repmatch::execute_session(config);
  CHECK(result.ok);
  CHECK(result.transcript.forward_qubits() == 0);
  CHECK(result.transcript.backward_qubits() == 4);  // ceil(log2 10) per trial? one trial kept
  const auto& msg = result.transcript.messages.front();
  CHECK(msg.direction == "B->A");
  CHECK(msg.register_name == "E");
  CHECK(msg.dimension == 10);          // support: sum of squared block dimensions
  CHECK(msg.ambient_dimension == 16);  // ambient: d_tot^2
  CHECK(msg.qubits == 4);
  CHECK(result.oracle.forward == 2 * 2);  // one application per trial
}

TEST_CASE("storage sessions transfer one backward memory register") {
  SessionConfig config;
  config.protocol = "store-retrieve";
  config.task = Task::kStorageRetrieval;
  config.n = 2;
  config.d = 2;
  const auto result = repmatch::execute_session(config);
  CHECK(result.ok);
  CHECK(result.transcript.forward_qubits() == 0);
  CHECK(result.transcript.backward_qubits() == 4);
  const auto& msg = result.transcript.messages.front();
  CHECK(msg.register_name == "M");
  CHECK(msg.dimension == 10);
  CHECK(msg.ambient_dimension == 16);
  CHECK(result.summary_json.find("memory_qubits") != std::string::npos);
}

TEST_CASE("sessions are deterministic under fixed seeds") {
  SessionConfig config;
  config.protocol = "repmatch";
  config.task = Task::kUnitaryArray;
  config.n = 3;
  config.d = 2;
  config.trials = 4;
  config.seed = 99;
  config.g_seed = 77;
  const auto a = repmatch::execute_session(config);
  const auto b = repmatch::execute_session(config);
  CHECK(a.summary_json == b.summary_json);
  CHECK(a.transcript.to_json() == b.transcript.to_json());
}

TEST_CASE("invalid protocol and task combinations are rejected") {
  SessionConfig config;
  config.protocol = "teleport";
  config.task = Task::kPermutation;
  config.n = 2;
  config.d = 2;
  CHECK_THROWS(repmatch::execute_session(config));

  config.protocol = "no-such-protocol";
  config.task = Task::kUnitaryArray;
  CHECK_THROWS(repmatch::execute_session(config));
}

TEST_CASE("until-success sessions amplify to the requested failure budget") {
  SessionConfig config;
  config.protocol = "repmatch";
  config.task = Task::kUnitaryArray;
  config.n = 2;
  config.d = 2;
  config.trials = 50;
  config.until_success = true;
  config.eps = 1e-9;  // 30 rounds at p = 1/2
  const auto result = repmatch::execute_session(config);
  CHECK(result.ok);
  CHECK(result.summary_json.find("\"success_rate\": 1.0") != std::string::npos);
}
