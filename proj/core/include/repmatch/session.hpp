#pragma once

#include "repmatch/baselines.hpp"
#include "repmatch/rep_matching.hpp"

#include <cstdint>
#include <string>

namespace repmatch {

// One two-station execution request: which protocol to drive, the target
// task, how many trials, and the seeds that make every run reproducible.
struct SessionConfig {
  std::string protocol = "repmatch";  // "repmatch" | "teleport" | "store-retrieve"
  Task task = Task::kUnitaryArray;
  int n = 2;
  int d = 2;
  int trials = 1;
  uint64_t seed = 1;    // input states and branch sampling
  uint64_t g_seed = 7;  // target draw
  std::string perm;     // cycle notation for the permutation task; "" = random
  bool until_success = false;
  int max_rounds = 0;  // 0 = derive from eps via the amplification bound
  double eps = 1e-6;
  int ref_dim = 1;
};

struct SessionResult {
  bool ok = false;
  std::string summary_json;
  Transcript transcript;  // last trial's
  GateOracle oracle;      // accumulated black-box queries over all trials
};

// Builds the required bases, draws the target, and drives the requested
// protocol for the configured number of trials, metering every inter-station
// transfer and every black-box query. Deterministic for fixed config.
SessionResult execute_session(const SessionConfig& config);

}  // namespace repmatch
