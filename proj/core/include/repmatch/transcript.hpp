#pragma once

#include "repmatch/cost_model.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace repmatch {

// ceil(log2 v) for v >= 1: qubits needed for a register of that dimension.
int qubits_for_dimension(long long v);

// One inter-station state transfer. `dimension` is the support dimension that
// determines the qubit cost; `ambient_dimension` is the register product it
// is embedded in (equal to `dimension` when the support fills the registers).
struct TranscriptMessage {
  std::string direction;  // "A->B" or "B->A"
  std::string register_name;
  long long dimension = 1;
  long long ambient_dimension = 1;
  int qubits = 0;
  int round = 1;
};

// Per-round record: matching outcome and black-box query counts. A round's
// gate may be a composite built from earlier failures, so its query count can
// exceed one application's worth.
struct RoundRecord {
  int round = 1;
  int outcome = 0;  // branch label, 0 = success
  long long forward_queries = 0;
  long long inverse_queries = 0;
};

struct Transcript {
  static constexpr const char* kSchema = "transcript/1";

  std::string session_id;
  std::string protocol;  // "repmatch" | "teleport" | "store-retrieve"
  Task task = Task::kUnitaryArray;
  int n = 0;
  int d = 0;

  std::vector<TranscriptMessage> messages;
  std::vector<RoundRecord> rounds;

  void add_message(const std::string& direction, const std::string& register_name,
                   long long dimension, long long ambient_dimension, int round);

  long long forward_qubits() const;   // A->B total
  long long backward_qubits() const;  // B->A total
  long long total_qubits() const { return forward_qubits() + backward_qubits(); }
  int round_count() const { return static_cast<int>(rounds.size()); }
  long long forward_queries() const;
  long long inverse_queries() const;

  std::string to_json() const;
};

// Black-box access counter: one application of the target touches
// `uses_per_application` single-gate queries (n sites, or (d-1) n for the
// conjugation target).
struct GateOracle {
  int uses_per_application = 0;
  long long forward = 0;
  long long inverse = 0;

  void charge(long long applications = 1) { forward += applications * uses_per_application; }
  void charge_inverse(long long applications = 1) {
    inverse += applications * uses_per_application;
  }
};

}  // namespace repmatch
