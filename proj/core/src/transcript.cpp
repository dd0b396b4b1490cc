#include "repmatch/transcript.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace repmatch {

int qubits_for_dimension(long long v) {
  if (v < 1) throw std::invalid_argument("dimension must be >= 1");
  return ceil_log2(BigInt(v));
}

void Transcript::add_message(const std::string& direction, const std::string& register_name,
                             long long dimension, long long ambient_dimension, int round) {
  if (direction != "A->B" && direction != "B->A")
    throw std::invalid_argument("direction must be A->B or B->A");
  TranscriptMessage m;
  m.direction = direction;
  m.register_name = register_name;
  m.dimension = dimension;
  m.ambient_dimension = ambient_dimension;
  m.qubits = qubits_for_dimension(dimension);
  m.round = round;
  messages.push_back(std::move(m));
}

long long Transcript::forward_qubits() const {
  long long total = 0;
  for (const auto& m : messages)
    if (m.direction == "A->B") total += m.qubits;
  return total;
}

long long Transcript::backward_qubits() const {
  long long total = 0;
  for (const auto& m : messages)
    if (m.direction == "B->A") total += m.qubits;
  return total;
}

long long Transcript::forward_queries() const {
  long long total = 0;
  for (const auto& r : rounds) total += r.forward_queries;
  return total;
}

long long Transcript::inverse_queries() const {
  long long total = 0;
  for (const auto& r : rounds) total += r.inverse_queries;
  return total;
}

std::string Transcript::to_json() const {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["session"] = session_id;
  j["protocol"] = protocol;
  j["task"] = task_name(task);
  j["n"] = n;
  j["d"] = d;
  nlohmann::json msgs = nlohmann::json::array();
  for (const auto& m : messages)
    msgs.push_back({{"direction", m.direction},
                    {"register", m.register_name},
                    {"dimension", m.dimension},
                    {"ambient_dimension", m.ambient_dimension},
                    {"qubits", m.qubits},
                    {"round", m.round}});
  j["messages"] = std::move(msgs);
  nlohmann::json rds = nlohmann::json::array();
  for (const auto& r : rounds)
    rds.push_back({{"round", r.round},
                   {"outcome", r.outcome},
                   {"forward_queries", r.forward_queries},
                   {"inverse_queries", r.inverse_queries}});
  j["rounds"] = std::move(rds);
  j["totals"] = {{"forward_qubits", forward_qubits()},
                 {"backward_qubits", backward_qubits()},
                 {"qubits", total_qubits()},
                 {"rounds", round_count()},
                 {"forward_queries", forward_queries()},
                 {"inverse_queries", inverse_queries()}};
  return j.dump(2);
}

}  // namespace repmatch
