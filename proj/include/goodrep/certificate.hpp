// Certificates: the JSON records every command and suite emits.  A
// certificate binds a claim identifier to the exact inputs (digest), the
// seed, the verification status, and an evidence payload.  The payload is a
// pure function of (inputs, seed); wall time lives outside it so reruns
// reproduce the payload byte for byte.
#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include <json.hpp>

#include "goodrep/error.hpp"

namespace goodrep {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a, 64-bit; stable across platforms, used only to fingerprint inputs.
inline std::string fnv1a_digest(const std::string& data) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

struct Certificate {
  std::string claim;                 // stable claim identifier
  std::string command;               // command line (or suite call) echo
  std::string version = kToolVersion;
  std::optional<uint64_t> seed;      // absent for deterministic claims
  std::string inputs_digest;         // fnv1a of the canonical input encoding
  std::string status;                // verified | refuted | evidence | error
  nlohmann::json payload;            // evidence; deterministic given inputs+seed
  double wall_ms = 0.0;              // measured; excluded from payload identity

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["claim"] = claim;
    j["command"] = command;
    j["version"] = version;
    j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
    j["inputs_digest"] = inputs_digest;
    j["status"] = status;
    j["payload"] = payload;
    j["wall_ms"] = wall_ms;
    return j;
  }

  // The reproducible part: everything except the timing.
  std::string payload_string() const {
    nlohmann::json j = to_json();
    j.erase("wall_ms");
    return j.dump();
  }
};

class WallClock {
 public:
  WallClock() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace goodrep
