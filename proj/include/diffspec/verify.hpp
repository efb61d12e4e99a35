#pragma once

// Cross-checks every closed form for one (p, n) against its brute-force
// oracle and collects the outcome as a JSON-serializable report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffspec/ff.hpp"

namespace diffspec::verify {

/// Size caps for brute-force work. Overridable through DIFFSPEC_CAP_Q2,
/// DIFFSPEC_CAP_Q3 and DIFFSPEC_CAP_Q1.
struct Caps {
  std::uint64_t q1 = 1'000'000;  // O(q) enumerations (direct character sums)
  std::uint64_t q2 = 4000;       // O(q^2) work (DDT, triple counters)
  std::uint64_t q3 = 100;        // O(q^3) work (quadruple counters, N4 brute force)

  /// Defaults overridden by the environment. Throws InvalidArgument on a
  /// malformed value.
  static Caps from_env();
};

enum class Status { pass, fail, skipped, flagged };

const char* to_string(Status s);

struct Check {
  std::string name;
  nlohmann::ordered_json closed;
  nlohmann::ordered_json oracle;
  Status status = Status::skipped;
  std::string note;
};

struct Report {
  std::uint32_t p = 0;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::string modulus;
  std::vector<Check> checks;

  /// No executed check failed. Skipped and flagged checks do not count.
  bool ok() const;
  const Check* find(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
};

Report run(std::uint32_t p, unsigned n, const Caps& caps,
           const std::optional<ff::Poly>& modulus = std::nullopt);

}  // namespace diffspec::verify
