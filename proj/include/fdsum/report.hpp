#pragma once

#include <string>
#include <vector>

namespace fdsum {

// Outcome of checking one theorem over a parameter grid. `passed` holds
// exactly when `failures` is empty; at most kMaxWitnesses witnesses are
// stored (the grid text records truncation).
struct Witness {
  std::string params;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  static constexpr std::size_t kMaxWitnesses = 100;

  std::string theorem_id;
  std::string grid;
  bool passed = true;
  std::vector<Witness> failures;
  std::size_t failure_count = 0;  // total, including unstored witnesses

  void add_failure(std::string params, std::string lhs, std::string rhs) {
    passed = false;
    ++failure_count;
    if (failures.size() < kMaxWitnesses) {
      failures.push_back({std::move(params), std::move(lhs), std::move(rhs)});
    }
  }

  void merge(const VerificationReport& other) {
    if (!other.passed) passed = false;
    failure_count += other.failure_count;
    for (const auto& w : other.failures) {
      if (failures.size() >= kMaxWitnesses) break;
      failures.push_back(w);
    }
  }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace fdsum
