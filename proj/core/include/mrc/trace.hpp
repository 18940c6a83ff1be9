#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace mrc {

enum class Enforcement { Strict, RecordOnly };

/// Per-machine word cap, the O(n^eps) bound instantiated as ceil(c * n^eps)
/// for a per-algorithm constant c. Under Strict a machine whose resident
/// words exceed memory_words aborts the job.
struct MachineBudget {
  std::uint64_t memory_words = 0;  // 0 means unlimited
  Enforcement enforcement = Enforcement::Strict;

  static MachineBudget unlimited() { return {0, Enforcement::RecordOnly}; }
};

/// Exact resource trace of one map/shuffle/reduce round.
struct RoundTrace {
  int round_index = 0;
  std::uint64_t machines_used = 0;       // distinct reducer keys
  std::uint64_t peak_machine_words = 0;  // max resident words over machines
  std::uint64_t total_machine_words = 0; // sum of resident words over machines
  std::uint64_t shuffled_words = 0;      // total value words moved
  std::uint64_t work_ops = 0;            // unit-cost primitive operations
  std::uint64_t mult_ops = 0;            // multiplication events within work_ops
};

/// Exact quotient used for the memory-price metric.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational reduced() const {
    std::uint64_t g = std::gcd(num, den);
    return g ? Rational{num / g, den / g} : *this;
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Aggregated resource usage of a whole job.
struct ResourceReport {
  std::vector<RoundTrace> rounds;

  int round_count() const { return static_cast<int>(rounds.size()); }
  std::uint64_t peak_machines() const;
  std::uint64_t peak_machine_words() const;
  /// Max over rounds of the summed resident words, the "peak total memory".
  std::uint64_t peak_round_memory_words() const;
  std::uint64_t total_memory_words() const;
  std::uint64_t total_work_ops() const;
  std::uint64_t total_mult_ops() const;
  std::uint64_t total_shuffled_words() const;

  void append(const ResourceReport& other);

  /// Trace export, schema:
  /// {rounds:[{round,machines,peak_words,shuffled_words,work_ops}],
  ///  peak_machines, peak_machine_words, total_work, memory_price}
  std::string to_json(std::uint64_t sequential_baseline_words) const;
};

/// Peak total memory over the rounds divided by a sequential baseline.
Rational memory_price(const ResourceReport& report,
                      std::uint64_t sequential_baseline_words);

}  // namespace mrc
