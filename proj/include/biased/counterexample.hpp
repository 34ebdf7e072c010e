#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biased/instance.hpp"
#include "biased/labelling.hpp"

namespace biased {

/// I and J partition {1..n} with {1, 2, n-2, n-1} in I and {3, 4, 5, n} in J.
struct OrderedPartition {
  int n = 0;
  std::vector<Vertex> I, J;  // ascending
};

/// All 2^(n-8) partitions; entry m puts free vertex 6 + i into I iff bit i of m is set.
std::vector<OrderedPartition> enumerate_partitions(int n);

/// Hamilton circuit through I ascending, then J ascending.
Circuit circuit_cij(const OrderedPartition& p);

/// K^(n-4)(n) with C_{I,J} unbalanced for every partition whose index bit is
/// set in q_mask.
BiasedInstance build_bq(int n, std::uint64_t q_mask);
BiasedInstance build_bq(const BiasedInstance& base, const std::vector<OrderedPartition>& partitions,
                        std::uint64_t q_mask);

struct QReport {
  std::uint64_t mask = 0;
  bool valid = false;
  LabellabilityVerdict verdict;

  /// "<mask> valid=<bool> labellable=<IsKa:a|No|Inconclusive>"
  std::string line() const;
};

struct CounterexampleOptions {
  int jobs = 1;
  /// n > 10 needs this set.
  bool allow_large = false;
  /// Check only this Q instead of every subset.
  std::optional<std::uint64_t> only_mask;
};

struct CounterexampleReport {
  int n = 0;
  std::vector<QReport> rows;  // ascending mask
  BigInt proper_count;        // 2^|P| - 2
  BigInt lower_bound;         // 2^(2^(n-9))
  bool count_ok = false;

  /// Every row valid, proper nonempty Q not labellable, Q = {} is K^(n-4), count holds.
  bool ok() const;
};

CounterexampleReport verify_counterexample_theorem(int n, const CounterexampleOptions& options = {});

}  // namespace biased
