#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mubenc {

/// Posterior uncertainty about Alice's unitary after observing m qudits.
struct EntropyReport {
  int d = 0;
  int m = 0;
  double analytic_bits = 0.0;
  /// Exact value tallied from the pattern -> unitary-set partition induced by
  /// the shift table (simulation only).
  std::optional<double> partition_bits;
  std::optional<double> empirical_bits;
  std::optional<std::uint64_t> trials;
  /// Rough upper bound on the downward bias of the plug-in estimate,
  /// (cells - 1) / (2 N ln 2) summed over observed patterns.
  std::optional<double> plugin_bias_bound_bits;
};

struct EfficiencyRow {
  int d = 0;
  double capacity_bits = 0.0;
  double max_info_bits = 0.0;
  double ratio = 0.0;
};

/// -sum p_i log2 p_i with 0 log 0 = 0. Throws InvalidDistribution unless
/// every p_i >= 0 and the sum is 1 within 1e-9.
double shannon_entropy(std::span<const double> p);

/// Prior uncertainty over the d+2 equiprobable unitaries: log2(d+2).
double initial_uncertainty(int d);

/// Closed-form posterior entropy after observing m qudits from distinct bases.
///   m = 1:  (d/(d+2)) log2 d + 2/(d+2)
///   m >= 2: ((d-m+1)/(d+2)) log2(d-m+1)
/// Throws IndexOutOfRange unless 1 <= m <= d.
double analytic_posterior(int d, int m);

/// Capacity of the ideal channel carrying one of d+2 unitaries.
double capacity(int d);
/// d log2 d: what d perfectly distinguishable qudits can carry.
double max_info(int d);
double efficiency(int d);

/// One row per prime in [2, d_max].
std::vector<EfficiencyRow> efficiency_table(int d_max);

}  // namespace mubenc
