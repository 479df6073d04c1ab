#include "mubenc/infotheory.hpp"

#include <cmath>
#include <string>

#include "mubenc/dimension.hpp"
#include "mubenc/errors.hpp"

namespace mubenc {

namespace {

void require_prime(int d) {
  if (!is_prime(d)) throw InvalidDimension("dimension must be prime, got " + std::to_string(d));
}

}  // namespace

double shannon_entropy(std::span<const double> p) {
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0)) throw InvalidDistribution("probabilities must be non-negative");
    total += x;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidDistribution("probabilities must sum to 1");
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

double initial_uncertainty(int d) {
  require_prime(d);
  return std::log2(static_cast<double>(d) + 2.0);
}

double analytic_posterior(int d, int m) {
  require_prime(d);
  if (m < 1 || m > d) throw IndexOutOfRange("observed qudit count must lie in 1..d");
  const double denom = d + 2.0;
  if (m == 1) return (d / denom) * std::log2(static_cast<double>(d)) + 2.0 / denom;
  const int ambiguous = d - m + 1;
  if (ambiguous == 1) return 0.0;
  return (ambiguous / denom) * std::log2(static_cast<double>(ambiguous));
}

double capacity(int d) { return initial_uncertainty(d); }

double max_info(int d) {
  require_prime(d);
  return d * std::log2(static_cast<double>(d));
}

double efficiency(int d) { return capacity(d) / max_info(d); }

std::vector<EfficiencyRow> efficiency_table(int d_max) {
  std::vector<EfficiencyRow> rows;
  for (int d = 2; d <= d_max; ++d) {
    if (!is_prime(d)) continue;
    rows.push_back({d, capacity(d), max_info(d), efficiency(d)});
  }
  return rows;
}

}  // namespace mubenc
