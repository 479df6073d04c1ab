#include "mubenc/dimension.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mubenc/errors.hpp"

namespace mubenc {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

Dimension::Dimension(int d) : d_(d) {
  if (!is_prime(d)) {
    throw InvalidDimension("dimension must be prime, got " + std::to_string(d));
  }
  omega_ = omega_pow(1);
}

Cx Dimension::omega_pow(std::int64_t e) const {
  const std::int64_t r = mod(e, d_);
  if (r == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / d_;
  return std::polar(1.0, angle);
}

Cx primitive_root(const Dimension& dim) { return dim.omega(); }

}  // namespace mubenc
