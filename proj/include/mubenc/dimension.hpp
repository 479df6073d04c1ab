#pragma once

#include <complex>
#include <cstdint>

namespace mubenc {

using Cx = std::complex<double>;

/// Default tolerance for state and unitary checks.
inline constexpr double kTolerance = 1e-9;

bool is_prime(std::int64_t n);

/// Reduces x into [0, d).
constexpr std::int64_t mod(std::int64_t x, std::int64_t d) {
  const std::int64_t r = x % d;
  return r < 0 ? r + d : r;
}

/// A prime qudit dimension together with its primitive root of unity.
class Dimension {
 public:
  /// Throws InvalidDimension unless d is prime.
  explicit Dimension(int d);

  int value() const { return d_; }
  Cx omega() const { return omega_; }

  /// omega^e, computed from e mod d so large exponents stay exact.
  Cx omega_pow(std::int64_t e) const;

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  int d_;
  Cx omega_;
};

/// exp(i 2 pi / d).
Cx primitive_root(const Dimension& dim);

}  // namespace mubenc
