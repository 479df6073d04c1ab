#pragma once

#include <cstdint>
#include <vector>

#include "mubenc/qudit.hpp"

namespace mubenc {

// Bases are numbered 1..d+1. Basis b <= d is the eigenbasis of X Z^(b-1);
// basis d+1 is the computational basis. Elements are numbered 0..d-1.

/// s_j = j + (j+1) + ... + (d-1), reduced mod d.
std::int64_t partial_index_sum(int d, int j);

/// Element t of basis b.
///
/// For b <= d the amplitudes are (1/sqrt d) omega^(t(d-j) - (b-1) s_j). That
/// expression yields eigenvectors of X Z^k only when k(d-1) is even; in the
/// remaining case (d = 2, k = 1) each amplitude also carries exp(-i pi j / d)
/// so the state is an eigenvector of XZ. Throws IndexOutOfRange.
QuditState mub_state(const Dimension& dim, int basis, int element);

/// The complete set of d+1 mutually unbiased bases.
class MubFamily {
 public:
  const Dimension& dimension() const { return dim_; }
  int d() const { return dim_.value(); }
  int basis_count() const { return d() + 1; }

  const QuditState& state(int basis, int element) const;

  /// Checks intra-basis orthonormality and inter-basis unbiasedness at tol.
  /// Throws MubInvariantViolation naming the first offending pair.
  void verify(double tol = kTolerance) const;

  /// Index of the basis-b element equal to s up to phase, or -1.
  int identify(int basis, const QuditState& s, double tol = kTolerance) const;

 private:
  explicit MubFamily(Dimension dim);
  friend MubFamily mub_family(const Dimension& dim, double tol);

  Dimension dim_;
  std::vector<std::vector<QuditState>> bases_;
};

/// Builds and verifies the family, including the eigenvector property
/// of every basis-b state under X Z^(b-1).
MubFamily mub_family(const Dimension& dim, double tol = kTolerance);

/// Generator X Z^(b-1) for b <= d, Z for b = d+1.
UnitaryMatrix basis_generator(const Dimension& dim, int basis);

}  // namespace mubenc
