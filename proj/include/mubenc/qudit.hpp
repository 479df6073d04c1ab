#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mubenc/dimension.hpp"

namespace mubenc {

/// Pure state of a single qudit: d complex amplitudes with unit norm.
class QuditState {
 public:
  /// Validates the unit-norm invariant within tol; throws InvariantViolation.
  static QuditState from_amplitudes(std::vector<Cx> amplitudes, double tol = kTolerance);
  /// Computational basis state |index>.
  static QuditState basis(int d, int index);

  std::size_t size() const { return amps_.size(); }
  const Cx& operator[](std::size_t j) const { return amps_[j]; }
  std::span<const Cx> amplitudes() const { return amps_; }

  /// Multiplies every amplitude by a scalar of unit modulus.
  QuditState with_phase(Cx phase) const;

 private:
  explicit QuditState(std::vector<Cx> amps) : amps_(std::move(amps)) {}
  friend class UnitaryMatrix;

  std::vector<Cx> amps_;
};

/// <a|b>, conjugate-linear in the first argument.
Cx inner(const QuditState& a, const QuditState& b);

/// True iff |<a|b>| = 1 within tol, i.e. a and b differ only by a global phase.
bool equal_up_to_phase(const QuditState& a, const QuditState& b, double tol = kTolerance);

/// Dense d x d unitary stored row-major.
class UnitaryMatrix {
 public:
  /// Validates U^dagger U = I entrywise within tol; throws InvariantViolation.
  static UnitaryMatrix from_entries(int d, std::vector<Cx> row_major, double tol = kTolerance);
  static UnitaryMatrix from_rows(std::initializer_list<std::initializer_list<Cx>> rows,
                                 double tol = kTolerance);
  static UnitaryMatrix identity(int d);

  int dim() const { return d_; }
  const Cx& operator()(int row, int col) const { return m_[static_cast<std::size_t>(row) * d_ + col]; }
  std::span<const Cx> entries() const { return m_; }

  UnitaryMatrix adjoint() const;
  /// Non-negative integer power; pow(0) is the identity.
  UnitaryMatrix pow(std::int64_t n) const;

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);
  friend UnitaryMatrix operator*(Cx scalar, const UnitaryMatrix& a);

  /// Largest entrywise modulus of (this - other).
  double max_abs_diff(const UnitaryMatrix& other) const;

 private:
  UnitaryMatrix(int d, std::vector<Cx> m) : d_(d), m_(std::move(m)) {}
  friend QuditState apply(const UnitaryMatrix& u, const QuditState& s);

  int d_;
  std::vector<Cx> m_;
};

/// Matrix-vector product. Throws DimensionMismatch.
QuditState apply(const UnitaryMatrix& u, const QuditState& s);

/// Cyclic shift X|j> = |j+1 mod d>.
UnitaryMatrix pauli_x(const Dimension& dim);
/// Clock Z|j> = omega^j |j>.
UnitaryMatrix pauli_z(const Dimension& dim);

/// True iff z*x = omega * x*z entrywise within tol.
bool weyl_relation_holds(const UnitaryMatrix& z, const UnitaryMatrix& x, Cx omega, double tol = 1e-12);
/// Weyl commutation check for the generalized Pauli pair of dim.
bool check_commutation(const Dimension& dim, double tol = 1e-12);

}  // namespace mubenc
