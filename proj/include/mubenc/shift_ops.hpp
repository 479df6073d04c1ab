#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mubenc/codeword.hpp"
#include "mubenc/mub.hpp"

namespace mubenc {

/// One of the d+2 candidate shift unitaries: X Z^m, Z, or the identity.
struct UnitaryId {
  enum class Kind { XZ, Z, Identity };

  Kind kind = Kind::Identity;
  int m = 0;

  static UnitaryId xz(int m) { return {Kind::XZ, m}; }
  static UnitaryId z() { return {Kind::Z, 0}; }
  static UnitaryId identity() { return {Kind::Identity, 0}; }

  /// Row index in a shift table: XZ(m) -> m, Z -> d, Identity -> d+1.
  int row(int d) const;
  static UnitaryId from_row(int d, int row);
  std::string label() const;

  friend bool operator==(const UnitaryId&, const UnitaryId&) = default;
};

/// All d+2 ids in row order.
std::vector<UnitaryId> all_unitary_ids(int d);

UnitaryMatrix shift_unitary(const Dimension& dim, UnitaryId id);

/// c(u, b): u maps element t of basis b to element t + c (mod d), up to phase.
class ShiftTable {
 public:
  /// rows[u][b-1] for the d+2 unitaries and d+1 bases. Validates shape,
  /// range, and the fixed-basis invariants; throws InvariantViolation.
  static ShiftTable from_rows(int d, std::vector<std::vector<std::int64_t>> rows);

  int d() const { return d_; }
  std::int64_t shift(UnitaryId u, int basis) const;
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  friend bool operator==(const ShiftTable&, const ShiftTable&) = default;

 private:
  ShiftTable(int d, std::vector<std::vector<std::int64_t>> rows) : d_(d), rows_(std::move(rows)) {}

  int d_;
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Constant offset c with u|psi_t^b> ~ |psi_{t+c}^b> for every t. Throws
/// ImageOutsideBasis or InconsistentShift.
std::int64_t measure_shift(const MubFamily& fam, const UnitaryMatrix& u, int basis, double tol = kTolerance);

/// Brute-force oracle: applies every unitary to every basis state and reads
/// off the induced index permutation. Throws ImageOutsideBasis or
/// InconsistentShift when an image is not a basis state or the permutation
/// is not a constant cyclic offset.
ShiftTable build_shift_table(const MubFamily& fam, double tol = kTolerance);

/// The table the encoding recipe assumes: every non-identity unitary fixes
/// its own basis and shifts every other basis by exactly +1.
ShiftTable unit_shift_table(int d);

/// Number of bases with a nonzero shift under u.
int shifted_bases_count(const ShiftTable& table, UnitaryId u);

/// Powers of X Z^0 .. X Z^(d-1) and of Z.
struct ExponentVector {
  std::vector<std::int64_t> xz;
  std::int64_t z = 0;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// Solves sum_m n_m c(XZ(m), l) + n_Z c(Z, l) = a_l (mod d) for l = 1..d.
///
/// Pivots are taken in column order (n_0 .. n_{d-1}, n_Z). A free n_Z is set
/// to sum_l a_l mod d, every other free variable to zero. Throws NoSolution
/// when the system is inconsistent.
ExponentVector solve_exponents(const ShiftTable& table, const Codeword& a);

/// Z^{n_Z} (XZ^{d-1})^{n_{d-1}} ... (XZ^0)^{n_0}: the X Z^m factors act first
/// in ascending m, Z last.
UnitaryMatrix composite_unitary(const Dimension& dim, const ExponentVector& n);

/// Net shift of basis b under the composite, read from the table.
std::int64_t net_shift(const ShiftTable& table, const ExponentVector& n, int basis);

}  // namespace mubenc
