#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mubenc/mub.hpp"

namespace mubenc {

/// Phases a_j = omega^{e_j} of a phased cyclic map |j> -> a_j |j+1>.
struct PhaseVector {
  std::vector<std::int64_t> exponents;
};

/// Source element T and one target t_k per basis k = 0..d-1 (basis b = k+1).
struct ShiftAssignment {
  std::int64_t source = 0;
  std::vector<std::int64_t> targets;

  /// Every target differs from the source.
  bool shifts_every_basis() const;
};

/// Phases that carry element T of basis k onto element t:
/// e_j = t(d-j-1) - T(d-j) + kj (mod d).
PhaseVector derive_phases(const Dimension& dim, int k, std::int64_t source, std::int64_t target);

/// U|j> = omega^{e_j} |j+1 mod d>.
UnitaryMatrix phased_cyclic_matrix(const Dimension& dim, const PhaseVector& phases);

/// A single phased cyclic map serves every basis only if the per-basis phase
/// ratios omega^{k - t_k + T} agree, i.e. (k - t_k) mod d is constant in k.
/// Evaluated in exact integer arithmetic.
bool assignment_consistent(const Dimension& dim, const ShiftAssignment& asg);

struct NoGoReport {
  int d = 0;
  std::uint64_t searched = 0;
  std::uint64_t consistent = 0;
  std::vector<ShiftAssignment> witnesses;
  /// Assignments whose basis-0 phased cyclic matrix was built and checked
  /// against every basis by direct multiplication.
  std::uint64_t matrix_checks = 0;
  /// Sampled matrices that shifted every basis as required (expected 0).
  std::uint64_t matrix_check_failures = 0;
};

/// d (d-1)^d, or nullopt on overflow.
std::optional<std::uint64_t> nogo_search_size(int d);

inline constexpr std::uint64_t kDefaultNogoBudget = 2'000'000;

/// Enumerates every (T, t_0..t_{d-1}) with t_k != T and counts consistent
/// assignments. Roughly `matrix_samples` evenly spaced assignments are also
/// checked at the matrix level against fam. Throws BudgetExceeded when the
/// search space exceeds budget.
NoGoReport nogo_search(const MubFamily& fam, std::uint64_t budget = kDefaultNogoBudget,
                       std::uint64_t matrix_samples = 64);

/// Same enumeration with the requirement t_k != T lifted for k = relaxed_k.
/// Returns the number of consistent assignments.
std::uint64_t relaxed_consistent_count(const Dimension& dim, int relaxed_k,
                                       std::uint64_t budget = kDefaultNogoBudget);

/// True iff U maps element `source` of basis b to element `target` up to phase.
bool maps_element(const MubFamily& fam, const UnitaryMatrix& u, int basis, std::int64_t source,
                  std::int64_t target, double tol = kTolerance);

}  // namespace mubenc
