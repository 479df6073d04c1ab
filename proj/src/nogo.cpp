#include "mubenc/nogo.hpp"

#include <limits>
#include <string>

#include "mubenc/errors.hpp"

namespace mubenc {

namespace {

constexpr std::size_t kMaxWitnesses = 16;

// Visits every assignment (T, t_0..t_{d-1}) where t_k ranges over Z_d minus
// {T}, except that t_{relaxed_k} ranges over all of Z_d when relaxed_k >= 0.
template <typename Visit>
void enumerate_assignments(int d, int relaxed_k, Visit&& visit) {
  ShiftAssignment asg;
  asg.targets.assign(static_cast<std::size_t>(d), 0);
  for (std::int64_t T = 0; T < d; ++T) {
    asg.source = T;
    auto allowed = [&](int k, std::int64_t t) { return k == relaxed_k || t != T; };
    auto first_allowed = [&](int k) {
      std::int64_t t = 0;
      while (!allowed(k, t)) ++t;
      return t;
    };
    for (int k = 0; k < d; ++k) asg.targets[static_cast<std::size_t>(k)] = first_allowed(k);
    while (true) {
      visit(static_cast<const ShiftAssignment&>(asg));
      int k = d - 1;
      for (; k >= 0; --k) {
        auto& t = asg.targets[static_cast<std::size_t>(k)];
        do {
          ++t;
        } while (t < d && !allowed(k, t));
        if (t < d) break;
        t = first_allowed(k);
      }
      if (k < 0) break;
    }
  }
}

std::uint64_t checked_size(int d, std::uint64_t budget, bool relaxed) {
  auto size = nogo_search_size(d);
  if (size && relaxed) {
    // One coordinate has d choices instead of d-1.
    const std::uint64_t per = *size / static_cast<std::uint64_t>(d - 1);
    size = per > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d)
               ? std::nullopt
               : std::optional<std::uint64_t>(per * static_cast<std::uint64_t>(d));
  }
  if (!size || *size > budget) {
    throw BudgetExceeded("assignment space for d=" + std::to_string(d) + " exceeds the search budget of " +
                         std::to_string(budget));
  }
  return *size;
}

}  // namespace

bool ShiftAssignment::shifts_every_basis() const {
  for (auto t : targets) {
    if (t == source) return false;
  }
  return true;
}

PhaseVector derive_phases(const Dimension& dim, int k, std::int64_t source, std::int64_t target) {
  const int d = dim.value();
  if (k < 0 || k >= d) throw IndexOutOfRange("basis k must lie in 0..d-1");
  PhaseVector p;
  p.exponents.resize(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    p.exponents[static_cast<std::size_t>(j)] =
        mod(target * (d - j - 1) - source * (d - j) + static_cast<std::int64_t>(k) * j, d);
  }
  return p;
}

UnitaryMatrix phased_cyclic_matrix(const Dimension& dim, const PhaseVector& phases) {
  const int d = dim.value();
  if (phases.exponents.size() != static_cast<std::size_t>(d)) throw DimensionMismatch("phase vector needs d entries");
  std::vector<Cx> m(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j) {
    m[static_cast<std::size_t>((j + 1) % d) * d + j] = dim.omega_pow(phases.exponents[static_cast<std::size_t>(j)]);
  }
  return UnitaryMatrix::from_entries(d, std::move(m));
}

bool assignment_consistent(const Dimension& dim, const ShiftAssignment& asg) {
  const int d = dim.value();
  if (asg.targets.size() != static_cast<std::size_t>(d)) throw DimensionMismatch("assignment needs d targets");
  const std::int64_t x0 = mod(-asg.targets[0], d);
  for (int k = 1; k < d; ++k) {
    if (mod(k - asg.targets[static_cast<std::size_t>(k)], d) != x0) return false;
  }
  return true;
}

std::optional<std::uint64_t> nogo_search_size(int d) {
  if (d < 2) return std::nullopt;
  std::uint64_t n = static_cast<std::uint64_t>(d);
  for (int i = 0; i < d; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d - 1)) return std::nullopt;
    n *= static_cast<std::uint64_t>(d - 1);
  }
  return n;
}

bool maps_element(const MubFamily& fam, const UnitaryMatrix& u, int basis, std::int64_t source,
                  std::int64_t target, double tol) {
  return equal_up_to_phase(apply(u, fam.state(basis, static_cast<int>(source))),
                           fam.state(basis, static_cast<int>(target)), tol);
}

NoGoReport nogo_search(const MubFamily& fam, std::uint64_t budget, std::uint64_t matrix_samples) {
  const Dimension& dim = fam.dimension();
  const int d = dim.value();
  const std::uint64_t size = checked_size(d, budget, false);
  const std::uint64_t stride = matrix_samples == 0 ? 0 : std::max<std::uint64_t>(1, size / matrix_samples);

  NoGoReport report;
  report.d = d;
  std::uint64_t index = 0;
  enumerate_assignments(d, -1, [&](const ShiftAssignment& asg) {
    ++report.searched;
    if (assignment_consistent(dim, asg)) {
      ++report.consistent;
      if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(asg);
    }
    if (stride != 0 && index % stride == 0) {
      ++report.matrix_checks;
      const UnitaryMatrix u = phased_cyclic_matrix(dim, derive_phases(dim, 0, asg.source, asg.targets[0]));
      bool all_shifted = true;
      for (int k = 0; k < d && all_shifted; ++k) {
        all_shifted = maps_element(fam, u, k + 1, asg.source, asg.targets[static_cast<std::size_t>(k)]);
      }
      if (all_shifted) ++report.matrix_check_failures;
    }
    ++index;
  });
  return report;
}

std::uint64_t relaxed_consistent_count(const Dimension& dim, int relaxed_k, std::uint64_t budget) {
  const int d = dim.value();
  if (relaxed_k < 0 || relaxed_k >= d) throw IndexOutOfRange("relaxed basis must lie in 0..d-1");
  checked_size(d, budget, true);
  std::uint64_t consistent = 0;
  enumerate_assignments(d, relaxed_k, [&](const ShiftAssignment& asg) {
    if (assignment_consistent(dim, asg)) ++consistent;
  });
  return consistent;
}

}  // namespace mubenc
