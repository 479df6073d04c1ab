#include "mubenc/shift_ops.hpp"

#include <numeric>
#include <string>

#include "mubenc/errors.hpp"
#include "mubenc/gf_solve.hpp"

namespace mubenc {

int UnitaryId::row(int d) const {
  switch (kind) {
    case Kind::XZ:
      return m;
    case Kind::Z:
      return d;
    case Kind::Identity:
      return d + 1;
  }
  return d + 1;
}

UnitaryId UnitaryId::from_row(int d, int row) {
  if (row < 0 || row > d + 1) throw IndexOutOfRange("unitary row out of range");
  if (row < d) return xz(row);
  return row == d ? z() : identity();
}

std::string UnitaryId::label() const {
  switch (kind) {
    case Kind::XZ:
      return "XZ^" + std::to_string(m);
    case Kind::Z:
      return "Z";
    case Kind::Identity:
      return "I";
  }
  return "?";
}

std::vector<UnitaryId> all_unitary_ids(int d) {
  std::vector<UnitaryId> ids;
  for (int r = 0; r < d + 2; ++r) ids.push_back(UnitaryId::from_row(d, r));
  return ids;
}

UnitaryMatrix shift_unitary(const Dimension& dim, UnitaryId id) {
  switch (id.kind) {
    case UnitaryId::Kind::XZ:
      if (id.m < 0 || id.m >= dim.value()) throw IndexOutOfRange("XZ power out of range");
      return pauli_x(dim) * pauli_z(dim).pow(id.m);
    case UnitaryId::Kind::Z:
      return pauli_z(dim);
    case UnitaryId::Kind::Identity:
      break;
  }
  return UnitaryMatrix::identity(dim.value());
}

ShiftTable ShiftTable::from_rows(int d, std::vector<std::vector<std::int64_t>> rows) {
  if (rows.size() != static_cast<std::size_t>(d) + 2) throw InvariantViolation("shift table needs d+2 rows");
  for (auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(d) + 1) throw InvariantViolation("shift table needs d+1 columns");
    for (auto& c : row) {
      if (c < 0 || c >= d) throw InvariantViolation("shift amount outside Z_d");
    }
  }
  for (int m = 0; m < d; ++m) {
    if (rows[static_cast<std::size_t>(m)][static_cast<std::size_t>(m)] != 0) {
      throw InvariantViolation("XZ^" + std::to_string(m) + " must fix its own eigenbasis");
    }
  }
  if (rows[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)] != 0) {
    throw InvariantViolation("Z must fix the computational basis");
  }
  for (auto c : rows[static_cast<std::size_t>(d) + 1]) {
    if (c != 0) throw InvariantViolation("identity must not shift");
  }
  return ShiftTable(d, std::move(rows));
}

std::int64_t ShiftTable::shift(UnitaryId u, int basis) const {
  if (basis < 1 || basis > d_ + 1) throw IndexOutOfRange("basis out of range");
  return rows_[static_cast<std::size_t>(u.row(d_))][static_cast<std::size_t>(basis - 1)];
}

std::int64_t measure_shift(const MubFamily& fam, const UnitaryMatrix& u, int basis, double tol) {
  const int d = fam.d();
  std::int64_t offset = -1;
  for (int t = 0; t < d; ++t) {
    const int image = fam.identify(basis, apply(u, fam.state(basis, t)), tol);
    if (image < 0) {
      throw ImageOutsideBasis("element " + std::to_string(t) + " of basis " + std::to_string(basis) +
                              " is mapped outside the basis");
    }
    const std::int64_t c = mod(image - t, d);
    if (offset < 0) {
      offset = c;
    } else if (c != offset) {
      throw InconsistentShift("basis " + std::to_string(basis) + " is not shifted by a constant offset");
    }
  }
  return offset;
}

ShiftTable build_shift_table(const MubFamily& fam, double tol) {
  const Dimension& dim = fam.dimension();
  const int d = dim.value();
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(d) + 2,
                                              std::vector<std::int64_t>(static_cast<std::size_t>(d) + 1, 0));
  for (const UnitaryId& id : all_unitary_ids(d)) {
    if (id.kind == UnitaryId::Kind::Identity) continue;
    const UnitaryMatrix u = shift_unitary(dim, id);
    for (int b = 1; b <= d + 1; ++b) {
      try {
        rows[static_cast<std::size_t>(id.row(d))][static_cast<std::size_t>(b - 1)] = measure_shift(fam, u, b, tol);
      } catch (const ImageOutsideBasis& e) {
        throw ImageOutsideBasis(id.label() + ": " + e.what());
      } catch (const InconsistentShift& e) {
        throw InconsistentShift(id.label() + ": " + e.what());
      }
    }
  }
  return ShiftTable::from_rows(d, std::move(rows));
}

ShiftTable unit_shift_table(int d) {
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(d) + 2,
                                              std::vector<std::int64_t>(static_cast<std::size_t>(d) + 1, 1));
  for (int r = 0; r <= d; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 0;
  rows.back().assign(static_cast<std::size_t>(d) + 1, 0);
  return ShiftTable::from_rows(d, std::move(rows));
}

int shifted_bases_count(const ShiftTable& table, UnitaryId u) {
  int count = 0;
  for (int b = 1; b <= table.d() + 1; ++b) {
    if (table.shift(u, b) != 0) ++count;
  }
  return count;
}

ExponentVector solve_exponents(const ShiftTable& table, const Codeword& a) {
  const int d = table.d();
  if (a.d() != d) throw DimensionMismatch("codeword and shift table dimensions differ");
  gf::Matrix sys(static_cast<std::size_t>(d), static_cast<std::size_t>(d) + 1);
  for (int l = 1; l <= d; ++l) {
    for (int m = 0; m < d; ++m) sys.at(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(m)) = table.shift(UnitaryId::xz(m), l);
    sys.at(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(d)) = table.shift(UnitaryId::z(), l);
  }
  std::vector<std::int64_t> free_values(static_cast<std::size_t>(d) + 1, 0);
  free_values.back() = std::accumulate(a.entries().begin(), a.entries().end(), std::int64_t{0});

  const auto sol = gf::solve(std::move(sys), a.entries(), d, free_values);
  if (!sol) {
    std::string msg = "no composite of the shift unitaries realizes codeword (";
    for (std::size_t i = 0; i < a.entries().size(); ++i) msg += (i ? "," : "") + std::to_string(a[i]);
    throw NoSolution(msg + ")");
  }
  ExponentVector n;
  n.xz.assign(sol->x.begin(), sol->x.end() - 1);
  n.z = sol->x.back();
  return n;
}

UnitaryMatrix composite_unitary(const Dimension& dim, const ExponentVector& n) {
  const int d = dim.value();
  if (n.xz.size() != static_cast<std::size_t>(d)) throw DimensionMismatch("exponent vector needs d XZ powers");
  UnitaryMatrix v = UnitaryMatrix::identity(d);
  for (int m = 0; m < d; ++m) {
    v = shift_unitary(dim, UnitaryId::xz(m)).pow(mod(n.xz[static_cast<std::size_t>(m)], d)) * v;
  }
  return pauli_z(dim).pow(mod(n.z, d)) * v;
}

std::int64_t net_shift(const ShiftTable& table, const ExponentVector& n, int basis) {
  std::int64_t total = n.z * table.shift(UnitaryId::z(), basis);
  for (int m = 0; m < table.d(); ++m) total += n.xz[static_cast<std::size_t>(m)] * table.shift(UnitaryId::xz(m), basis);
  return mod(total, table.d());
}

}  // namespace mubenc
