#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mubenc/errors.hpp"
#include "mubenc/gf_solve.hpp"
#include "mubenc/rng.hpp"
#include "mubenc/shift_ops.hpp"

using namespace mubenc;

namespace {

// Offsets derived by hand from the amplitude formula: X Z^m sends element t of
// the X Z^k eigenbasis to t + k - m and shifts the computational basis by one;
// Z lowers every non-computational index by one.
std::int64_t expected_shift(int d, UnitaryId u, int b) {
  switch (u.kind) {
    case UnitaryId::Kind::XZ:
      return b == d + 1 ? 1 : mod(b - 1 - u.m, d);
    case UnitaryId::Kind::Z:
      return b == d + 1 ? 0 : d - 1;
    case UnitaryId::Kind::Identity:
      return 0;
  }
  return -1;
}

// Affine codewords a_l = alpha (l-1) + beta are the ones the Weyl composites reach.
Codeword affine_codeword(int d, std::int64_t alpha, std::int64_t beta) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(d));
  for (int l = 1; l <= d; ++l) a[static_cast<std::size_t>(l - 1)] = alpha * (l - 1) + beta;
  return Codeword(d, a);
}

bool is_affine(const Codeword& a) {
  const int d = a.d();
  const std::int64_t beta = a[0];
  const std::int64_t alpha = d > 1 ? mod(a[1] - a[0], d) : 0;
  return a == affine_codeword(d, alpha, beta);
}

void check_composite_shifts(const MubFamily& fam, const ExponentVector& n, const Codeword& a) {
  const auto v = composite_unitary(fam.dimension(), n);
  const int d = fam.d();
  for (int l = 1; l <= d; ++l) {
    for (int t = 0; t < d; ++t) {
      CHECK(equal_up_to_phase(apply(v, fam.state(l, t)), fam.state(l, static_cast<int>(mod(t + a.for_basis(l), d)))));
    }
  }
}

}  // namespace

TEST_CASE("shift unitaries") {
  const Dimension d2(2);
  CHECK(shift_unitary(d2, UnitaryId::xz(1)).max_abs_diff(UnitaryMatrix::from_rows({{0, -1}, {1, 0}})) < 1e-15);
  CHECK(shift_unitary(d2, UnitaryId::identity()).max_abs_diff(UnitaryMatrix::identity(2)) == 0.0);
  const Dimension d3(3);
  CHECK(shift_unitary(d3, UnitaryId::xz(0)).max_abs_diff(pauli_x(d3)) == 0.0);
  CHECK(shift_unitary(d3, UnitaryId::z()).max_abs_diff(pauli_z(d3)) == 0.0);
  CHECK_THROWS_AS(shift_unitary(d3, UnitaryId::xz(3)), IndexOutOfRange);
}

TEST_CASE("unitary ids round-trip through table rows") {
  for (int d : {2, 3, 5}) {
    const auto ids = all_unitary_ids(d);
    CHECK(ids.size() == static_cast<std::size_t>(d) + 2);
    for (int r = 0; r < d + 2; ++r) CHECK(ids[static_cast<std::size_t>(r)].row(d) == r);
  }
}

TEST_CASE("oracle table matches the hand-derived offsets") {
  for (int d : {2, 3, 5, 7, 11}) {
    CAPTURE(d);
    const auto table = build_shift_table(mub_family(Dimension(d)));
    for (const auto& u : all_unitary_ids(d)) {
      for (int b = 1; b <= d + 1; ++b) CHECK(table.shift(u, b) == expected_shift(d, u, b));
      if (u.kind == UnitaryId::Kind::XZ) CHECK(table.shift(u, u.m + 1) == 0);
    }
    CHECK(table.shift(UnitaryId::xz(0), d + 1) == 1);
    CHECK(table.shift(UnitaryId::z(), d + 1) == 0);
  }
}

TEST_CASE("every non-identity unitary shifts exactly d bases") {
  for (int d : {2, 3, 5, 7}) {
    const auto table = build_shift_table(mub_family(Dimension(d)));
    for (const auto& u : all_unitary_ids(d)) {
      CHECK(shifted_bases_count(table, u) == (u.kind == UnitaryId::Kind::Identity ? 0 : d));
    }
  }
  const auto t3 = build_shift_table(mub_family(Dimension(3)));
  CHECK(t3.shift(UnitaryId::z(), 1) != 0);
  CHECK(t3.shift(UnitaryId::z(), 1) == t3.shift(UnitaryId::z(), 2));
  CHECK(t3.shift(UnitaryId::z(), 2) == t3.shift(UnitaryId::z(), 3));
}

TEST_CASE("shift table validation") {
  CHECK_NOTHROW(unit_shift_table(3));
  auto rows = unit_shift_table(3).rows();
  rows[0][0] = 1;
  CHECK_THROWS_AS(ShiftTable::from_rows(3, rows), InvariantViolation);
  rows = unit_shift_table(3).rows();
  rows.back()[2] = 1;
  CHECK_THROWS_AS(ShiftTable::from_rows(3, rows), InvariantViolation);
  rows = unit_shift_table(3).rows();
  rows[1][0] = 3;
  CHECK_THROWS_AS(ShiftTable::from_rows(3, rows), InvariantViolation);
}

TEST_CASE("oracle error paths") {
  const MubFamily fam = mub_family(Dimension(3));
  // Swapping |1> and |2> permutes the computational basis non-cyclically; a
  // non-Clifford phase gate sends the X-basis states outside their basis.
  const auto swap12 = UnitaryMatrix::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  CHECK_THROWS_AS(measure_shift(fam, swap12, 4), InconsistentShift);
  const auto phase_gate = UnitaryMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, Cx(0, 1)}});
  CHECK_THROWS_AS(measure_shift(fam, phase_gate, 1), ImageOutsideBasis);
  CHECK(measure_shift(fam, pauli_x(Dimension(3)), 4) == 1);
}

TEST_CASE("solve_exponents examples") {
  for (int d : {2, 3, 5}) {
    const auto table = build_shift_table(mub_family(Dimension(d)));
    const auto n = solve_exponents(table, Codeword::zero(d));
    for (int l = 1; l <= d; ++l) CHECK(net_shift(table, n, l) == 0);
  }

  const auto n = solve_exponents(unit_shift_table(2), Codeword(2, {1, 0}));
  CHECK(n.xz == std::vector<std::int64_t>{1, 0});
  CHECK(n.z == 1);

  const MubFamily fam3 = mub_family(Dimension(3));
  const auto t3 = build_shift_table(fam3);
  const Codeword a(3, {1, 2, 0});
  check_composite_shifts(fam3, solve_exponents(t3, a), a);
}

TEST_CASE("unit-shift table reproduces the recipe exponents") {
  // n_m = d - a_{m+1}, n_Z = sum a_l.
  for (int d : {2, 3}) {
    const auto table = unit_shift_table(d);
    for (const auto& a : [&] {
           std::vector<Codeword> all;
           for (std::uint64_t i = 0; i < codeword_count(d); ++i) all.push_back(Codeword::from_index(d, i));
           return all;
         }()) {
      const auto n = solve_exponents(table, a);
      std::int64_t sum = 0;
      for (int m = 0; m < d; ++m) {
        CHECK(n.xz[static_cast<std::size_t>(m)] == mod(d - a[static_cast<std::size_t>(m)], d));
        sum += a[static_cast<std::size_t>(m)];
      }
      CHECK(n.z == mod(sum, d));
    }
  }
}

TEST_CASE("oracle system has rank two for odd d") {
  for (int d : {3, 5, 7}) {
    const auto table = build_shift_table(mub_family(Dimension(d)));
    gf::Matrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d) + 1);
    for (int l = 1; l <= d; ++l) {
      for (const auto& u : all_unitary_ids(d)) {
        if (u.kind != UnitaryId::Kind::Identity) m.at(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(u.row(d))) = table.shift(u, l);
      }
    }
    CHECK(gf::rank(m, d) == 2);
  }
}

TEST_CASE("solver soundness: exhaustive for small d") {
  for (int d : {2, 3}) {
    const MubFamily fam = mub_family(Dimension(d));
    const auto table = build_shift_table(fam);
    std::uint64_t solved = 0;
    for (std::uint64_t i = 0; i < codeword_count(d); ++i) {
      const auto a = Codeword::from_index(d, i);
      if (is_affine(a)) {
        check_composite_shifts(fam, solve_exponents(table, a), a);
        ++solved;
      } else {
        CHECK_THROWS_AS(solve_exponents(table, a), NoSolution);
      }
    }
    CHECK(solved == static_cast<std::uint64_t>(d) * d);
  }
  const auto table = build_shift_table(mub_family(Dimension(3)));
  CHECK_THROWS_AS(solve_exponents(table, Codeword(3, {1, 0, 0})), NoSolution);
}

TEST_CASE("solver soundness: sampled for d = 5, 7") {
  for (int d : {5, 7}) {
    const MubFamily fam = mub_family(Dimension(d));
    const auto table = build_shift_table(fam);
    Rng rng(d);
    for (int trial = 0; trial < 500; ++trial) {
      const auto alpha = static_cast<std::int64_t>(rng.below(d));
      const auto beta = static_cast<std::int64_t>(rng.below(d));
      const auto a = affine_codeword(d, alpha, beta);
      const auto n = solve_exponents(table, a);
      for (int l = 1; l <= d; ++l) CHECK(net_shift(table, n, l) == a.for_basis(l));
      if (trial % 25 == 0) check_composite_shifts(fam, n, a);
    }
  }
}

TEST_CASE("canonical solution is linear") {
  for (int d : {3, 5, 7}) {
    const auto table = build_shift_table(mub_family(Dimension(d)));
    Rng rng(100 + d);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = affine_codeword(d, rng.below(d), rng.below(d));
      const auto b = affine_codeword(d, rng.below(d), rng.below(d));
      const auto na = solve_exponents(table, a);
      const auto nb = solve_exponents(table, b);
      const auto nab = solve_exponents(table, a + b);
      for (int m = 0; m < d; ++m) {
        const auto i = static_cast<std::size_t>(m);
        CHECK(mod(na.xz[i] + nb.xz[i], d) == nab.xz[i]);
      }
      CHECK(mod(na.z + nb.z, d) == nab.z);
    }
  }
}

TEST_CASE("composite order only changes a global phase") {
  for (int d : {2, 3, 5}) {
    const Dimension dim(d);
    const auto table = build_shift_table(mub_family(dim));
    Rng rng(7 * d);
    for (int trial = 0; trial < 20; ++trial) {
      const auto n = solve_exponents(table, affine_codeword(d, rng.below(d), rng.below(d)));
      const auto forward = composite_unitary(dim, n);
      UnitaryMatrix reversed = pauli_z(dim).pow(n.z);
      for (int m = d - 1; m >= 0; --m) {
        reversed = reversed * shift_unitary(dim, UnitaryId::xz(m)).pow(n.xz[static_cast<std::size_t>(m)]);
      }
      // forward = c * reversed for some unit scalar c.
      Cx c = 0.0;
      for (std::size_t i = 0; i < forward.entries().size(); ++i) {
        if (std::abs(reversed.entries()[i]) > 0.5) {
          c = forward.entries()[i] / reversed.entries()[i];
          break;
        }
      }
      CHECK(std::abs(std::abs(c) - 1.0) < 1e-12);
      CHECK(forward.max_abs_diff(c * reversed) < 1e-10);
    }
  }
}
