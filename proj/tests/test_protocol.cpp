#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "mubenc/errors.hpp"
#include "mubenc/protocol.hpp"

using namespace mubenc;

namespace {

struct Setup {
  explicit Setup(int d) : fam(mub_family(Dimension(d))), table(build_shift_table(fam)) {}
  MubFamily fam;
  ShiftTable table;
};

bool is_affine(const Codeword& a) {
  const int d = a.d();
  const std::int64_t alpha = mod(a[1] - a[0], d);
  for (int l = 0; l < d; ++l) {
    if (a[static_cast<std::size_t>(l)] != mod(a[0] + alpha * l, d)) return false;
  }
  return true;
}

// Rank of a list of complex vectors by Gaussian elimination with partial pivoting.
std::size_t complex_rank(std::vector<std::vector<Cx>> rows, double tol) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < rows.size(); ++r) {
      if (std::abs(rows[r][c]) > std::abs(rows[best][c])) best = r;
    }
    if (std::abs(rows[best][c]) < tol) continue;
    std::swap(rows[best], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Cx f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<Cx> projector(const QuditState& s) {
  const std::size_t d = s.size();
  std::vector<Cx> p(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) p[i * d + j] = s[i] * std::conj(s[j]);
  }
  return p;
}

}  // namespace

TEST_CASE("bob_prepare") {
  for (int d : {2, 3, 5}) {
    const Setup s(d);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto p = bob_prepare(s.fam, seed);
      REQUIRE(p.string.qudits.size() == static_cast<std::size_t>(d));
      std::set<int> bases;
      for (std::size_t i = 0; i < p.string.qudits.size(); ++i) {
        const auto& q = p.string.qudits[i];
        bases.insert(q.basis);
        CHECK(q.basis >= 1);
        CHECK(q.basis <= d);
        CHECK(equal_up_to_phase(q.state, s.fam.state(q.basis, q.element)));
        CHECK(p.record.positions[i].basis == q.basis);
        CHECK(p.record.positions[i].element == q.element);
      }
      CHECK(bases.size() == static_cast<std::size_t>(d));
      CHECK(p.record.seed == seed);
    }
  }
  const Setup s(3);
  const auto a = bob_prepare(s.fam, 42);
  const auto b = bob_prepare(s.fam, 42);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.record.positions[i].basis == b.record.positions[i].basis);
    CHECK(a.record.positions[i].element == b.record.positions[i].element);
  }
  const std::vector<PreparationRecord::Entry> dup = {{1, 0}, {1, 1}, {2, 0}};
  CHECK_THROWS_AS(bob_prepare_fixed(s.fam, dup), InvariantViolation);
  const std::vector<PreparationRecord::Entry> comp = {{4, 0}};
  CHECK_THROWS_AS(bob_prepare_fixed(s.fam, comp), IndexOutOfRange);
}

TEST_CASE("bob_prepare draws every basis order") {
  const Setup s(3);
  std::set<std::vector<int>> orders;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::vector<int> order;
    for (const auto& e : bob_prepare(s.fam, seed).record.positions) order.push_back(e.basis);
    orders.insert(order);
  }
  CHECK(orders.size() == 6);
}

TEST_CASE("qubit worked example") {
  const Setup s(2);
  // |x+> from the X basis, |y+> from the XZ basis.
  const std::vector<PreparationRecord::Entry> entries = {{1, 0}, {2, 0}};
  const auto prep = bob_prepare_fixed(s.fam, entries);
  const auto out = alice_encode(prep.string, Codeword(2, {1, 0}), s.table);
  CHECK(equal_up_to_phase(out[0], s.fam.state(1, 1)));
  CHECK(equal_up_to_phase(out[1], s.fam.state(2, 0)));

  const auto same = alice_encode(prep.string, Codeword::zero(2), s.table);
  for (std::size_t i = 0; i < 2; ++i) CHECK(equal_up_to_phase(same[i], prep.string.qudits[i].state));
}

TEST_CASE("qubit round trip is exhaustive") {
  const Setup s(2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto prep = bob_prepare(s.fam, seed);
    for (const auto& a : all_codewords(2)) {
      CHECK(bob_decode(alice_encode(prep.string, a, s.table), prep.record, s.fam) == a);
    }
    CHECK(bob_decode(prep.string.states(), prep.record, s.fam) == Codeword::zero(2));
  }
}

TEST_CASE("encodable qutrit codewords round trip") {
  const Setup s(3);
  std::uint64_t encodable = 0;
  for (const auto& a : all_codewords(3)) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto prep = bob_prepare(s.fam, seed);
      if (is_affine(a)) {
        CHECK(bob_decode(alice_encode(prep.string, a, s.table), prep.record, s.fam) == a);
      } else {
        CHECK_THROWS_AS(alice_encode(prep.string, a, s.table), NoSolution);
      }
    }
    if (is_affine(a)) ++encodable;
  }
  CHECK(encodable == 9);
}

TEST_CASE("a unitary fixing two bases of a qutrit is a scalar") {
  // Matrices diagonal in basis A span {|a_t><a_t|}; same for B. The
  // intersection has dimension 2d - rank of the union. One dimension means
  // only multiples of the identity fix both bases elementwise, so codewords
  // with exactly one nonzero entry cannot be encoded blindly.
  for (int d : {3, 5}) {
    const auto fam = mub_family(Dimension(d));
    for (int a = 1; a <= d + 1; ++a) {
      for (int b = a + 1; b <= d + 1; ++b) {
        std::vector<std::vector<Cx>> span;
        for (int t = 0; t < d; ++t) {
          span.push_back(projector(fam.state(a, t)));
          span.push_back(projector(fam.state(b, t)));
        }
        CHECK(2 * d - complex_rank(span, 1e-9) == 1);
      }
    }
  }
}

TEST_CASE("blindness: metadata never reaches the encoder") {
  const Setup s(3);
  const auto prep = bob_prepare(s.fam, 5);
  PreparedString forged = prep.string;
  for (auto& q : forged.qudits) {
    q.basis = 3 - q.basis % 3;
    q.element = (q.element + 1) % 3;
  }
  const Codeword a(3, {1, 2, 0});
  const auto honest = alice_encode(prep.string, a, s.table);
  const auto fake = alice_encode(forged, a, s.table);
  for (std::size_t i = 0; i < honest.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(honest[i][j] == fake[i][j]);
  }
}

TEST_CASE("decoding is invariant under permuting positions") {
  const Setup s(5);
  const Codeword a(5, {2, 4, 1, 3, 0});  // alpha = 2, beta = 2
  const auto prep = bob_prepare(s.fam, 77);
  const auto encoded = alice_encode(prep.string, a, s.table);

  std::vector<std::size_t> perm = {3, 0, 4, 1, 2};
  std::vector<QuditState> permuted_states;
  PreparationRecord permuted_rec;
  for (auto i : perm) {
    permuted_states.push_back(encoded[i]);
    permuted_rec.positions.push_back(prep.record.positions[i]);
  }
  CHECK(bob_decode(encoded, prep.record, s.fam) == a);
  CHECK(bob_decode(permuted_states, permuted_rec, s.fam) == a);

  const auto rows = transcript(permuted_states, permuted_rec, s.fam);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].basis == prep.record.positions[perm[i]].basis);
}

TEST_CASE("decode errors") {
  const Setup s(3);
  const auto prep = bob_prepare(s.fam, 1);
  auto states = prep.string.states();
  const auto phase_gate = UnitaryMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, Cx(0, 1)}});
  states[0] = apply(phase_gate, s.fam.state(1, 1));
  PreparationRecord rec = prep.record;
  rec.positions[0] = {1, 1};
  CHECK_THROWS_AS(bob_decode(states, rec, s.fam), UnidentifiedState);
  states.pop_back();
  CHECK_THROWS_AS(bob_decode(states, prep.record, s.fam), DimensionMismatch);
}

TEST_CASE("transcript csv") {
  const Setup s(2);
  const std::vector<PreparationRecord::Entry> entries = {{2, 1}, {1, 0}};
  const auto prep = bob_prepare_fixed(s.fam, entries);
  const auto rows = transcript(alice_encode(prep.string, Codeword(2, {1, 1}), s.table), prep.record, s.fam);
  CHECK(transcript_csv(rows) == "position,basis,t,t_prime,shift\n0,2,1,0,1\n1,1,0,1,1\n");
}

TEST_CASE("roundtrip sweep bookkeeping") {
  const Setup s(3);
  const auto codewords = all_codewords(3);
  const auto r = roundtrip(s.fam, s.table, codewords, 2, 9);
  CHECK(r.attempted == 54);
  CHECK(r.decoded_ok == 18);
  CHECK(r.no_solution == 36);
  CHECK(r.mismatched == 0);
  CHECK_FALSE(r.all_passed());

  const Setup q(2);
  const auto all2 = all_codewords(2);
  CHECK(roundtrip(q.fam, q.table, all2, 10, 3).all_passed());
}

TEST_CASE("uniqueness") {
  const Setup s2(2);
  const auto u2 = uniqueness_check(s2.fam, s2.table);
  CHECK(u2.unique);
  CHECK(u2.codewords == 4);
  CHECK(u2.collisions == 0);

  const Setup s3(3);
  const auto u3 = uniqueness_check(s3.fam, s3.table);
  CHECK(u3.codewords == 27);
  CHECK(u3.encodable == 9);
  CHECK(u3.collisions == 0);
  CHECK_FALSE(u3.unique);

  const Codeword a(2, {1, 0});
  const std::vector<Codeword> twice = {a, a};
  const std::vector<PreparationRecord::Entry> entries = {{1, 0}, {2, 0}};
  CHECK(uniqueness_check(s2.fam, s2.table, twice, bob_prepare_fixed(s2.fam, entries)).collisions == 1);
}

TEST_CASE("partition posterior matches the closed form for every base tuple") {
  for (int d : {2, 3, 5}) {
    const Setup s(d);
    for (int m = 1; m <= d; ++m) {
      std::vector<int> pool(static_cast<std::size_t>(d) + 1);
      for (int i = 0; i <= d; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
      // Every m-subset in sorted order; the pattern partition ignores order.
      std::vector<bool> pick(pool.size(), false);
      std::fill(pick.begin(), pick.begin() + m, true);
      do {
        std::vector<int> bases;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (pick[i]) bases.push_back(pool[i]);
        }
        CHECK(partition_posterior(s.table, bases) == doctest::Approx(analytic_posterior(d, m)).epsilon(1e-12));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
}

TEST_CASE("partial decoding simulation") {
  const Setup s3(3);
  const auto r1 = simulate_partial_decoding(s3.table, 1, 100'000, 1);
  CHECK(r1.analytic_bits == doctest::Approx(1.3510).epsilon(1e-4));
  CHECK(std::abs(*r1.empirical_bits - r1.analytic_bits) < 0.02);

  const auto r3 = simulate_partial_decoding(s3.table, 3, 10'000, 1);
  CHECK(*r3.empirical_bits == 0.0);
  CHECK(r3.analytic_bits == 0.0);

  const Setup s2(2);
  CHECK(*simulate_partial_decoding(s2.table, 2, 10'000, 4).empirical_bits == 0.0);

  const auto again = simulate_partial_decoding(s3.table, 1, 100'000, 1);
  CHECK(*again.empirical_bits == *r1.empirical_bits);

  CHECK_THROWS_AS(simulate_partial_decoding(s3.table, 0, 10, 1), IndexOutOfRange);
  CHECK_THROWS_AS(simulate_partial_decoding(s3.table, 4, 10, 1), IndexOutOfRange);
}
