#include "mubenc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "mubenc/errors.hpp"

namespace mubenc {

std::vector<QuditState> PreparedString::states() const {
  std::vector<QuditState> out;
  out.reserve(qudits.size());
  for (const auto& q : qudits) out.push_back(q.state);
  return out;
}

Preparation bob_prepare_fixed(const MubFamily& fam, std::span<const PreparationRecord::Entry> entries) {
  Preparation p;
  std::vector<bool> used(static_cast<std::size_t>(fam.d()) + 2, false);
  for (const auto& e : entries) {
    if (e.basis < 1 || e.basis > fam.d()) throw IndexOutOfRange("prepared bases must lie in 1..d");
    if (used[static_cast<std::size_t>(e.basis)]) throw InvariantViolation("prepared bases must be distinct");
    used[static_cast<std::size_t>(e.basis)] = true;
    p.string.qudits.push_back({e.basis, e.element, fam.state(e.basis, e.element)});
    p.record.positions.push_back(e);
  }
  return p;
}

Preparation bob_prepare(const MubFamily& fam, std::uint64_t seed) {
  const int d = fam.d();
  Rng rng(seed);
  std::vector<int> bases(static_cast<std::size_t>(d));
  std::iota(bases.begin(), bases.end(), 1);
  // Fisher-Yates with the portable bounded draw.
  for (std::size_t i = bases.size() - 1; i > 0; --i) {
    std::swap(bases[i], bases[rng.below(i + 1)]);
  }
  std::vector<PreparationRecord::Entry> entries;
  for (int b : bases) entries.push_back({b, static_cast<int>(rng.below(static_cast<std::uint64_t>(d)))});
  Preparation p = bob_prepare_fixed(fam, entries);
  p.record.seed = seed;
  return p;
}

std::vector<QuditState> alice_encode(std::span<const QuditState> states, const Codeword& a,
                                     const ShiftTable& table) {
  const Dimension dim(table.d());
  const UnitaryMatrix v = composite_unitary(dim, solve_exponents(table, a));
  std::vector<QuditState> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(apply(v, s));
  return out;
}

std::vector<QuditState> alice_encode(const PreparedString& s, const Codeword& a, const ShiftTable& table) {
  return alice_encode(s.states(), a, table);
}

std::vector<TranscriptRow> transcript(std::span<const QuditState> encoded, const PreparationRecord& rec,
                                      const MubFamily& fam, double tol) {
  if (encoded.size() != rec.positions.size()) throw DimensionMismatch("encoded string and record differ in length");
  std::vector<TranscriptRow> rows;
  for (std::size_t i = 0; i < encoded.size(); ++i) {
    const auto& e = rec.positions[i];
    const int received = fam.identify(e.basis, encoded[i], tol);
    if (received < 0) {
      throw UnidentifiedState("position " + std::to_string(i) + " matches no element of basis " +
                              std::to_string(e.basis));
    }
    rows.push_back({static_cast<int>(i), e.basis, e.element, received,
                    static_cast<int>(mod(received - e.element, fam.d()))});
  }
  return rows;
}

Codeword bob_decode(std::span<const QuditState> encoded, const PreparationRecord& rec, const MubFamily& fam,
                    double tol) {
  std::vector<std::int64_t> a(static_cast<std::size_t>(fam.d()), 0);
  for (const auto& row : transcript(encoded, rec, fam, tol)) {
    a[static_cast<std::size_t>(row.basis - 1)] = row.shift;
  }
  return Codeword(fam.d(), std::move(a));
}

std::string transcript_csv(std::span<const TranscriptRow> rows) {
  std::ostringstream os;
  os << "position,basis,t,t_prime,shift\n";
  for (const auto& r : rows) {
    os << r.position << ',' << r.basis << ',' << r.sent << ',' << r.received << ',' << r.shift << '\n';
  }
  return os.str();
}

std::vector<Codeword> all_codewords(int d) {
  const std::uint64_t n = codeword_count(d);
  std::vector<Codeword> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Codeword::from_index(d, i));
  return out;
}

std::vector<Codeword> random_codewords(int d, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Codeword> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(d));
    for (auto& x : a) x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(d)));
    out.emplace_back(d, std::move(a));
  }
  return out;
}

RoundTripResult roundtrip(const MubFamily& fam, const ShiftTable& table, std::span<const Codeword> codewords,
                          int preparations, std::uint64_t seed, std::size_t max_failures_kept) {
  RoundTripResult result;
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    const Codeword& a = codewords[i];
    for (int p = 0; p < preparations; ++p) {
      ++result.attempted;
      const auto prep =
          bob_prepare(fam, Rng::substream_seed(seed, i * static_cast<std::uint64_t>(preparations) + p));
      bool ok = false;
      try {
        ok = bob_decode(alice_encode(prep.string, a, table), prep.record, fam) == a;
        if (!ok) ++result.mismatched;
      } catch (const NoSolution&) {
        ++result.no_solution;
      }
      if (ok) {
        ++result.decoded_ok;
      } else if (result.failures.size() < max_failures_kept &&
                 (result.failures.empty() || !(result.failures.back() == a))) {
        result.failures.push_back(a);
      }
    }
  }
  return result;
}

UniquenessResult uniqueness_check(const MubFamily& fam, const ShiftTable& table,
                                  std::span<const Codeword> codewords, const Preparation& prep) {
  if (fam.d() != table.d()) throw DimensionMismatch("family and shift table dimensions differ");
  UniquenessResult result;
  result.codewords = codewords.size();
  std::vector<std::vector<QuditState>> outputs;
  for (const auto& a : codewords) {
    try {
      outputs.push_back(alice_encode(prep.string, a, table));
    } catch (const NoSolution&) {
      continue;
    }
  }
  result.encodable = outputs.size();
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    for (std::size_t j = i + 1; j < outputs.size(); ++j) {
      bool same = true;
      for (std::size_t q = 0; q < outputs[i].size() && same; ++q) {
        same = equal_up_to_phase(outputs[i][q], outputs[j][q]);
      }
      if (same) ++result.collisions;
    }
  }
  result.unique = result.encodable == result.codewords && result.collisions == 0;
  return result;
}

UniquenessResult uniqueness_check(const MubFamily& fam, const ShiftTable& table) {
  std::vector<PreparationRecord::Entry> entries;
  for (int b = 1; b <= fam.d(); ++b) entries.push_back({b, 0});
  const auto codewords = all_codewords(fam.d());
  return uniqueness_check(fam, table, codewords, bob_prepare_fixed(fam, entries));
}

ObservationPattern observe(const ShiftTable& table, UnitaryId u, std::span<const int> bases) {
  ObservationPattern s;
  s.reserve(bases.size());
  for (int b : bases) s.push_back(table.shift(u, b) != 0);
  return s;
}

double partition_posterior(const ShiftTable& table, std::span<const int> bases) {
  const int d = table.d();
  std::map<ObservationPattern, int> cells;
  for (const auto& u : all_unitary_ids(d)) ++cells[observe(table, u, bases)];
  const double total = d + 2;
  double h = 0.0;
  for (const auto& [pattern, size] : cells) {
    // Uniform prior: the posterior within a cell is uniform over its members.
    h += (size / total) * std::log2(static_cast<double>(size));
  }
  return h;
}

EntropyReport simulate_partial_decoding(const ShiftTable& table, int m, std::uint64_t trials, std::uint64_t seed) {
  const int d = table.d();
  if (m < 1 || m > d) throw IndexOutOfRange("observed qudit count must lie in 1..d");
  if (trials == 0) throw IndexOutOfRange("at least one trial is required");

  // Key: drawn bases followed by the observed pattern.
  std::map<std::vector<int>, std::map<int, std::uint64_t>> counts;
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng(Rng::substream_seed(seed, i));
    std::vector<int> pool(static_cast<std::size_t>(d) + 1);
    std::iota(pool.begin(), pool.end(), 1);
    for (int k = 0; k < m; ++k) {
      const auto pick = static_cast<std::size_t>(k) + rng.below(pool.size() - static_cast<std::size_t>(k));
      std::swap(pool[static_cast<std::size_t>(k)], pool[pick]);
    }
    const std::vector<int> bases(pool.begin(), pool.begin() + m);
    const int row = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 2));
    const auto pattern = observe(table, UnitaryId::from_row(d, row), bases);

    std::vector<int> key = bases;
    for (bool s : pattern) key.push_back(s ? 1 : 0);
    ++counts[key][row];
  }

  double h = 0.0;
  double bias = 0.0;
  const double n = static_cast<double>(trials);
  for (const auto& [key, by_unitary] : counts) {
    std::uint64_t cell_total = 0;
    for (const auto& [row, c] : by_unitary) cell_total += c;
    std::vector<double> p;
    for (const auto& [row, c] : by_unitary) p.push_back(static_cast<double>(c) / static_cast<double>(cell_total));
    h += (static_cast<double>(cell_total) / n) * shannon_entropy(p);
    bias += static_cast<double>(by_unitary.size() - 1) / (2.0 * n * std::log(2.0));
  }

  std::vector<int> canonical(static_cast<std::size_t>(m));
  std::iota(canonical.begin(), canonical.end(), 1);

  EntropyReport report;
  report.d = d;
  report.m = m;
  report.analytic_bits = analytic_posterior(d, m);
  report.partition_bits = partition_posterior(table, canonical);
  report.empirical_bits = h;
  report.trials = trials;
  report.plugin_bias_bound_bits = bias;
  return report;
}

}  // namespace mubenc
