#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mubenc/codeword.hpp"
#include "mubenc/infotheory.hpp"
#include "mubenc/rng.hpp"
#include "mubenc/shift_ops.hpp"

namespace mubenc {

struct PreparedQudit {
  int basis = 0;
  int element = 0;
  QuditState state;
};

/// The string Bob sends. Each position comes from a distinct basis in 1..d.
struct PreparedString {
  std::vector<PreparedQudit> qudits;

  std::vector<QuditState> states() const;
};

/// Bob's private record of what he sent.
struct PreparationRecord {
  struct Entry {
    int basis = 0;
    int element = 0;
  };
  std::vector<Entry> positions;
  std::uint64_t seed = 0;
};

/// Which positions Bob saw shifted.
using ObservationPattern = std::vector<bool>;

struct Preparation {
  PreparedString string;
  PreparationRecord record;
};

/// Random permutation of bases 1..d over the d positions, uniform elements.
Preparation bob_prepare(const MubFamily& fam, std::uint64_t seed);
/// Deterministic preparation from explicit (basis, element) pairs.
Preparation bob_prepare_fixed(const MubFamily& fam, std::span<const PreparationRecord::Entry> entries);

/// Applies the composite encoding for `a` identically to every state. Alice
/// sees only the states; no basis information enters. Throws NoSolution.
std::vector<QuditState> alice_encode(std::span<const QuditState> states, const Codeword& a,
                                     const ShiftTable& table);
std::vector<QuditState> alice_encode(const PreparedString& s, const Codeword& a,
                                     const ShiftTable& table);

/// Identifies each received state inside its known basis and writes the
/// observed shift into the slot of that basis. Throws UnidentifiedState or
/// DimensionMismatch.
Codeword bob_decode(std::span<const QuditState> encoded, const PreparationRecord& rec,
                    const MubFamily& fam, double tol = kTolerance);

/// Per-position decode rows: position, basis, sent element, received element, shift.
struct TranscriptRow {
  int position = 0;
  int basis = 0;
  int sent = 0;
  int received = 0;
  int shift = 0;
};
std::vector<TranscriptRow> transcript(std::span<const QuditState> encoded, const PreparationRecord& rec,
                                      const MubFamily& fam, double tol = kTolerance);
std::string transcript_csv(std::span<const TranscriptRow> rows);

struct RoundTripResult {
  std::uint64_t attempted = 0;
  std::uint64_t decoded_ok = 0;
  /// Codewords for which no composite exists (NoSolution).
  std::uint64_t no_solution = 0;
  /// Encoded but decoded to a different codeword.
  std::uint64_t mismatched = 0;
  std::vector<Codeword> failures;

  bool all_passed() const { return attempted > 0 && decoded_ok == attempted; }
};

/// Encodes and decodes each codeword against `preparations` random strings.
/// The p-th preparation of the i-th codeword is seeded from
/// Rng::substream_seed(seed, i * preparations + p).
RoundTripResult roundtrip(const MubFamily& fam, const ShiftTable& table, std::span<const Codeword> codewords,
                          int preparations, std::uint64_t seed, std::size_t max_failures_kept = 16);

/// Every codeword of Z_d^d in lexicographic order.
std::vector<Codeword> all_codewords(int d);
std::vector<Codeword> random_codewords(int d, std::size_t count, std::uint64_t seed);

struct UniquenessResult {
  std::uint64_t codewords = 0;
  std::uint64_t encodable = 0;
  /// Pairs of distinct codewords whose outputs agree at every position.
  std::uint64_t collisions = 0;
  bool unique = false;
};

/// Encodes every codeword onto one fixed preparation and compares outputs
/// pairwise. Unique only if every codeword is encodable and no two outputs
/// agree up to phase at every position.
UniquenessResult uniqueness_check(const MubFamily& fam, const ShiftTable& table,
                                  std::span<const Codeword> codewords, const Preparation& prep);
/// Exhaustive over Z_d^d on the identity preparation (basis l at position l, element 0).
UniquenessResult uniqueness_check(const MubFamily& fam, const ShiftTable& table);

/// Pattern observed when the hidden unitary u acts on qudits from `bases`.
ObservationPattern observe(const ShiftTable& table, UnitaryId u, std::span<const int> bases);

/// Exact H(U | S) for uniform U over the d+2 unitaries, from the partition of
/// unitaries by observation pattern.
double partition_posterior(const ShiftTable& table, std::span<const int> bases);

/// Monte-Carlo over `trials` draws of m distinct bases from 1..d+1 and a
/// uniform hidden unitary; reports plug-in and analytic posterior entropy.
EntropyReport simulate_partial_decoding(const ShiftTable& table, int m, std::uint64_t trials,
                                        std::uint64_t seed);

}  // namespace mubenc
