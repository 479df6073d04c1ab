#pragma once

#include <cstdint>
#include <vector>

namespace mubenc {

/// Per-basis shift amounts (a_1, ..., a_d) in Z_d. Slot l-1 holds the shift
/// for basis l.
class Codeword {
 public:
  /// Reduces every entry mod d; throws InvalidDimension if the length is not d.
  Codeword(int d, std::vector<std::int64_t> entries);
  static Codeword zero(int d);
  /// The index-th codeword in lexicographic order, 0 <= index < d^d.
  static Codeword from_index(int d, std::uint64_t index);

  int d() const { return d_; }
  std::int64_t operator[](std::size_t slot) const { return a_[slot]; }
  /// Shift for basis l in 1..d.
  std::int64_t for_basis(int basis) const { return a_[static_cast<std::size_t>(basis - 1)]; }
  const std::vector<std::int64_t>& entries() const { return a_; }

  Codeword operator+(const Codeword& other) const;
  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  int d_;
  std::vector<std::int64_t> a_;
};

/// d^d, throwing InvalidDimension on overflow.
std::uint64_t codeword_count(int d);

}  // namespace mubenc
