#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mubenc::gf {

/// Dense matrix over the prime field Z_p, row-major.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  Matrix(std::size_t rows, std::size_t cols) : rows(rows), cols(cols), data(rows * cols, 0) {}
  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Multiplicative inverse mod prime p. Requires a != 0 mod p.
std::int64_t inverse(std::int64_t a, std::int64_t p);

/// Rank of a over Z_p.
std::size_t rank(Matrix a, std::int64_t p);

struct Solution {
  std::vector<std::int64_t> x;
  std::vector<std::size_t> pivot_columns;
};

/// Solves a x = b over Z_p by Gauss-Jordan elimination with pivots taken in
/// column order. Free variables take free_values[col] (zero when the span is
/// empty). Returns nullopt when the system is inconsistent.
std::optional<Solution> solve(Matrix a, std::span<const std::int64_t> b, std::int64_t p,
                              std::span<const std::int64_t> free_values = {});

}  // namespace mubenc::gf
