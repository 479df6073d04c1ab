#include "mubenc/gf_solve.hpp"

#include <stdexcept>
#include <utility>

#include "mubenc/dimension.hpp"

namespace mubenc::gf {

std::int64_t inverse(std::int64_t a, std::int64_t p) {
  // Extended Euclid on (a, p).
  std::int64_t r0 = mod(a, p), r1 = p;
  std::int64_t s0 = 1, s1 = 0;
  if (r0 == 0) throw std::domain_error("zero has no inverse");
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  return mod(s0, p);
}

namespace {

// Reduces the augmented matrix [a | b] to reduced row echelon form in place
// and returns the pivot column of each leading row.
std::vector<std::size_t> reduce(Matrix& a, std::vector<std::int64_t>& b, std::int64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t sel = row;
    while (sel < a.rows && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(sel, c), a.at(row, c));
      if (!b.empty()) std::swap(b[sel], b[row]);
    }
    const std::int64_t inv = inverse(a.at(row, col), p);
    for (std::size_t c = 0; c < a.cols; ++c) a.at(row, c) = mod(a.at(row, c) * inv, p);
    if (!b.empty()) b[row] = mod(b[row] * inv, p);
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const std::int64_t f = a.at(r, col);
      for (std::size_t c = 0; c < a.cols; ++c) a.at(r, c) = mod(a.at(r, c) - f * a.at(row, c), p);
      if (!b.empty()) b[r] = mod(b[r] - f * b[row], p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix a, std::int64_t p) {
  for (auto& x : a.data) x = mod(x, p);
  std::vector<std::int64_t> none;
  return reduce(a, none, p).size();
}

std::optional<Solution> solve(Matrix a, std::span<const std::int64_t> b, std::int64_t p,
                              std::span<const std::int64_t> free_values) {
  if (b.size() != a.rows) throw std::invalid_argument("right-hand side length must match row count");
  if (!free_values.empty() && free_values.size() != a.cols) {
    throw std::invalid_argument("free_values length must match column count");
  }
  for (auto& x : a.data) x = mod(x, p);
  std::vector<std::int64_t> rhs(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = mod(b[i], p);
  if (rhs.empty()) return Solution{std::vector<std::int64_t>(a.cols, 0), {}};

  const std::vector<std::size_t> pivots = reduce(a, rhs, p);
  for (std::size_t r = pivots.size(); r < a.rows; ++r) {
    if (rhs[r] != 0) return std::nullopt;
  }

  std::vector<bool> is_pivot(a.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Solution sol{std::vector<std::int64_t>(a.cols, 0), pivots};
  for (std::size_t c = 0; c < a.cols; ++c) {
    if (!is_pivot[c] && !free_values.empty()) sol.x[c] = mod(free_values[c], p);
  }
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::int64_t v = rhs[r];
    for (std::size_t c = pivots[r] + 1; c < a.cols; ++c) {
      if (!is_pivot[c]) v -= a.at(r, c) * sol.x[c];
    }
    sol.x[pivots[r]] = mod(v, p);
  }
  return sol;
}

}  // namespace mubenc::gf
