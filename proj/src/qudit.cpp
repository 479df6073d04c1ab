#include "mubenc/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mubenc/errors.hpp"

namespace mubenc {

QuditState QuditState::from_amplitudes(std::vector<Cx> amplitudes, double tol) {
  if (amplitudes.empty()) throw InvariantViolation("state has no amplitudes");
  double norm2 = 0.0;
  for (const Cx& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > tol) {
    throw InvariantViolation("state is not normalized: |psi|^2 = " + std::to_string(norm2));
  }
  return QuditState(std::move(amplitudes));
}

QuditState QuditState::basis(int d, int index) {
  if (d < 1 || index < 0 || index >= d) throw IndexOutOfRange("basis index out of range");
  std::vector<Cx> amps(static_cast<std::size_t>(d));
  amps[static_cast<std::size_t>(index)] = 1.0;
  return QuditState(std::move(amps));
}

QuditState QuditState::with_phase(Cx phase) const {
  std::vector<Cx> out(amps_);
  for (Cx& a : out) a *= phase;
  return from_amplitudes(std::move(out));
}

Cx inner(const QuditState& a, const QuditState& b) {
  if (a.size() != b.size()) throw DimensionMismatch("inner product of states of different size");
  Cx acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) acc += std::conj(a[j]) * b[j];
  return acc;
}

bool equal_up_to_phase(const QuditState& a, const QuditState& b, double tol) {
  if (a.size() != b.size()) return false;
  return std::abs(std::abs(inner(a, b)) - 1.0) < tol;
}

UnitaryMatrix UnitaryMatrix::from_entries(int d, std::vector<Cx> row_major, double tol) {
  if (d < 1 || row_major.size() != static_cast<std::size_t>(d) * d) {
    throw DimensionMismatch("unitary needs d*d entries");
  }
  UnitaryMatrix u(d, std::move(row_major));
  const UnitaryMatrix product = u.adjoint() * u;
  if (product.max_abs_diff(identity(d)) > tol) {
    throw InvariantViolation("matrix is not unitary");
  }
  return u;
}

UnitaryMatrix UnitaryMatrix::from_rows(std::initializer_list<std::initializer_list<Cx>> rows, double tol) {
  const int d = static_cast<int>(rows.size());
  std::vector<Cx> m;
  m.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != d) throw DimensionMismatch("unitary must be square");
    m.insert(m.end(), row.begin(), row.end());
  }
  return from_entries(d, std::move(m), tol);
}

UnitaryMatrix UnitaryMatrix::identity(int d) {
  std::vector<Cx> m(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i) * d + i] = 1.0;
  return UnitaryMatrix(d, std::move(m));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  std::vector<Cx> m(m_.size());
  for (int r = 0; r < d_; ++r) {
    for (int c = 0; c < d_; ++c) m[static_cast<std::size_t>(c) * d_ + r] = std::conj((*this)(r, c));
  }
  return UnitaryMatrix(d_, std::move(m));
}

UnitaryMatrix UnitaryMatrix::pow(std::int64_t n) const {
  if (n < 0) throw IndexOutOfRange("negative matrix power");
  UnitaryMatrix result = identity(d_);
  UnitaryMatrix base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.d_ != b.d_) throw DimensionMismatch("matrix product of different dimensions");
  const int d = a.d_;
  std::vector<Cx> m(static_cast<std::size_t>(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int k = 0; k < d; ++k) {
      const Cx x = a(r, k);
      if (x == Cx{}) continue;
      for (int c = 0; c < d; ++c) m[static_cast<std::size_t>(r) * d + c] += x * b(k, c);
    }
  }
  return UnitaryMatrix(d, std::move(m));
}

UnitaryMatrix operator*(Cx scalar, const UnitaryMatrix& a) {
  std::vector<Cx> m(a.m_);
  for (Cx& x : m) x *= scalar;
  return UnitaryMatrix(a.d_, std::move(m));
}

double UnitaryMatrix::max_abs_diff(const UnitaryMatrix& other) const {
  if (d_ != other.d_) throw DimensionMismatch("comparing matrices of different dimensions");
  double worst = 0.0;
  for (std::size_t i = 0; i < m_.size(); ++i) worst = std::max(worst, std::abs(m_[i] - other.m_[i]));
  return worst;
}

QuditState apply(const UnitaryMatrix& u, const QuditState& s) {
  if (static_cast<std::size_t>(u.dim()) != s.size()) {
    throw DimensionMismatch("applying a " + std::to_string(u.dim()) + "-dim unitary to a " +
                            std::to_string(s.size()) + "-dim state");
  }
  const int d = u.dim();
  std::vector<Cx> out(static_cast<std::size_t>(d));
  for (int r = 0; r < d; ++r) {
    Cx acc = 0.0;
    for (int c = 0; c < d; ++c) acc += u(r, c) * s[static_cast<std::size_t>(c)];
    out[static_cast<std::size_t>(r)] = acc;
  }
  return QuditState::from_amplitudes(std::move(out));
}

UnitaryMatrix pauli_x(const Dimension& dim) {
  const int d = dim.value();
  std::vector<Cx> m(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j) m[static_cast<std::size_t>((j + 1) % d) * d + j] = 1.0;
  return UnitaryMatrix::from_entries(d, std::move(m));
}

UnitaryMatrix pauli_z(const Dimension& dim) {
  const int d = dim.value();
  std::vector<Cx> m(static_cast<std::size_t>(d) * d);
  for (int j = 0; j < d; ++j) m[static_cast<std::size_t>(j) * d + j] = dim.omega_pow(j);
  return UnitaryMatrix::from_entries(d, std::move(m));
}

bool weyl_relation_holds(const UnitaryMatrix& z, const UnitaryMatrix& x, Cx omega, double tol) {
  return (z * x).max_abs_diff(omega * (x * z)) < tol;
}

bool check_commutation(const Dimension& dim, double tol) {
  return weyl_relation_holds(pauli_z(dim), pauli_x(dim), dim.omega(), tol);
}

}  // namespace mubenc
