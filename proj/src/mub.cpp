#include "mubenc/mub.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mubenc/errors.hpp"

namespace mubenc {

std::int64_t partial_index_sum(int d, int j) {
  const std::int64_t dd = d;
  return mod((dd - j) * (dd - 1 + j) / 2, dd);
}

QuditState mub_state(const Dimension& dim, int basis, int element) {
  const int d = dim.value();
  if (basis < 1 || basis > d + 1) {
    throw IndexOutOfRange("basis " + std::to_string(basis) + " outside 1.." + std::to_string(d + 1));
  }
  if (element < 0 || element >= d) {
    throw IndexOutOfRange("element " + std::to_string(element) + " outside 0.." + std::to_string(d - 1));
  }
  if (basis == d + 1) return QuditState::basis(d, element);

  const std::int64_t k = basis - 1;
  const bool half_step = (k * (d - 1)) % 2 != 0;
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<Cx> amps(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const std::int64_t e = static_cast<std::int64_t>(element) * (d - j) - k * partial_index_sum(d, j);
    Cx a = norm * dim.omega_pow(e);
    if (half_step) a *= std::polar(1.0, -std::numbers::pi * j / d);
    amps[static_cast<std::size_t>(j)] = a;
  }
  return QuditState::from_amplitudes(std::move(amps));
}

MubFamily::MubFamily(Dimension dim) : dim_(dim) {
  const int d = dim_.value();
  bases_.reserve(static_cast<std::size_t>(d) + 1);
  for (int b = 1; b <= d + 1; ++b) {
    std::vector<QuditState> basis;
    basis.reserve(static_cast<std::size_t>(d));
    for (int t = 0; t < d; ++t) basis.push_back(mub_state(dim_, b, t));
    bases_.push_back(std::move(basis));
  }
}

const QuditState& MubFamily::state(int basis, int element) const {
  if (basis < 1 || basis > basis_count() || element < 0 || element >= d()) {
    throw IndexOutOfRange("MUB index (" + std::to_string(basis) + ", " + std::to_string(element) +
                          ") out of range");
  }
  return bases_[static_cast<std::size_t>(basis - 1)][static_cast<std::size_t>(element)];
}

void MubFamily::verify(double tol) const {
  const int d = this->d();
  const double unbiased = 1.0 / d;
  for (int b = 1; b <= basis_count(); ++b) {
    for (int bp = b; bp <= basis_count(); ++bp) {
      for (int t = 0; t < d; ++t) {
        for (int tp = 0; tp < d; ++tp) {
          const double overlap = std::abs(inner(state(b, t), state(bp, tp)));
          if (b == bp) {
            const double expected = t == tp ? 1.0 : 0.0;
            if (std::abs(overlap - expected) >= tol) {
              throw MubInvariantViolation("basis " + std::to_string(b) + " is not orthonormal", b, bp, t, tp);
            }
          } else if (std::abs(overlap * overlap - unbiased) >= tol) {
            throw MubInvariantViolation(
                "bases " + std::to_string(b) + " and " + std::to_string(bp) + " are not unbiased", b, bp, t, tp);
          }
        }
      }
    }
  }
}

int MubFamily::identify(int basis, const QuditState& s, double tol) const {
  for (int t = 0; t < d(); ++t) {
    if (equal_up_to_phase(state(basis, t), s, tol)) return t;
  }
  return -1;
}

UnitaryMatrix basis_generator(const Dimension& dim, int basis) {
  const int d = dim.value();
  if (basis < 1 || basis > d + 1) throw IndexOutOfRange("basis out of range");
  if (basis == d + 1) return pauli_z(dim);
  return pauli_x(dim) * pauli_z(dim).pow(basis - 1);
}

MubFamily mub_family(const Dimension& dim, double tol) {
  MubFamily fam(dim);
  fam.verify(tol);
  for (int b = 1; b <= dim.value(); ++b) {
    const UnitaryMatrix gen = basis_generator(dim, b);
    for (int t = 0; t < dim.value(); ++t) {
      if (!equal_up_to_phase(apply(gen, fam.state(b, t)), fam.state(b, t), tol)) {
        throw MubInvariantViolation("state is not an eigenvector of its generator", b, b, t, t);
      }
    }
  }
  return fam;
}

}  // namespace mubenc
