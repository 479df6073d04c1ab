#include "mubenc/codeword.hpp"

#include <limits>
#include <string>

#include "mubenc/dimension.hpp"
#include "mubenc/errors.hpp"

namespace mubenc {

Codeword::Codeword(int d, std::vector<std::int64_t> entries) : d_(d), a_(std::move(entries)) {
  if (d < 2 || a_.size() != static_cast<std::size_t>(d)) {
    throw InvalidDimension("codeword for d=" + std::to_string(d) + " needs " + std::to_string(d) + " entries");
  }
  for (auto& x : a_) x = mod(x, d);
}

Codeword Codeword::zero(int d) { return Codeword(d, std::vector<std::int64_t>(static_cast<std::size_t>(d), 0)); }

Codeword Codeword::from_index(int d, std::uint64_t index) {
  if (index >= codeword_count(d)) throw IndexOutOfRange("codeword index out of range");
  std::vector<std::int64_t> a(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    a[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(d));
    index /= static_cast<std::uint64_t>(d);
  }
  return Codeword(d, std::move(a));
}

Codeword Codeword::operator+(const Codeword& other) const {
  if (other.d_ != d_) throw DimensionMismatch("adding codewords of different dimensions");
  std::vector<std::int64_t> sum(a_);
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.a_[i];
  return Codeword(d_, std::move(sum));
}

std::uint64_t codeword_count(int d) {
  if (d < 2) throw InvalidDimension("codeword dimension must be at least 2");
  std::uint64_t n = 1;
  for (int i = 0; i < d; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d)) {
      throw InvalidDimension("d^d overflows for d=" + std::to_string(d));
    }
    n *= static_cast<std::uint64_t>(d);
  }
  return n;
}

}  // namespace mubenc
