#include "taulab/bigint.hpp"

#include <stdexcept>

namespace taulab {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;  // exact: out is C(n-k+i, i) here
  }
  return out;
}

BigInt uniform_below(const BigInt& bound, CounterRng& rng) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  const std::size_t bits = boost::multiprecision::msb(bound) + 1;
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  for (;;) {
    BigInt x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t chunk = rng();
      if (w == 0 && top_bits < 64) chunk &= (std::uint64_t{1} << top_bits) - 1;
      x <<= 64;
      x += chunk;
    }
    if (x < bound) return x;
  }
}

}  // namespace taulab
