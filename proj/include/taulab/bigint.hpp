#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "taulab/rng.hpp"

namespace taulab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Uniform integer in [0, bound) by rejection on the bit length of bound.
BigInt uniform_below(const BigInt& bound, CounterRng& rng);

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace taulab
