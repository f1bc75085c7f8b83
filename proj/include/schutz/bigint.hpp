#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace schutz {

/// Exact integer scalar used for every matrix and polynomial coefficient.
/// Expression templates are off so the type composes with Eigen.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Deterministic for n < 3.3e24, overwhelmingly likely beyond.
bool is_prime(const BigInt& n);

/// Distinct prime divisors of |n| in increasing order; empty for n in {-1,0,1}.
std::vector<BigInt> prime_divisors(const BigInt& n);

/// Floor-mod: result in [0, m).
BigInt mod_floor(const BigInt& a, const BigInt& m);

/// Inverse of a modulo the prime p; a must be non-zero mod p.
BigInt mod_inverse(const BigInt& a, const BigInt& p);

inline std::string to_string(const BigInt& n) { return n.str(); }

}  // namespace schutz
