#include "schutz/bigint.hpp"

#include "schutz/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <random>

namespace schutz {
namespace {

constexpr std::uint32_t kTrialLimit = 20000;

BigInt pollard_brent(const BigInt& n, std::uint64_t seed) {
  if (n % 2 == 0) return BigInt(2);
  std::mt19937_64 rng(seed);
  while (true) {
    BigInt y = BigInt(rng()) % n;
    BigInt c = BigInt(rng()) % (n - 1) + 1;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    BigInt g = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::vector<BigInt>& out, std::uint64_t seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  BigInt d = pollard_brent(n, seed);
  factor_into(d, out, seed + 1);
  factor_into(n / d, out, seed + 2);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr std::uint32_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (std::uint32_t p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 41 * 41) return true;
  return boost::multiprecision::miller_rabin_test(n, 32);
}

std::vector<BigInt> prime_divisors(const BigInt& value) {
  BigInt n = abs(value);
  std::vector<BigInt> primes;
  if (n <= 1) return primes;
  for (std::uint32_t p = 2; p < kTrialLimit && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      primes.emplace_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) factor_into(n, primes, 0x5eed);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

BigInt mod_floor(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& p) {
  BigInt r0 = mod_floor(a, p), r1 = p, s0 = 1, s1 = 0;
  if (r0 == 0) throw PreconditionError("mod_inverse: element is not invertible");
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (r0 != 1) throw PreconditionError("mod_inverse: modulus is not prime");
  return mod_floor(s0, p);
}

}  // namespace schutz
