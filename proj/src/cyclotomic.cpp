#include "schutz/cyclotomic.hpp"

#include "schutz/error.hpp"

namespace schutz {

unsigned long euler_totient(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly x_power_minus_one(std::size_t n) { return x_power(n) - IntPoly::constant(BigInt(1)); }

bool cyclotomic_product_check(const IntPoly& xi) {
  if (xi.is_zero()) throw PreconditionError("cyclotomic_product_check: zero polynomial");
  IntPoly rest = xi;
  // φ(N) ≥ sqrt(N/2), so N ≤ 2·deg² covers every cyclotomic factor.
  const unsigned long deg = static_cast<unsigned long>(xi.degree());
  const unsigned long limit = 2 * deg * deg + 2;
  for (unsigned long n = 1; n <= limit && rest.degree() > 0; ++n) {
    if (euler_totient(n) > static_cast<unsigned long>(rest.degree())) continue;
    const IntPoly xn = x_power_minus_one(n);
    while (rest.degree() > 0) {
      IntPoly g = gcd(rest, xn);
      if (g.degree() <= 0) break;
      rest = divide_exact(rest, g);
    }
  }
  return rest.degree() == 0 && abs(rest.leading()) == 1;
}

XiPair xi_pair(const IntPoly& power_rev, const IntPoly& return_rev) {
  if (power_rev.is_zero() || return_rev.is_zero()) throw PreconditionError("xi_pair: zero polynomial");
  IntPoly g = gcd(power_rev, return_rev);
  XiPair out{with_positive_leading(divide_exact(return_rev, g)), with_positive_leading(divide_exact(power_rev, g))};

  const IntPoly lhs = out.xi1 * power_rev, rhs = out.xi2 * return_rev;
  if (lhs != rhs && lhs != -rhs) throw InvariantError("xi_pair: relation xi1*a = +-xi2*b fails");
  if (gcd(out.xi1, out.xi2).degree() > 0) throw InvariantError("xi_pair: xi1 and xi2 are not coprime");
  if (!cyclotomic_product_check(out.xi1) || !cyclotomic_product_check(out.xi2))
    throw InvariantError("xi_pair: non-cyclotomic factor (" + to_string(out.xi1) + ", " + to_string(out.xi2) +
                         "); inputs are not connection data");
  return out;
}

}  // namespace schutz
