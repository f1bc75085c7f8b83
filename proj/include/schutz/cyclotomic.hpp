#pragma once

#include "schutz/polynomial.hpp"

namespace schutz {

unsigned long euler_totient(unsigned long n);

/// x^n - 1
IntPoly x_power_minus_one(std::size_t n);

/// True iff ±ξ is a product of cyclotomic polynomials. Peels gcd(ξ, x^N − 1)
/// for every N with φ(N) ≤ deg ξ and accepts when the residue is ±1.
bool cyclotomic_product_check(const IntPoly& xi);

/// Coprime cyclotomic pair relating the reciprocal characteristic polynomial
/// of a power φⁿ (first) to that of a return substitution (second):
///   xi1 · first = ± xi2 · second.
struct XiPair {
  IntPoly xi1;
  IntPoly xi2;
};

/// With g the primitive gcd of the inputs, xi1 = second/g and xi2 = first/g,
/// both normalised to a positive leading coefficient. Verifies the relation,
/// coprimality and the cyclotomic property; throws InvariantError otherwise.
XiPair xi_pair(const IntPoly& power_rev, const IntPoly& return_rev);

}  // namespace schutz
