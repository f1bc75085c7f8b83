#pragma once

#include <cstdint>
#include <vector>

namespace schutz {

/// GF(2ⁿ) for 1 ≤ n ≤ 12 in the polynomial basis of the Conway polynomial.
/// An element is a bit mask, bit i holding the coefficient of xⁱ.
class GF2n {
 public:
  using Elem = std::uint32_t;

  explicit GF2n(unsigned n);

  /// Conway polynomial of degree n, coefficients ascending (n+1 entries).
  static std::vector<int> conway_polynomial(unsigned n);

  unsigned degree() const { return n_; }
  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  /// The Conway polynomial as a bit mask including the xⁿ term.
  std::uint32_t modulus() const { return modulus_; }

  /// x, a primitive element because Conway polynomials are primitive.
  Elem generator() const { return antilog_[1 % (size() - 1)]; }

  static Elem add(Elem a, Elem b) { return a ^ b; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const;
  /// Multiplicative order of a non-zero element.
  std::uint32_t multiplicative_order(Elem a) const;

 private:
  unsigned n_;
  std::uint32_t modulus_;
  std::vector<Elem> antilog_;          // gᵏ for k in [0, 2ⁿ−1)
  std::vector<std::uint32_t> log_;     // inverse of antilog_, log_[0] unused
};

/// Product of two GF(2) polynomials reduced modulo `modulus`, by shift and add.
std::uint32_t gf2_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus);

}  // namespace schutz
