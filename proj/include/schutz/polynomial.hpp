#pragma once

#include "schutz/bigint.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace schutz {

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients and degree -1.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> ascending) : c_(ascending) { normalize(); }
  explicit Polynomial(std::vector<Scalar> ascending) : c_(std::move(ascending)) { normalize(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }
  static Polynomial monomial(Scalar c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  /// x - root
  static Polynomial linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  const Scalar& leading() const { return c_.back(); }

  /// Exponent of the largest power of x dividing the polynomial (0 for zero).
  std::size_t zero_multiplicity() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return c_.empty() ? 0 : k;
  }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Scalar& k) {
    for (auto& a : c_) a *= k;
    normalize();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& k) { return a *= k; }
  friend Polynomial operator*(const Scalar& k, Polynomial a) { return a *= k; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial&) const = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntPoly = Polynomial<BigInt>;

/// x^k
inline IntPoly x_power(std::size_t k) { return IntPoly::monomial(BigInt(1), k); }

/// Reciprocal ξ^rev(x) = x^deg ξ · ξ(1/x). Throws on the zero polynomial.
IntPoly reciprocal(const IntPoly& p);

/// gcd of the coefficients, non-negative; 0 for the zero polynomial.
BigInt content(const IntPoly& p);

/// p / content(p) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

/// Flips the sign so the leading coefficient is positive.
IntPoly with_positive_leading(const IntPoly& p);

/// Euclidean division over Z by a divisor with leading coefficient ±1.
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& b);

/// a = q·b exactly over Z; throws InvariantError if b does not divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder: lc(b)^(deg a − deg b + 1)·a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Greatest common divisor in Z[x], normalised primitive with positive
/// leading coefficient (gcd(0,0) = 0). Subresultant remainder sequence.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Human-readable form in x, e.g. "4x^2 - 5x + 1".
std::string to_string(const IntPoly& p);

/// Polynomial over Z/pZ, coefficients kept as canonical residues.
class ModPoly {
 public:
  ModPoly(BigInt p, std::vector<BigInt> coefficients);

  const BigInt& modulus() const { return p_; }
  int degree() const { return poly_.degree(); }
  bool is_zero() const { return poly_.is_zero(); }
  const std::vector<BigInt>& coefficients() const { return poly_.coefficients(); }
  std::size_t zero_multiplicity() const { return poly_.zero_multiplicity(); }
  /// Same residues viewed as an integer polynomial.
  const IntPoly& lift() const { return poly_; }

  bool operator==(const ModPoly&) const = default;

 private:
  BigInt p_;
  IntPoly poly_;
};

/// Reduction of the coefficients modulo a prime p. Throws if p is not prime.
ModPoly reduce_mod_p(const IntPoly& f, const BigInt& p);

ModPoly reciprocal(const ModPoly& f);

/// Degree of the reciprocal polynomial; 0 for the zero polynomial.
template <typename P>
std::size_t reciprocal_degree(const P& f) {
  if (f.is_zero()) return 0;
  return static_cast<std::size_t>(f.degree()) - f.zero_multiplicity();
}

std::string to_string(const ModPoly& p);

}  // namespace schutz
