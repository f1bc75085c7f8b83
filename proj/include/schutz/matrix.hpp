#pragma once

#include "schutz/bigint.hpp"
#include "schutz/polynomial.hpp"
#include "schutz/word.hpp"

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <span>
#include <string>

namespace schutz {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact integer matrix; 0×0 is allowed.
using IntMatrix = DenseMatrix<BigInt>;

/// Entry (a, b) = number of a's in φ(b).
IntMatrix incidence_matrix(const Substitution& s);
/// Entry (a, b) = exponent sum of a in φ(b).
IntMatrix incidence_matrix(const FreeGroupEndo& e);
/// Rectangular A×B matrix of a monoid morphism B* → A* given by its images.
IntMatrix incidence_matrix(std::span<const Word> images, std::size_t target_size);

namespace detail {
IntPoly char_poly_bareiss(const IntMatrix& m);
std::size_t rank_mod_p(IntMatrix m, const BigInt& p);
}  // namespace detail

/// det(x·I − M), by fraction-free elimination over Z[x]. The empty matrix
/// gives the constant 1.
template <typename Derived>
IntPoly char_poly(const Eigen::MatrixBase<Derived>& m) {
  return detail::char_poly_bareiss(m.template cast<BigInt>());
}

/// Mᵏ by repeated squaring; M⁰ = I.
template <typename Derived>
DenseMatrix<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& m, unsigned k) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_power: matrix must be square");
  DenseMatrix<Scalar> result = DenseMatrix<Scalar>::Identity(m.rows(), m.cols());
  DenseMatrix<Scalar> base = m;
  while (k > 0) {
    if (k & 1u) result = (result * base).eval();
    k >>= 1;
    if (k > 0) base = (base * base).eval();
  }
  return result;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

/// Product of the non-zero eigenvalues with multiplicity, computed as
/// (−1)^d times the leading coefficient of the degree-d reciprocal
/// characteristic polynomial. Empty or nilpotent matrices give 1.
BigInt pseudodeterminant(const IntMatrix& m);

/// M^d = 0 for d the dimension (Cayley–Hamilton); the empty matrix is nilpotent.
template <typename Derived>
bool is_nilpotent(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_nilpotent: matrix must be square");
  if (m.rows() == 0) return true;
  return is_zero_matrix(matrix_power(m, static_cast<unsigned>(m.rows())));
}

/// Some power is entrywise positive; checked at the Wielandt exponent.
/// Throws PreconditionError on a negative entry.
bool is_primitive_matrix(const IntMatrix& m);

/// Entries reduced to canonical residues in [0, p). Throws if p is not prime.
IntMatrix reduce_mod_p(const IntMatrix& m, const BigInt& p);

/// Rank over Z/pZ.
template <typename Derived>
std::size_t rank_mod_p(const Eigen::MatrixBase<Derived>& m, const BigInt& p) {
  return detail::rank_mod_p(m.template cast<BigInt>(), p);
}

/// Mᵏ over Z/pZ.
IntMatrix power_mod_p(const IntMatrix& m, unsigned k, const BigInt& p);

/// Row-major rendering with right-aligned columns.
std::string to_string(const IntMatrix& m);

}  // namespace schutz
