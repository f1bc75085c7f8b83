#include "schutz/matrix.hpp"

#include "schutz/error.hpp"

#include <algorithm>
#include <sstream>

namespace schutz {

IntMatrix incidence_matrix(const Substitution& s) {
  return incidence_matrix(std::span<const Word>(s.images()), s.size());
}

IntMatrix incidence_matrix(const FreeGroupEndo& e) {
  const auto n = static_cast<Eigen::Index>(e.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Letter b = 0; b < e.size(); ++b)
    for (const SignedLetter& x : e.image(b).letters()) m(x.letter, b) += x.exponent;
  return m;
}

IntMatrix incidence_matrix(std::span<const Word> images, std::size_t target_size) {
  IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(target_size), static_cast<Eigen::Index>(images.size()));
  for (std::size_t b = 0; b < images.size(); ++b) {
    std::vector<std::size_t> counts(target_size, 0);
    for (Letter a : images[b]) {
      if (a >= target_size) throw PreconditionError("incidence_matrix: letter outside target alphabet");
      ++counts[a];
    }
    for (std::size_t a = 0; a < target_size; ++a)
      m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = BigInt(counts[a]);
  }
  return m;
}

namespace detail {

IntPoly char_poly_bareiss(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("char_poly: matrix must be square");
  const auto n = static_cast<std::size_t>(m.rows());
  if (n == 0) return IntPoly::constant(BigInt(1));

  // Work on x·I − M with entries in Z[x]. Leading principal minors of the
  // characteristic matrix are monic, so every Bareiss pivot is non-zero and
  // every division is by a monic polynomial.
  std::vector<IntPoly> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntPoly e = IntPoly::constant(-m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
      if (i == j) e += x_power(1);
      a[i * n + j] = std::move(e);
    }
  auto at = [&](std::size_t i, std::size_t j) -> IntPoly& { return a[i * n + j]; };

  IntPoly prev = IntPoly::constant(BigInt(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const IntPoly& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly num = pivot * at(i, j) - at(i, k) * at(k, j);
        at(i, j) = divmod_monic(num, prev).first;
      }
    }
    prev = at(k, k);
  }
  return at(n - 1, n - 1);
}

std::size_t rank_mod_p(IntMatrix m, const BigInt& p) {
  if (!is_prime(p)) throw PreconditionError("rank_mod_p: " + p.str() + " is not prime");
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = mod_floor(m(i, j), p);
  std::size_t rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index piv = row;
    while (piv < rows && m(piv, col) == 0) ++piv;
    if (piv == rows) continue;
    m.row(piv).swap(m.row(row));
    const BigInt inv = mod_inverse(m(row, col), p);
    for (Eigen::Index j = col; j < cols; ++j) m(row, j) = mod_floor(m(row, j) * inv, p);
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      const BigInt f = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j) m(i, j) = mod_floor(m(i, j) - f * m(row, j), p);
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace detail

BigInt pseudodeterminant(const IntMatrix& m) {
  const IntPoly rev = reciprocal(char_poly(m));
  return rev.degree() % 2 == 0 ? rev.leading() : BigInt(-rev.leading());
}

bool is_primitive_matrix(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("is_primitive_matrix: matrix must be square");
  const Eigen::Index d = m.rows();
  if (d == 0) return false;
  using Pattern = DenseMatrix<int>;
  Pattern pat(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      if (m(i, j) < 0) throw PreconditionError("is_primitive_matrix: negative entry");
      pat(i, j) = m(i, j) > 0 ? 1 : 0;
    }
  const auto boolean_product = [d](const Pattern& x, const Pattern& y) {
    Pattern r = Pattern::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index k = 0; k < d; ++k)
        if (x(i, k))
          for (Eigen::Index j = 0; j < d; ++j)
            if (y(k, j)) r(i, j) = 1;
    return r;
  };
  unsigned long exponent = d == 1 ? 1 : static_cast<unsigned long>(d * d - 2 * d + 2);
  Pattern result = Pattern::Identity(d, d), base = pat;
  while (exponent > 0) {
    if (exponent & 1ul) result = boolean_product(result, base);
    exponent >>= 1;
    if (exponent > 0) base = boolean_product(base, base);
  }
  return (result.array() > 0).all();
}

IntMatrix reduce_mod_p(const IntMatrix& m, const BigInt& p) {
  if (!is_prime(p)) throw PreconditionError("reduce_mod_p: " + p.str() + " is not prime");
  IntMatrix r = m;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j) r(i, j) = mod_floor(r(i, j), p);
  return r;
}

IntMatrix power_mod_p(const IntMatrix& m, unsigned k, const BigInt& p) {
  IntMatrix base = reduce_mod_p(m, p);
  IntMatrix result = IntMatrix::Identity(m.rows(), m.cols());
  const auto reduce = [&p](IntMatrix x) {
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j) x(i, j) = mod_floor(x(i, j), p);
    return x;
  };
  while (k > 0) {
    if (k & 1u) result = reduce(result * base);
    k >>= 1;
    if (k > 0) base = reduce(base * base);
  }
  return result;
}

std::string to_string(const IntMatrix& m) {
  std::vector<std::size_t> width(static_cast<std::size_t>(m.cols()), 1);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], m(i, j).str().size());
  std::ostringstream out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      std::string s = m(i, j).str();
      out << (j ? " " : "") << std::string(width[static_cast<std::size_t>(j)] - s.size(), ' ') << s;
    }
    out << "]\n";
  }
  return out.str();
}

}  // namespace schutz
