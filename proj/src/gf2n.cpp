#include "schutz/gf2n.hpp"

#include "schutz/error.hpp"

#include <numeric>

namespace schutz {

namespace {

// Conway polynomials C(2, n), ascending coefficients.
const std::vector<std::vector<int>>& conway_table() {
  static const std::vector<std::vector<int>> table = {
      {1, 1},
      {1, 1, 1},
      {1, 1, 0, 1},
      {1, 1, 0, 0, 1},
      {1, 0, 1, 0, 0, 1},
      {1, 1, 0, 1, 1, 0, 1},
      {1, 1, 0, 0, 0, 0, 0, 1},
      {1, 0, 1, 1, 1, 0, 0, 0, 1},
      {1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
      {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1},
      {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1},
  };
  return table;
}

}  // namespace

std::uint32_t gf2_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  const int deg = 31 - __builtin_clz(modulus);
  std::uint32_t acc = 0;
  while (b) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> deg & 1u) a ^= modulus;
  }
  return acc;
}

std::vector<int> GF2n::conway_polynomial(unsigned n) {
  if (n < 1 || n > conway_table().size()) throw PreconditionError("GF(2^n) is supported for 1 <= n <= 12");
  return conway_table()[n - 1];
}

GF2n::GF2n(unsigned n) : n_(n), modulus_(0) {
  const std::vector<int> coeffs = conway_polynomial(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i]) modulus_ |= std::uint32_t{1} << i;
  const std::uint32_t units = size() - 1;
  antilog_.resize(units);
  log_.assign(size(), 0);
  const std::uint32_t x = n == 1 ? 1u : 2u;  // x mod (x + 1) = 1
  Elem cur = 1;
  for (std::uint32_t k = 0; k < units; ++k) {
    if (k > 0 && cur == 1) throw InvariantError("GF2n: x is not primitive for the shipped polynomial");
    antilog_[k] = cur;
    log_[cur] = k;
    cur = gf2_mulmod(cur, x, modulus_);
  }
  if (cur != 1) throw InvariantError("GF2n: multiplicative group does not close");
}

GF2n::Elem GF2n::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t s = log_[a] + log_[b];
  const std::uint32_t units = size() - 1;
  return antilog_[s >= units ? s - units : s];
}

GF2n::Elem GF2n::inv(Elem a) const {
  if (a == 0) throw PreconditionError("GF2n: zero has no inverse");
  const std::uint32_t units = size() - 1;
  return antilog_[(units - log_[a]) % units];
}

GF2n::Elem GF2n::pow(Elem a, std::uint64_t k) const {
  if (a == 0) return k == 0 ? 1 : 0;
  const std::uint64_t units = size() - 1;
  return antilog_[(static_cast<std::uint64_t>(log_[a]) * (k % units)) % units];
}

std::uint32_t GF2n::multiplicative_order(Elem a) const {
  if (a == 0) throw PreconditionError("GF2n: zero has no multiplicative order");
  const std::uint32_t units = size() - 1;
  return units / std::gcd(units, log_[a] == 0 ? units : log_[a]);
}

}  // namespace schutz
